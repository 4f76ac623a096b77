#include "gqd/density_matrix.hpp"

#include <sstream>

namespace gqd {

void validate_density_matrix(const ComplexMatrix& matrix, const Tolerances& tol) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    std::ostringstream os;
    os << "density matrix must be square and non-empty, got " << matrix.rows() << "x" << matrix.cols();
    throw ValidationError("dimension", os.str());
  }
  if (!matrix.allFinite()) throw ValidationError("finiteness", "density matrix has non-finite entries");

  const double defect = hermitian_defect(matrix);
  if (defect > tol.hermiticity * max_abs_entry(matrix)) {
    std::ostringstream os;
    os << "max |rho_ij - conj(rho_ji)| = " << defect;
    throw ValidationError("hermiticity", os.str());
  }
  const Complex tr = matrix.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.unit_trace) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << tr.real() << " (expected 1)";
    throw ValidationError("trace", os.str());
  }
  const auto eig = herm_eigen(matrix, tol);
  const double lowest = eig.values[eig.values.size() - 1];
  if (lowest < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "minimum eigenvalue " << lowest;
    throw ValidationError("positivity", os.str());
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const Tolerances& tol) : matrix_(std::move(matrix)) {
  validate_density_matrix(matrix_, tol);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Index m, Index n, const Tolerances& tol)
    : matrix_(std::move(matrix)), dims_(std::pair{m, n}) {
  if (m < 1 || n < 1 || matrix_.rows() != m * n) {
    std::ostringstream os;
    os << "bipartition (" << m << ", " << n << ") does not match matrix dimension " << matrix_.rows();
    throw ValidationError("dimension", os.str());
  }
  validate_density_matrix(matrix_, tol);
}

Index DensityMatrix::m() const {
  if (!dims_) throw ValidationError("bipartition", "state has no declared bipartition");
  return dims_->first;
}

Index DensityMatrix::n() const {
  if (!dims_) throw ValidationError("bipartition", "state has no declared bipartition");
  return dims_->second;
}

DensityMatrix DensityMatrix::with_bipartition(Index m, Index n) const {
  return DensityMatrix(matrix_, m, n);
}

DensityMatrix DensityMatrix::reduced(Subsystem keep) const {
  return DensityMatrix(partial_trace(matrix_, m(), n(), keep));
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

}  // namespace gqd
