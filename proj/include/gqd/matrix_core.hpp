#pragma once

// Dense matrix substrate: Jacobi eigensolvers for real symmetric and complex
// Hermitian matrices, Kronecker products and partial traces. Everything here
// is templated on the scalar type and accepts Eigen expressions.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "gqd/error.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Spectral decomposition with eigenvalues sorted non-increasing; column k of
/// `vectors` is the unit eigenvector belonging to `values[k]`.
template <typename Scalar>
struct EigenDecomposition {
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

  Eigen::Matrix<RealScalar, Eigen::Dynamic, 1> values;
  DenseMatrix<Scalar> vectors;
};

template <typename Derived>
typename Derived::RealScalar max_abs_entry(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

/// max_ij |A_ij - conj(A_ji)|
template <typename Derived>
typename Derived::RealScalar hermitian_defect(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double relative_tol) {
  return a.rows() == a.cols() && hermitian_defect(a) <= relative_tol * max_abs_entry(a);
}

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << what << " must be square, got " << a.rows() << "x" << a.cols();
    throw ValidationError("dimension", os.str());
  }
}

template <typename Real>
Real off_diagonal_norm(const DenseMatrix<Real>& a) {
  Real sum = 0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Indices of `values` ordered non-increasing; ties keep original order.
template <typename Vector>
std::vector<Index> descending_order(const Vector& values) {
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index l, Index r) { return values[l] > values[r]; });
  return order;
}

// Cyclic Jacobi on a real symmetric matrix; no input validation.
template <typename Real>
EigenDecomposition<Real> jacobi_eigen(DenseMatrix<Real> a, const Tolerances& tol) {
  const Index d = a.rows();
  DenseMatrix<Real> v = DenseMatrix<Real>::Identity(d, d);
  const Real target = static_cast<Real>(tol.jacobi_relative_offdiag) * a.norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps++ == tol.jacobi_max_sweeps) {
      std::ostringstream os;
      os << "Jacobi eigensolver did not converge in " << tol.jacobi_max_sweeps
         << " sweeps (dimension " << d << ")";
      throw ConvergenceError(os.str());
    }
    for (Index p = 0; p < d; ++p) {
      for (Index q = p + 1; q < d; ++q) {
        if (a(p, q) == Real(0)) continue;
        Eigen::JacobiRotation<Real> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Real(0);
      }
    }
  }

  const Eigen::Matrix<Real, Eigen::Dynamic, 1> diag = a.diagonal();
  const auto order = descending_order(diag);
  EigenDecomposition<Real> out;
  out.values.resize(d);
  out.vectors.resize(d, d);
  for (Index k = 0; k < d; ++k) {
    out.values[k] = diag[order[k]];
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace detail

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Throws ValidationError("symmetry") when the relative asymmetry
/// exceeds `tol.symmetry`, ConvergenceError when the sweep budget runs out.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> sym_eigen(const Eigen::MatrixBase<Derived>& a,
                                                       const Tolerances& tol = kDefaultTolerances) {
  using Real = typename Derived::Scalar;
  static_assert(!Eigen::NumTraits<Real>::IsComplex, "sym_eigen takes real matrices; use herm_eigen");
  detail::require_square(a, "symmetric matrix");
  const Real defect = hermitian_defect(a);
  if (defect > static_cast<Real>(tol.symmetry) * max_abs_entry(a)) {
    std::ostringstream os;
    os << "matrix is not symmetric, max asymmetry " << defect;
    throw ValidationError("symmetry", os.str());
  }
  return detail::jacobi_eigen<Real>(a.eval(), tol);
}

/// Eigendecomposition of a complex Hermitian matrix. The d x d problem is
/// embedded as the 2d x 2d real symmetric matrix [[Re A, -Im A], [Im A, Re A]],
/// whose spectrum is that of A with every eigenvalue doubled. Each cluster of
/// 2k equal real eigenvalues yields k complex eigenvectors u + iv, picked by
/// pivoted Gram-Schmidt.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> herm_eigen(const Eigen::MatrixBase<Derived>& a,
                                                        const Tolerances& tol = kDefaultTolerances) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using CVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  detail::require_square(a, "Hermitian matrix");
  const Real defect = hermitian_defect(a);
  if (defect > static_cast<Real>(tol.hermiticity) * max_abs_entry(a)) {
    std::ostringstream os;
    os << "matrix is not Hermitian, max defect " << defect;
    throw ValidationError("hermiticity", os.str());
  }

  const Index d = a.rows();
  DenseMatrix<Real> embed(2 * d, 2 * d);
  embed << a.real(), -a.imag(), a.imag(), a.real();
  const auto doubled = detail::jacobi_eigen<Real>(embed, tol);

  Real scale = 1;
  if (d > 0) scale += doubled.values.cwiseAbs().maxCoeff();
  const Real gap = static_cast<Real>(tol.eigen_cluster) * scale;

  std::vector<Real> values;
  std::vector<CVector> vectors;
  values.reserve(static_cast<std::size_t>(d));
  vectors.reserve(static_cast<std::size_t>(d));

  for (Index start = 0; start < 2 * d;) {
    Index end = start + 1;
    while (end < 2 * d && doubled.values[end - 1] - doubled.values[end] <= gap) ++end;
    if ((end - start) % 2 != 0) {
      throw ConvergenceError("herm_eigen: unpaired eigenvalue in real embedding");
    }

    std::vector<CVector> residual;
    for (Index c = start; c < end; ++c) {
      CVector w(d);
      for (Index i = 0; i < d; ++i) w[i] = Scalar(doubled.vectors(i, c), doubled.vectors(i + d, c));
      residual.push_back(std::move(w));
    }
    for (Index picked = 0; picked < (end - start) / 2; ++picked) {
      auto best = std::max_element(residual.begin(), residual.end(),
                                   [](const CVector& l, const CVector& r) { return l.norm() < r.norm(); });
      CVector q = best->normalized();
      residual.erase(best);
      for (auto& r : residual) r -= q * q.dot(r);
      values.push_back(std::real(q.dot(a * q)));
      vectors.push_back(std::move(q));
    }
    start = end;
  }

  Eigen::Matrix<Real, Eigen::Dynamic, 1> unsorted =
      Eigen::Map<Eigen::Matrix<Real, Eigen::Dynamic, 1>>(values.data(), d);
  const auto order = detail::descending_order(unsorted);
  EigenDecomposition<Scalar> out;
  out.values.resize(d);
  out.vectors.resize(d, d);
  for (Index k = 0; k < d; ++k) {
    out.values[k] = unsorted[order[k]];
    out.vectors.col(k) = vectors[static_cast<std::size_t>(order[k])];
  }
  return out;
}

/// Kronecker product A (x) B.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DA::Scalar, typename DB::Scalar>::ReturnType;
  const Index br = b.rows();
  const Index bc = b.cols();
  DenseMatrix<Scalar> out(a.rows() * br, a.cols() * bc);
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out.block(i * br, j * bc, br, bc) = Scalar(a(i, j)) * b.template cast<Scalar>();
  return out;
}

enum class Subsystem { A, B };

/// Reduced operator of the kept factor of an (m*n) x (m*n) operator on
/// H^a (x) H^b, with basis index a*n + b.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& rho, Index m, Index n,
                                                    Subsystem keep) {
  using Scalar = typename Derived::Scalar;
  if (m < 1 || n < 1 || rho.rows() != m * n || rho.cols() != m * n) {
    std::ostringstream os;
    os << "partial trace expects a " << m * n << "x" << m * n << " operator for dims (" << m << ", " << n
       << "), got " << rho.rows() << "x" << rho.cols();
    throw ValidationError("dimension", os.str());
  }
  if (keep == Subsystem::A) {
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(m, m);
    for (Index a = 0; a < m; ++a)
      for (Index ap = 0; ap < m; ++ap)
        for (Index b = 0; b < n; ++b) out(a, ap) += rho(a * n + b, ap * n + b);
    return out;
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n, n);
  for (Index b = 0; b < n; ++b)
    for (Index bp = 0; bp < n; ++bp)
      for (Index a = 0; a < m; ++a) out(b, bp) += rho(a * n + b, a * n + bp);
  return out;
}

}  // namespace gqd
