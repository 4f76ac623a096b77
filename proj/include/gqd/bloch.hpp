#pragma once

// Generalized Gell-Mann generators and the Bloch (coherence vector /
// correlation matrix) representation of bipartite states.

#include <span>
#include <vector>

#include "gqd/density_matrix.hpp"

namespace gqd {

/// The d^2 - 1 traceless Hermitian generators of SU(d), normalized to
/// tr(g_i g_j) = 2 delta_ij. Default order: symmetric off-diagonal family in
/// lexicographic (j, k), j < k; then the antisymmetric family in the same
/// order; then the d - 1 diagonal generators.
class GeneratorBasis {
 public:
  explicit GeneratorBasis(Index d);

  Index dim() const noexcept { return dim_; }
  Index size() const noexcept { return static_cast<Index>(generators_.size()); }
  const ComplexMatrix& operator[](Index i) const { return generators_[static_cast<std::size_t>(i)]; }

  /// Same generators reordered: result[i] = (*this)[order[i]].
  GeneratorBasis permuted(std::span<const Index> order) const;

 private:
  GeneratorBasis(Index d, std::vector<ComplexMatrix> generators);

  Index dim_;
  std::vector<ComplexMatrix> generators_;
};

GeneratorBasis build_generator_basis(Index d);

/// rho = (1/mn) (I (x) I + sum x_i g_i (x) I + sum y_j I (x) g_j + sum t_ij g_i (x) g_j)
struct BlochRep {
  Index m = 0;
  Index n = 0;
  RealVector x;  // m^2 - 1
  RealVector y;  // n^2 - 1
  RealMatrix T;  // (m^2 - 1) x (n^2 - 1)
};

BlochRep decompose(const DensityMatrix& rho);
BlochRep decompose(const DensityMatrix& rho, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b);

/// Inverse of decompose. The result is Hermitian with unit trace but need not
/// be positive: not every (x, y, T) is a state.
ComplexMatrix reconstruct(const BlochRep& b);
ComplexMatrix reconstruct(const BlochRep& b, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b);

/// Coefficients c_ij = tr(rho X_i (x) Y_j) in the orthonormal operator bases
/// X_1 = I/sqrt(m), X_i = g_{i-1}/sqrt(2) (likewise Y_j). Row/column 0 is the
/// identity component.
struct CMatrix {
  Index m = 0;
  Index n = 0;
  RealMatrix entries;  // m^2 x n^2

  RealMatrix cct() const { return entries * entries.transpose(); }
};

/// Block form [[1/sqrt(mn), sqrt(2)/(n sqrt(m)) y^t], [sqrt(2)/(m sqrt(n)) x, 2/(mn) T]].
CMatrix build_c_matrix(const BlochRep& b);

/// Evaluates every c_ij by the trace formula directly from rho; used to
/// cross-check build_c_matrix.
CMatrix c_matrix_by_traces(const DensityMatrix& rho, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b);

/// Recovers (x, y, T) from the block layout of C.
BlochRep bloch_from_c_matrix(const CMatrix& c);

/// 1/(mn) + 2|y|^2/(n^2 m) + 2|x|^2/(m^2 n) + 4|T|^2/(m^2 n^2)
double cct_trace_from_bloch(const BlochRep& b);

}  // namespace gqd
