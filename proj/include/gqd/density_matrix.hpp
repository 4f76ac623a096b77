#pragma once

#include <optional>
#include <utility>

#include "gqd/matrix_core.hpp"

namespace gqd {

/// Hermitian, unit-trace, positive-semidefinite operator. Validated once at
/// construction; every instance that exists satisfies the invariants.
class DensityMatrix {
 public:
  /// Single-system state.
  explicit DensityMatrix(ComplexMatrix matrix, const Tolerances& tol = kDefaultTolerances);
  /// State on H^a (x) H^b with dim H^a = m, dim H^b = n.
  DensityMatrix(ComplexMatrix matrix, Index m, Index n, const Tolerances& tol = kDefaultTolerances);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

  bool has_bipartition() const noexcept { return dims_.has_value(); }
  /// Throws ValidationError("bipartition") for single-system states.
  Index m() const;
  Index n() const;

  DensityMatrix with_bipartition(Index m, Index n) const;
  DensityMatrix reduced(Subsystem keep) const;

  double purity() const;

 private:
  ComplexMatrix matrix_;
  std::optional<std::pair<Index, Index>> dims_;
};

/// Runs the density-matrix checks without constructing; throws the same
/// ValidationError the constructor would.
void validate_density_matrix(const ComplexMatrix& matrix, const Tolerances& tol = kDefaultTolerances);

}  // namespace gqd
