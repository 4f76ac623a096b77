#pragma once

namespace gqd {

/// Numerical thresholds shared by every module. Defaults are the values the
/// library is validated against; callers may pass a modified copy.
struct Tolerances {
  // Jacobi eigensolver
  double jacobi_relative_offdiag = 1e-12;
  int jacobi_max_sweeps = 100;
  // relative gap below which doubled eigenvalues of the real embedding of a
  // Hermitian matrix are treated as one cluster
  double eigen_cluster = 1e-9;

  // density-matrix validation
  double hermiticity = 1e-12;
  double symmetry = 1e-12;
  double unit_trace = 1e-10;
  double min_eigenvalue = -1e-10;

  // measurement bases and probability vectors
  double orthonormality = 1e-10;
  double probability_sum = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace gqd
