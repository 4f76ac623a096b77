#pragma once

// Independent checks on the bounds: the squared Hilbert-Schmidt distance from
// rho to its post-measurement state, minimized over von Neumann measurements
// on subsystem A. Every Pi^a(rho) is classical-quantum, so any measurement
// yields an upper bound on the geometric discord; for a qubit A the sphere
// search is exhaustive up to its resolution.

#include <cstdint>
#include <span>

#include "gqd/bloch.hpp"
#include "gqd/states.hpp"

namespace gqd {

/// Orthonormal basis {|k>} of H^a, stored as the columns of `kets()`.
class MeasurementBasis {
 public:
  explicit MeasurementBasis(ComplexMatrix kets, const Tolerances& tol = kDefaultTolerances);

  static MeasurementBasis computational(Index m);
  /// Eigenbasis of n.sigma: columns |+n>, |-n> for a unit 3-vector n.
  static MeasurementBasis qubit(const Eigen::Vector3d& direction);

  Index dim() const noexcept { return kets_.cols(); }
  const ComplexMatrix& kets() const noexcept { return kets_; }
  ComplexMatrix projector(Index k) const { return kets_.col(k) * kets_.col(k).adjoint(); }

 private:
  ComplexMatrix kets_;
};

/// sum_k (P_k (x) I) rho (P_k (x) I)
DensityMatrix apply_measurement(const DensityMatrix& rho, const MeasurementBasis& basis);

/// tr(rho - Pi(rho))^2
double distance_after_measurement(const DensityMatrix& rho, const MeasurementBasis& basis);

struct OracleResult {
  double value = 0;
  MeasurementBasis argmin;
  std::size_t evaluations = 0;
};

struct SphereSearchOptions {
  int grid = 2000;    // Fibonacci-sphere points
  int refine = 40;    // golden-section steps per angle and pass
  int max_passes = 60;
};

/// Minimizes distance_after_measurement over qubit projectors (I +- n.sigma)/2:
/// Fibonacci grid, then alternating golden-section searches on the two polar
/// angles of a frame whose equator passes through the incumbent direction.
OracleResult minimize_qubit_measurement(const DensityMatrix& rho, const SphereSearchOptions& options = {});

/// Haar-random basis number `index` of the stream for `seed`.
MeasurementBasis haar_random_basis(Index m, std::uint64_t seed, std::uint64_t index);

/// Minimum over `samples` Haar-random bases (and any `injected` candidates).
/// An upper bound on the geometric discord, never the exact value for m >= 3.
OracleResult sample_measurement_upper_bound(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed,
                                            std::span<const MeasurementBasis> injected = {});

/// Exact geometric discord of a two-qubit state, (1/4)(|x|^2 + |T|^2 - k_max)
/// with k_max the largest eigenvalue of x x^t + T T^t (closed-form 3x3 root).
double dakic_two_qubit(const BlochRep& b);

/// sum_k p_k |k><k| (x) rho_k
DensityMatrix make_classical_quantum(std::span<const double> p, const MeasurementBasis& basis,
                                     std::span<const DensityMatrix> rhos,
                                     const Tolerances& tol = kDefaultTolerances);

}  // namespace gqd
