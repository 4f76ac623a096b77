#include "gqd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace gqd {

namespace {

void require_basis_dim(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (basis.dim() != rho.m()) {
    std::ostringstream os;
    os << "measurement basis of dimension " << basis.dim() << " does not match subsystem A of dimension " << rho.m();
    throw ValidationError("dimension", os.str());
  }
}

// Pi(rho) without re-validating the result.
ComplexMatrix dephase(const ComplexMatrix& rho, const MeasurementBasis& basis, Index n) {
  const ComplexMatrix id_n = ComplexMatrix::Identity(n, n);
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (Index k = 0; k < basis.dim(); ++k) {
    const ComplexMatrix lift = kron(basis.projector(k), id_n);
    out += lift * rho * lift;
  }
  return out;
}

double dephasing_distance(const DensityMatrix& rho, const MeasurementBasis& basis) {
  return (rho.matrix() - dephase(rho.matrix(), basis, rho.n())).squaredNorm();
}

// Orthonormal frame (pole, t1, t2) with `pole` first; t1 follows `hint` when
// it is not parallel to the pole.
Eigen::Matrix3d frame_through(const Eigen::Vector3d& pole, const Eigen::Vector3d& hint) {
  Eigen::Vector3d t1 = hint - hint.dot(pole) * pole;
  if (t1.norm() < 1e-6) {
    const Eigen::Vector3d axis = std::abs(pole.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    t1 = axis - axis.dot(pole) * pole;
  }
  t1.normalize();
  Eigen::Matrix3d frame;
  frame.col(0) = pole;
  frame.col(1) = t1;
  frame.col(2) = pole.cross(t1);
  return frame;
}

// Latitude/longitude in `frame`; (0, 0) is the frame's first axis.
Eigen::Vector3d direction_in(const Eigen::Matrix3d& frame, double latitude, double longitude) {
  return frame * Eigen::Vector3d(std::cos(latitude) * std::cos(longitude), std::cos(latitude) * std::sin(longitude),
                                 std::sin(latitude));
}

// Golden-section search of f on [lo, hi]; returns the best abscissa seen.
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, int steps) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int s = 0; s < steps; ++s) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Largest eigenvalue of a symmetric 3x3 matrix by the trigonometric solution
// of its characteristic cubic.
double largest_eigenvalue_3x3(const Eigen::Matrix3d& k) {
  const double off = k(0, 1) * k(0, 1) + k(0, 2) * k(0, 2) + k(1, 2) * k(1, 2);
  if (off == 0.0) return k.diagonal().maxCoeff();
  const double q = k.trace() / 3.0;
  const Eigen::Matrix3d shifted = k - q * Eigen::Matrix3d::Identity();
  const double p = std::sqrt((shifted.diagonal().squaredNorm() + 2.0 * off) / 6.0);
  const double r = std::clamp((shifted / p).determinant() / 2.0, -1.0, 1.0);
  return q + 2.0 * p * std::cos(std::acos(r) / 3.0);
}

}  // namespace

MeasurementBasis::MeasurementBasis(ComplexMatrix kets, const Tolerances& tol) : kets_(std::move(kets)) {
  if (kets_.rows() == 0 || kets_.rows() != kets_.cols()) {
    std::ostringstream os;
    os << "basis needs m kets of length m, got " << kets_.rows() << "x" << kets_.cols();
    throw ValidationError("dimension", os.str());
  }
  const double defect =
      (kets_.adjoint() * kets_ - ComplexMatrix::Identity(kets_.cols(), kets_.cols())).cwiseAbs().maxCoeff();
  if (defect > tol.orthonormality) {
    std::ostringstream os;
    os << "kets are not orthonormal, max Gram defect " << defect;
    throw ValidationError("orthonormality", os.str());
  }
}

MeasurementBasis MeasurementBasis::computational(Index m) {
  return MeasurementBasis(ComplexMatrix::Identity(m, m));
}

MeasurementBasis MeasurementBasis::qubit(const Eigen::Vector3d& direction) {
  const double norm = direction.norm();
  if (!(norm > 0.0)) throw ValidationError("direction", "Bloch direction must be non-zero");
  const Eigen::Vector3d u = direction / norm;
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  ComplexMatrix kets(2, 2);
  kets(0, 0) = c;
  kets(1, 0) = phase * s;
  kets(0, 1) = -std::conj(phase) * s;
  kets(1, 1) = c;
  return MeasurementBasis(std::move(kets));
}

DensityMatrix apply_measurement(const DensityMatrix& rho, const MeasurementBasis& basis) {
  require_basis_dim(rho, basis);
  return DensityMatrix(dephase(rho.matrix(), basis, rho.n()), rho.m(), rho.n());
}

double distance_after_measurement(const DensityMatrix& rho, const MeasurementBasis& basis) {
  require_basis_dim(rho, basis);
  return dephasing_distance(rho, basis);
}

OracleResult minimize_qubit_measurement(const DensityMatrix& rho, const SphereSearchOptions& options) {
  if (rho.m() != 2) {
    throw ValidationError("dimension",
                          "sphere search needs a qubit on subsystem A, got m = " + std::to_string(rho.m()));
  }
  if (options.grid < 1 || options.refine < 1) throw ValidationError("options", "grid and refine must be positive");

  std::size_t evaluations = 0;
  auto objective = [&](const Eigen::Vector3d& dir) {
    ++evaluations;
    return dephasing_distance(rho, MeasurementBasis::qubit(dir));
  };

  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const int grid = options.grid;
  Eigen::Vector3d best_dir = Eigen::Vector3d::UnitZ();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / grid;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double az = golden_angle * i;
    const Eigen::Vector3d dir(r * std::cos(az), r * std::sin(az), z);
    const double v = objective(dir);
    if (v < best) {
      best = v;
      best_dir = dir;
    }
  }

  // Twice the typical spacing of the grid.
  const double reach = std::min(std::numbers::pi / 2.0, 2.0 * std::sqrt(4.0 * std::numbers::pi / grid));
  Eigen::Matrix3d frame = frame_through(best_dir, Eigen::Vector3d::UnitZ());
  for (int pass = 0; pass < options.max_passes; ++pass) {
    const double before = best;

    auto along_longitude = [&](double lon) { return objective(direction_in(frame, 0.0, lon)); };
    const auto [lon, f_lon] = golden_section(along_longitude, -reach, reach, options.refine);
    if (f_lon < best) {
      best = f_lon;
      best_dir = direction_in(frame, 0.0, lon);
      frame = frame_through(best_dir, frame.col(1));
    }

    auto along_latitude = [&](double lat) { return objective(direction_in(frame, lat, 0.0)); };
    const auto [lat, f_lat] = golden_section(along_latitude, -reach, reach, options.refine);
    if (f_lat < best) {
      best = f_lat;
      best_dir = direction_in(frame, lat, 0.0);
      frame = frame_through(best_dir, frame.col(1));
    }

    if (!(best < before)) break;
  }

  return OracleResult{best, MeasurementBasis::qubit(best_dir), evaluations};
}

MeasurementBasis haar_random_basis(Index m, std::uint64_t seed, std::uint64_t index) {
  Engine engine = make_engine(seed, index);
  return MeasurementBasis(random_unitary(m, engine));
}

OracleResult sample_measurement_upper_bound(const DensityMatrix& rho, std::size_t samples, std::uint64_t seed,
                                            std::span<const MeasurementBasis> injected) {
  if (samples == 0) throw ValidationError("samples", "at least one sample is required");
  const Index m = rho.m();

  std::size_t evaluations = 0;
  std::optional<MeasurementBasis> best_basis;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const MeasurementBasis& basis) {
    ++evaluations;
    const double v = distance_after_measurement(rho, basis);
    if (v < best) {
      best = v;
      best_basis = basis;
    }
  };
  for (std::size_t i = 0; i < samples; ++i) consider(haar_random_basis(m, seed, i));
  for (const auto& basis : injected) consider(basis);
  return OracleResult{best, *best_basis, evaluations};
}

double dakic_two_qubit(const BlochRep& b) {
  if (b.m != 2 || b.n != 2) {
    std::ostringstream os;
    os << "two-qubit formula needs dims (2, 2), got (" << b.m << ", " << b.n << ")";
    throw ValidationError("dimension", os.str());
  }
  const Eigen::Vector3d x = b.x;
  const Eigen::Matrix3d t = b.T;
  const Eigen::Matrix3d k = x * x.transpose() + t * t.transpose();
  return 0.25 * (x.squaredNorm() + t.squaredNorm() - largest_eigenvalue_3x3(0.5 * (k + k.transpose())));
}

DensityMatrix make_classical_quantum(std::span<const double> p, const MeasurementBasis& basis,
                                     std::span<const DensityMatrix> rhos, const Tolerances& tol) {
  const Index m = basis.dim();
  if (static_cast<Index>(p.size()) != m || static_cast<Index>(rhos.size()) != m) {
    std::ostringstream os;
    os << "need " << m << " weights and states, got " << p.size() << " and " << rhos.size();
    throw ValidationError("dimension", os.str());
  }
  double total = 0;
  for (double pk : p) {
    if (!(pk >= 0.0)) throw ValidationError("distribution", "weights must be non-negative");
    total += pk;
  }
  if (std::abs(total - 1.0) > tol.probability_sum) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total;
    throw ValidationError("distribution", os.str());
  }
  const Index n = rhos.front().dim();
  ComplexMatrix chi = ComplexMatrix::Zero(m * n, m * n);
  for (Index k = 0; k < m; ++k) {
    const DensityMatrix& rk = rhos[static_cast<std::size_t>(k)];
    if (rk.dim() != n) throw ValidationError("dimension", "conditional states must share one dimension");
    chi += p[static_cast<std::size_t>(k)] * kron(basis.projector(k), rk.matrix());
  }
  return DensityMatrix(std::move(chi), m, n, tol);
}

}  // namespace gqd
