#pragma once

// Lower bounds on the geometric discord D(rho) with measurement on subsystem A.
//
//   tight:   (2/(m^2 n)) (|x|^2 + (2/n)|T|^2 - sum_{j<m} eta_j)
//   Luo-Fu:  tr(CC^t) - sum of the m largest eigenvalues of CC^t
//
// where eta_j are the eigenvalues (non-increasing) of G = x x^t + (2/n) T T^t.
// The tight bound always dominates the Luo-Fu bound.

#include "gqd/bloch.hpp"

namespace gqd {

struct GramMatrix {
  RealMatrix G;
  RealVector eta;  // non-increasing
  RealMatrix F;    // column k: unit eigenvector for eta[k]
};

GramMatrix gram_matrix(const BlochRep& b);

struct BoundsReport {
  double tight_bound = 0;          // raw; negative on some zero-discord states
  double tight_bound_clamped = 0;  // max(tight_bound, 0)
  double luo_fu_bound = 0;
  double tr_cct = 0;
  RealVector eta;     // spectrum of G, non-increasing
  RealVector lambda;  // spectrum of CC^t, non-increasing
  bool dominance_ok = false;
};

/// Raw value of the tight bound.
double tight_bound(const BlochRep& b);
double luo_fu_bound(const CMatrix& c);

BoundsReport compute_bounds(const BlochRep& b);
BoundsReport compute_bounds(const DensityMatrix& rho);

/// Tolerance on tight >= luo_fu used for BoundsReport::dominance_ok.
inline constexpr double kDominanceSlack = 1e-10;

/// Optimizer of tr(A CC^t A^t) over m x m^2 matrices with orthonormal rows
/// whose first column is 1/sqrt(m) and whose remaining columns sum to zero.
/// This is a relaxation: for m > 2 the rows are generally not coherence
/// vectors of any orthonormal basis, so A is a certificate for the bound and
/// not a measurement.
struct IsometryConstruction {
  Index m = 0;
  RealMatrix E;    // m x (m^2 - 1); row k is e_k, last row is -(sum of the others)
  RealMatrix eps;  // (m-1) x (m-1); eps(j, k) = coefficient of f_{k} in e_{j} (0-based), zero for k > j
  RealMatrix A;    // m x m^2
};

/// Coefficients of e_j in the eigenbasis of G: eps(0,0) = 1; for j >= 1
/// eps(j,0) = -1/(m-1), eps(j,j)^2 = m(m-j-1)/((m-1)(m-j)),
/// eps(j,i) = -sqrt(m / ((m-1)(m-i)(m-i-1))) for 0 < i < j.
RealMatrix epsilon_table(Index m);

/// sum_{j>=k} eps(j,k)^2 + sum_{k<=i<j} eps(i,k) eps(j,k), for 1 <= k <= m-2
/// (0-based k); equals m/(2(m-1)).
double epsilon_identity_lhs(const RealMatrix& eps, Index k);

/// `F` holds at least m-1 orthonormal columns in R^(m^2-1), typically the
/// leading eigenvectors of G.
IsometryConstruction build_optimal_isometry(Index m, const RealMatrix& F);

struct ClosedFormCheck {
  double direct = 0;       // tr(A* CC^t A*^t) with A* from build_optimal_isometry
  double closed_form = 0;  // 1/(mn) + 2|y|^2/(n^2 m) + (2/(m^2 n)) sum_{j<m} eta_j
};

ClosedFormCheck verify_closed_form_maximum(const BlochRep& b);

/// Cauchy interlacing between the spectrum of CC^t = [[a, u^t], [u, (2/(m^2 n)) G]]
/// and that of its lower-right block.
struct InterlacingCheck {
  bool holds = false;
  double max_violation = 0;      // largest amount by which a link of the chain fails
  double bordered_mismatch = 0;  // max |CC^t - bordered form| entrywise
  RealVector lambda_ascending;   // m^2 values
  RealVector block_ascending;    // m^2 - 1 values
};

InterlacingCheck verify_interlacing(const CMatrix& c, double tol = 1e-9);

}  // namespace gqd
