#include "gqd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gqd {

namespace {

void require_qudit(Index m, const char* what) {
  if (m < 2) {
    std::ostringstream os;
    os << what << " needs m >= 2, got " << m;
    throw ValidationError("dimension", os.str());
  }
}

double leading_sum(const RealVector& descending, Index count) {
  return descending.head(std::min<Index>(count, descending.size())).sum();
}

// G is symmetric up to rounding in T T^t; symmetrize before the eigensolver.
RealMatrix build_g(const BlochRep& b) {
  const RealMatrix g = b.x * b.x.transpose() + (2.0 / static_cast<double>(b.n)) * (b.T * b.T.transpose());
  return 0.5 * (g + g.transpose());
}

RealMatrix symmetrized_cct(const CMatrix& c) {
  const RealMatrix k = c.cct();
  return 0.5 * (k + k.transpose());
}

double tight_from_spectrum(const BlochRep& b, const RealVector& eta) {
  const double m = static_cast<double>(b.m);
  const double n = static_cast<double>(b.n);
  return 2.0 / (m * m * n) * (b.x.squaredNorm() + (2.0 / n) * b.T.squaredNorm() - leading_sum(eta, b.m - 1));
}

}  // namespace

GramMatrix gram_matrix(const BlochRep& b) {
  GramMatrix out;
  out.G = build_g(b);
  auto eig = sym_eigen(out.G);
  out.eta = std::move(eig.values);
  out.F = std::move(eig.vectors);
  return out;
}

double tight_bound(const BlochRep& b) {
  require_qudit(b.m, "tight bound");
  return tight_from_spectrum(b, gram_matrix(b).eta);
}

double luo_fu_bound(const CMatrix& c) {
  require_qudit(c.m, "Luo-Fu bound");
  const RealMatrix k = symmetrized_cct(c);
  const auto eig = sym_eigen(k);
  return k.trace() - leading_sum(eig.values, c.m);
}

BoundsReport compute_bounds(const BlochRep& b) {
  require_qudit(b.m, "bounds");

  BoundsReport r;
  r.eta = gram_matrix(b).eta;
  r.tight_bound = tight_from_spectrum(b, r.eta);
  r.tight_bound_clamped = std::max(r.tight_bound, 0.0);

  const RealMatrix k = symmetrized_cct(build_c_matrix(b));
  const auto eig = sym_eigen(k);
  r.lambda = eig.values;
  r.tr_cct = k.trace();
  r.luo_fu_bound = r.tr_cct - leading_sum(eig.values, b.m);
  r.dominance_ok = r.tight_bound >= r.luo_fu_bound - kDominanceSlack;
  return r;
}

BoundsReport compute_bounds(const DensityMatrix& rho) { return compute_bounds(decompose(rho)); }

RealMatrix epsilon_table(Index m) {
  require_qudit(m, "epsilon table");
  const double md = static_cast<double>(m);
  const Index size = m - 1;
  RealMatrix eps = RealMatrix::Zero(size, size);
  eps(0, 0) = 1.0;
  for (Index j = 1; j < size; ++j) {
    eps(j, 0) = -1.0 / (md - 1.0);
    for (Index i = 1; i < j; ++i) {
      const double mi = md - static_cast<double>(i);
      eps(j, i) = -std::sqrt(md / ((md - 1.0) * mi * (mi - 1.0)));
    }
    const double mj = md - static_cast<double>(j);
    eps(j, j) = std::sqrt(md * (mj - 1.0) / ((md - 1.0) * mj));
  }
  return eps;
}

double epsilon_identity_lhs(const RealMatrix& eps, Index k) {
  const Index last = eps.rows() - 1;
  if (k < 1 || k > last) throw ValidationError("index", "epsilon identity defined for 1 <= k <= m-2");
  double sum = 0;
  for (Index j = k; j <= last; ++j) sum += eps(j, k) * eps(j, k);
  for (Index i = k; i < last; ++i)
    for (Index j = i + 1; j <= last; ++j) sum += eps(i, k) * eps(j, k);
  return sum;
}

IsometryConstruction build_optimal_isometry(Index m, const RealMatrix& F) {
  require_qudit(m, "optimal isometry");
  const Index width = m * m - 1;
  if (F.rows() != width || F.cols() < m - 1) {
    std::ostringstream os;
    os << "need at least " << m - 1 << " eigenvectors of length " << width << ", got " << F.rows() << "x"
       << F.cols();
    throw ValidationError("dimension", os.str());
  }

  IsometryConstruction out;
  out.m = m;
  out.eps = epsilon_table(m);
  out.E = RealMatrix::Zero(m, width);
  for (Index j = 0; j < m - 1; ++j)
    for (Index k = 0; k <= j; ++k) out.E.row(j) += out.eps(j, k) * F.col(k).transpose();
  out.E.row(m - 1) = -out.E.topRows(m - 1).colwise().sum();

  const double md = static_cast<double>(m);
  out.A.resize(m, m * m);
  out.A.col(0).setConstant(1.0 / std::sqrt(md));
  out.A.rightCols(width) = std::sqrt((md - 1.0) / md) * out.E;
  return out;
}

ClosedFormCheck verify_closed_form_maximum(const BlochRep& b) {
  const GramMatrix g = gram_matrix(b);
  const IsometryConstruction iso = build_optimal_isometry(b.m, g.F);
  const RealMatrix ac = iso.A * build_c_matrix(b).entries;

  const double m = static_cast<double>(b.m);
  const double n = static_cast<double>(b.n);
  ClosedFormCheck out;
  out.direct = ac.squaredNorm();
  out.closed_form =
      1.0 / (m * n) + 2.0 * b.y.squaredNorm() / (n * n * m) + 2.0 / (m * m * n) * leading_sum(g.eta, b.m - 1);
  return out;
}

InterlacingCheck verify_interlacing(const CMatrix& c, double tol) {
  const BlochRep b = bloch_from_c_matrix(c);
  const double m = static_cast<double>(b.m);
  const double n = static_cast<double>(b.n);
  const Index width = b.m * b.m - 1;

  const double a = 1.0 / (m * n) + 2.0 * b.y.squaredNorm() / (n * n * m);
  const RealVector u = std::sqrt(2.0) / (m * n * std::sqrt(m)) * b.x +
                       2.0 * std::sqrt(2.0) / (m * n * n * std::sqrt(m)) * (b.T * b.y);
  const RealMatrix block = 2.0 / (m * m * n) * build_g(b);

  RealMatrix bordered(width + 1, width + 1);
  bordered(0, 0) = a;
  bordered.row(0).tail(width) = u.transpose();
  bordered.col(0).tail(width) = u;
  bordered.bottomRightCorner(width, width) = block;

  InterlacingCheck out;
  const RealMatrix cct = symmetrized_cct(c);
  out.bordered_mismatch = (cct - bordered).cwiseAbs().maxCoeff();
  out.lambda_ascending = sym_eigen(cct).values.reverse();
  out.block_ascending = sym_eigen(block).values.reverse();

  double violation = 0;
  for (Index i = 0; i < width; ++i) {
    violation = std::max(violation, out.lambda_ascending[i] - out.block_ascending[i]);
    violation = std::max(violation, out.block_ascending[i] - out.lambda_ascending[i + 1]);
  }
  out.max_violation = violation;
  out.holds = violation <= tol && out.bordered_mismatch <= tol;
  return out;
}

}  // namespace gqd
