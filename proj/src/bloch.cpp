#include "gqd/bloch.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace gqd {

namespace {

std::vector<ComplexMatrix> gell_mann(Index d) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d * d - 1));
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = g(k, j) = 1.0;
      out.push_back(std::move(g));
    }
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      out.push_back(std::move(g));
    }
  for (Index l = 1; l < d; ++l) {
    const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    for (Index j = 0; j < l; ++j) g(j, j) = norm;
    g(l, l) = -static_cast<double>(l) * norm;
    out.push_back(std::move(g));
  }
  return out;
}

void require_bases(Index m, Index n, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b) {
  if (basis_a.dim() != m || basis_b.dim() != n) {
    std::ostringstream os;
    os << "generator bases of dims (" << basis_a.dim() << ", " << basis_b.dim() << ") do not match state dims ("
       << m << ", " << n << ")";
    throw ValidationError("dimension", os.str());
  }
}

void require_shapes(const BlochRep& b) {
  const Index ka = b.m * b.m - 1;
  const Index kb = b.n * b.n - 1;
  if (b.m < 2 || b.n < 2 || b.x.size() != ka || b.y.size() != kb || b.T.rows() != ka || b.T.cols() != kb) {
    std::ostringstream os;
    os << "Bloch data shapes x:" << b.x.size() << " y:" << b.y.size() << " T:" << b.T.rows() << "x" << b.T.cols()
       << " inconsistent with dims (" << b.m << ", " << b.n << ")";
    throw ValidationError("dimension", os.str());
  }
}

}  // namespace

GeneratorBasis::GeneratorBasis(Index d) : dim_(d) {
  if (d < 2) throw ValidationError("dimension", "generator basis needs d >= 2, got " + std::to_string(d));
  generators_ = gell_mann(d);
}

GeneratorBasis::GeneratorBasis(Index d, std::vector<ComplexMatrix> generators)
    : dim_(d), generators_(std::move(generators)) {}

GeneratorBasis GeneratorBasis::permuted(std::span<const Index> order) const {
  std::vector<bool> seen(generators_.size(), false);
  if (order.size() != generators_.size())
    throw ValidationError("permutation", "order has wrong length");
  std::vector<ComplexMatrix> out;
  out.reserve(generators_.size());
  for (Index i : order) {
    if (i < 0 || i >= size() || seen[static_cast<std::size_t>(i)])
      throw ValidationError("permutation", "order is not a permutation");
    seen[static_cast<std::size_t>(i)] = true;
    out.push_back(generators_[static_cast<std::size_t>(i)]);
  }
  return GeneratorBasis(dim_, std::move(out));
}

GeneratorBasis build_generator_basis(Index d) { return GeneratorBasis(d); }

BlochRep decompose(const DensityMatrix& rho) {
  return decompose(rho, GeneratorBasis(rho.m()), GeneratorBasis(rho.n()));
}

BlochRep decompose(const DensityMatrix& rho, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b) {
  const Index m = rho.m();
  const Index n = rho.n();
  require_bases(m, n, basis_a, basis_b);

  const ComplexMatrix rho_a = partial_trace(rho.matrix(), m, n, Subsystem::A);
  const ComplexMatrix rho_b = partial_trace(rho.matrix(), m, n, Subsystem::B);
  const ComplexMatrix id_n = ComplexMatrix::Identity(n, n);

  BlochRep b;
  b.m = m;
  b.n = n;
  b.x.resize(basis_a.size());
  b.y.resize(basis_b.size());
  b.T.resize(basis_a.size(), basis_b.size());

  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  for (Index i = 0; i < basis_a.size(); ++i) b.x[i] = 0.5 * md * (rho_a * basis_a[i]).trace().real();
  for (Index j = 0; j < basis_b.size(); ++j) b.y[j] = 0.5 * nd * (rho_b * basis_b[j]).trace().real();
  for (Index i = 0; i < basis_a.size(); ++i) {
    // tr_A[(g_i (x) I) rho], so that tr(rho g_i (x) g_j) = tr(R g_j)
    const ComplexMatrix r = partial_trace(kron(basis_a[i], id_n) * rho.matrix(), m, n, Subsystem::B);
    for (Index j = 0; j < basis_b.size(); ++j) b.T(i, j) = 0.25 * md * nd * (r * basis_b[j]).trace().real();
  }
  return b;
}

ComplexMatrix reconstruct(const BlochRep& b) {
  require_shapes(b);
  return reconstruct(b, GeneratorBasis(b.m), GeneratorBasis(b.n));
}

ComplexMatrix reconstruct(const BlochRep& b, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b) {
  require_shapes(b);
  require_bases(b.m, b.n, basis_a, basis_b);
  const Index m = b.m;
  const Index n = b.n;
  ComplexMatrix local_a = ComplexMatrix::Zero(m, m);
  ComplexMatrix local_b = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < basis_a.size(); ++i) local_a += b.x[i] * basis_a[i];
  for (Index j = 0; j < basis_b.size(); ++j) local_b += b.y[j] * basis_b[j];

  ComplexMatrix out = ComplexMatrix::Identity(m * n, m * n);
  out += kron(local_a, ComplexMatrix::Identity(n, n));
  out += kron(ComplexMatrix::Identity(m, m), local_b);
  for (Index i = 0; i < basis_a.size(); ++i) {
    ComplexMatrix row = ComplexMatrix::Zero(n, n);
    for (Index j = 0; j < basis_b.size(); ++j) row += b.T(i, j) * basis_b[j];
    out += kron(basis_a[i], row);
  }
  return out / static_cast<double>(m * n);
}

CMatrix build_c_matrix(const BlochRep& b) {
  require_shapes(b);
  const double m = static_cast<double>(b.m);
  const double n = static_cast<double>(b.n);
  CMatrix c;
  c.m = b.m;
  c.n = b.n;
  c.entries.resize(b.m * b.m, b.n * b.n);
  c.entries(0, 0) = 1.0 / std::sqrt(m * n);
  c.entries.row(0).tail(b.y.size()) = (std::sqrt(2.0) / (n * std::sqrt(m))) * b.y.transpose();
  c.entries.col(0).tail(b.x.size()) = (std::sqrt(2.0) / (m * std::sqrt(n))) * b.x;
  c.entries.bottomRightCorner(b.T.rows(), b.T.cols()) = (2.0 / (m * n)) * b.T;
  return c;
}

CMatrix c_matrix_by_traces(const DensityMatrix& rho, const GeneratorBasis& basis_a, const GeneratorBasis& basis_b) {
  const Index m = rho.m();
  const Index n = rho.n();
  require_bases(m, n, basis_a, basis_b);

  auto orthonormal = [](const GeneratorBasis& g) {
    const Index d = g.dim();
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    for (Index i = 0; i < g.size(); ++i) ops.push_back(g[i] / std::sqrt(2.0));
    return ops;
  };
  const auto xs = orthonormal(basis_a);
  const auto ys = orthonormal(basis_b);

  CMatrix c;
  c.m = m;
  c.n = n;
  c.entries.resize(m * m, n * n);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      c.entries(static_cast<Index>(i), static_cast<Index>(j)) = (rho.matrix() * kron(xs[i], ys[j])).trace().real();
  return c;
}

BlochRep bloch_from_c_matrix(const CMatrix& c) {
  const Index ka = c.m * c.m - 1;
  const Index kb = c.n * c.n - 1;
  if (c.m < 2 || c.n < 2 || c.entries.rows() != ka + 1 || c.entries.cols() != kb + 1)
    throw ValidationError("dimension", "C matrix shape inconsistent with its dims");
  const double m = static_cast<double>(c.m);
  const double n = static_cast<double>(c.n);
  BlochRep b;
  b.m = c.m;
  b.n = c.n;
  b.x = c.entries.col(0).tail(ka) * (m * std::sqrt(n) / std::sqrt(2.0));
  b.y = c.entries.row(0).tail(kb).transpose() * (n * std::sqrt(m) / std::sqrt(2.0));
  b.T = c.entries.bottomRightCorner(ka, kb) * (m * n / 2.0);
  return b;
}

double cct_trace_from_bloch(const BlochRep& b) {
  const double m = static_cast<double>(b.m);
  const double n = static_cast<double>(b.n);
  return 1.0 / (m * n) + 2.0 * b.y.squaredNorm() / (n * n * m) + 2.0 * b.x.squaredNorm() / (m * m * n) +
         4.0 * b.T.squaredNorm() / (m * m * n * n);
}

}  // namespace gqd
