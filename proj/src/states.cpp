#include "gqd/states.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>

namespace gqd {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "parameter p = " << p << " outside [0, 1]";
    throw ValidationError("parameter", os.str());
  }
}

ComplexVector qutrit_pair_ket(std::initializer_list<std::pair<std::pair<int, int>, double>> terms) {
  ComplexVector ket = ComplexVector::Zero(9);
  for (const auto& [ab, amp] : terms) ket[ab.first * 3 + ab.second] += amp;
  return ket;
}

ComplexVector symmetric_ket() {
  const double c = 1.0 / std::sqrt(6.0);
  return qutrit_pair_ket({{{1, 1}, c}, {{2, 2}, c}, {{1, 0}, c}, {{0, 1}, c}, {{0, 2}, c}, {{2, 0}, c}});
}

ComplexMatrix hermitize(const ComplexMatrix& a) { return 0.5 * (a + a.adjoint()); }

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_field(std::string_view& rest, std::size_t line, const char* what) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  const std::string_view token = rest.substr(0, end);
  if (token.empty()) throw ParseError(line, std::string("missing ") + what);
  T value{};
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    throw ParseError(line, std::string("cannot parse ") + what + " from '" + std::string(token) + "'");
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return value;
}

}  // namespace

Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Engine(seq);
}

DensityMatrix eq52_state(double p) {
  require_probability(p);
  const ComplexVector e = symmetric_ket();
  const ComplexMatrix rho = p * (e * e.adjoint()) + (1.0 - p) / 9.0 * ComplexMatrix::Identity(9, 9);
  return DensityMatrix(rho, 3, 3);
}

DensityMatrix eq53_state(double p) {
  require_probability(p);
  const ComplexVector e1 = qutrit_pair_ket({{{0, 0}, 0.5}, {{1, 1}, 0.5}, {{2, 2}, 1.0 / std::sqrt(2.0)}});
  const ComplexVector e2 = symmetric_ket();
  const ComplexMatrix rho = p * (e1 * e1.adjoint()) + (1.0 - p) * (e2 * e2.adjoint());
  return DensityMatrix(rho, 3, 3);
}

DensityMatrix werner_qubit(double p) {
  require_probability(p);
  const ComplexMatrix rho = p * bell_state().matrix() + (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4);
  return DensityMatrix(rho, 2, 2);
}

DensityMatrix bell_state() {
  ComplexVector phi = ComplexVector::Zero(4);
  phi[0] = phi[3] = 1.0 / std::sqrt(2.0);
  return DensityMatrix(phi * phi.adjoint(), 2, 2);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), a.dim(), b.dim());
}

DensityMatrix random_state(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    std::ostringstream os;
    os << "rank " << rank << " must lie in [1, " << dim << "]";
    throw ValidationError("rank", os.str());
  }
  Engine engine = make_engine(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix w(dim, rank);
  for (Index j = 0; j < rank; ++j)
    for (Index i = 0; i < dim; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      w(i, j) = Complex(re, im);
    }
  ComplexMatrix rho = w * w.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(hermitize(rho));
}

DensityMatrix random_bipartite_state(Index m, Index n, Index rank, std::uint64_t seed) {
  return random_state(m * n, rank, seed).with_bipartition(m, n);
}

ComplexMatrix random_unitary(Index dim, Engine& engine) {
  std::normal_distribution<double> normal;
  ComplexMatrix z(dim, dim);
  for (Index j = 0; j < dim; ++j)
    for (Index i = 0; i < dim; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      z(i, j) = Complex(re, im);
    }
  const Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

void write_state(const DensityMatrix& rho, std::ostream& out) {
  const Index m = rho.has_bipartition() ? rho.m() : rho.dim();
  const Index n = rho.has_bipartition() ? rho.n() : 1;
  out << m << ' ' << n << '\n';
  const ComplexMatrix& a = rho.matrix();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out << i << ' ' << j << ' ' << format_number(a(i, j).real()) << ' ' << format_number(a(i, j).imag()) << '\n';
}

void write_state(const DensityMatrix& rho, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_state(rho, out);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

DensityMatrix read_state(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  Index m = 0;
  Index n = 0;
  Index next = 0;
  ComplexMatrix a;

  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    if (m == 0) {
      m = parse_field<Index>(text, line, "m");
      n = parse_field<Index>(text, line, "n");
      if (!trim(text).empty()) throw ParseError(line, "unexpected trailing fields in header");
      if (m < 1 || n < 1) throw ParseError(line, "dimensions must be positive");
      a = ComplexMatrix::Zero(m * n, m * n);
      continue;
    }

    const Index d = m * n;
    if (next >= d * d) throw ParseError(line, "more entries than (mn)^2");
    const auto i = parse_field<Index>(text, line, "row index");
    const auto j = parse_field<Index>(text, line, "column index");
    const auto re = parse_field<double>(text, line, "real part");
    const auto im = parse_field<double>(text, line, "imaginary part");
    if (!trim(text).empty()) throw ParseError(line, "unexpected trailing fields");
    if (i != next / d || j != next % d) {
      std::ostringstream os;
      os << "expected entry (" << next / d << ", " << next % d << ") in row-major order, got (" << i << ", " << j
         << ")";
      throw ParseError(line, os.str());
    }
    a(i, j) = Complex(re, im);
    ++next;
  }
  if (m == 0) throw ParseError(line, "missing 'm n' header");
  if (next != m * n * m * n) {
    std::ostringstream os;
    os << "expected " << m * n * m * n << " entries, found " << next;
    throw ParseError(line, os.str());
  }
  if (n == 1) return DensityMatrix(std::move(a));
  return DensityMatrix(std::move(a), m, n);
}

DensityMatrix read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_state(in);
}

}  // namespace gqd
