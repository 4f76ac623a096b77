#include <doctest.h>

#include <sstream>

#include "gqd/bloch.hpp"
#include "gqd/states.hpp"
#include "support.hpp"

using namespace gqd;
using gqd::test::max_abs_diff;

namespace {

std::string entries_of(const ComplexMatrix& a, Index m, Index n) {
  std::ostringstream os;
  os << m << ' ' << n << '\n';
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) os << i << ' ' << j << ' ' << a(i, j).real() << ' ' << a(i, j).imag() << '\n';
  return os.str();
}

std::string property_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_state(in);
  } catch (const ValidationError& e) {
    return e.property();
  }
  return "";
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_state(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("named states") {
  TEST_CASE("qutrit family entries") {
    const DensityMatrix full = eq52_state(1.0);
    const ComplexMatrix& r = full.matrix();
    // |e> = (|11> + |22> + |10> + |01> + |02> + |20>)/sqrt(6), zero-based
    for (const Index k : {4, 8, 3, 1, 2, 6}) CHECK(r(k, k).real() == doctest::Approx(1.0 / 6.0));
    CHECK(std::abs(r(0, 0)) == 0.0);
    CHECK(std::abs(r(5, 5)) == 0.0);
    CHECK(std::abs(r(7, 7)) == 0.0);
    CHECK(r(4, 1).real() == doctest::Approx(1.0 / 6.0));

    const DensityMatrix mid = eq52_state(0.5);
    const ComplexMatrix& half = mid.matrix();
    CHECK(half(0, 0).real() == doctest::Approx(0.5 / 9.0));
    CHECK(half(4, 4).real() == doctest::Approx(0.5 / 6.0 + 0.5 / 9.0));
  }

  TEST_CASE("mixture of two pure states") {
    const DensityMatrix pure = eq53_state(1.0);
    const ComplexMatrix& r = pure.matrix();
    CHECK(r(0, 0).real() == doctest::Approx(0.25));
    CHECK(r(0, 4).real() == doctest::Approx(0.25));
    CHECK(r(8, 8).real() == doctest::Approx(0.5));
    CHECK(r(0, 8).real() == doctest::Approx(0.5 / std::sqrt(2.0)));
    CHECK(max_abs_diff(eq53_state(0.0).matrix(), eq52_state(1.0).matrix()) <= 1e-15);
    // the kets overlap on |11> and |22>
    const double overlap = (0.5 + 1.0 / std::sqrt(2.0)) / std::sqrt(6.0);
    CHECK(eq53_state(0.5).purity() == doctest::Approx(0.5 + 0.5 * overlap * overlap));
  }

  TEST_CASE("families are valid states on the whole grid") {
    for (int i = 0; i <= 100; ++i) {
      const double p = 0.01 * i;
      for (const DensityMatrix& rho : {eq52_state(p), eq53_state(p)}) {
        CHECK(rho.m() == 3);
        CHECK(rho.n() == 3);
      }
      CHECK(werner_qubit(p).m() == 2);
    }
    CHECK_THROWS_AS(eq52_state(-0.01), ValidationError);
    CHECK_THROWS_AS(eq53_state(1.01), ValidationError);
    CHECK_THROWS_AS(werner_qubit(std::nan("")), ValidationError);
  }

  TEST_CASE("Werner and Bell states") {
    CHECK(max_abs_diff(werner_qubit(1.0).matrix(), bell_state().matrix()) <= 1e-16);
    CHECK(max_abs_diff(werner_qubit(0.0).matrix(), ComplexMatrix::Identity(4, 4) / 4.0) <= 1e-16);
    CHECK(max_abs_diff(bell_state().reduced(Subsystem::A).matrix(), ComplexMatrix::Identity(2, 2) / 2.0) <= 1e-15);
    CHECK(bell_state().purity() == doctest::Approx(1.0));
  }

  TEST_CASE("product states have factorized correlations") {
    const DensityMatrix a = random_state(3, 2, 301);
    const DensityMatrix b = random_state(2, 1, 302);
    const DensityMatrix ab = product_state(a, b);
    CHECK(ab.m() == 3);
    CHECK(ab.n() == 2);
    const BlochRep rep = decompose(ab);
    CHECK(max_abs_diff(rep.T, RealMatrix(rep.x * rep.y.transpose())) <= 1e-12);
  }
}

TEST_SUITE("random states") {
  TEST_CASE("rank and validity") {
    const DensityMatrix pure = random_state(6, 1, 11);
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-12));
    const auto full = herm_eigen(random_state(6, 6, 12).matrix());
    CHECK(full.values.minCoeff() > 1e-8);
    const auto two = herm_eigen(random_state(6, 2, 13).matrix());
    CHECK(two.values[1] > 1e-8);
    CHECK(std::abs(two.values[2]) <= 1e-12);
  }

  TEST_CASE("deterministic in the seed") {
    CHECK(random_state(4, 3, 99).matrix() == random_state(4, 3, 99).matrix());
    CHECK(random_state(4, 3, 99).matrix() != random_state(4, 3, 100).matrix());
    const DensityMatrix rho = random_bipartite_state(2, 3, 4, 7);
    CHECK(rho.m() == 2);
    CHECK(rho.n() == 3);
  }

  TEST_CASE("invalid rank") {
    CHECK_THROWS_AS(random_state(4, 0, 1), ValidationError);
    CHECK_THROWS_AS(random_state(4, 5, 1), ValidationError);
  }

  TEST_CASE("Haar unitaries are unitary") {
    Engine engine = make_engine(3, 1);
    for (Index d = 1; d <= 6; ++d) {
      const ComplexMatrix u = random_unitary(d, engine);
      CHECK(max_abs_diff(ComplexMatrix(u.adjoint() * u), ComplexMatrix::Identity(d, d)) <= 1e-13);
    }
  }

  TEST_CASE("engine streams differ") {
    Engine a = make_engine(5, 0);
    Engine b = make_engine(5, 1);
    Engine c = make_engine(5, 0);
    const auto first = a();
    CHECK(first != b());
    CHECK(first == c());
  }
}

TEST_SUITE("state files") {
  TEST_CASE("write then read reproduces every bit") {
    for (const auto& [m, n] : test::kDims) {
      for (const auto& rho : test::random_states(m, n, 3, 311)) {
        std::stringstream io;
        write_state(rho, io);
        const DensityMatrix back = read_state(io);
        CHECK(back.matrix() == rho.matrix());
        CHECK(back.m() == m);
        CHECK(back.n() == n);
      }
    }
    std::stringstream single;
    write_state(random_state(3, 2, 5), single);
    CHECK_FALSE(read_state(single).has_bipartition());
  }

  TEST_CASE("comments and blank lines") {
    const std::string text =
        "# Bell state\n\n2 2   # header\n"
        "0 0 0.5 0\n0 1 0 0\n0 2 0 0\n0 3 0.5 0\n"
        "1 0 0 0\n1 1 0 0\n1 2 0 0\n1 3 0 0\n"
        "2 0 0 0\n2 1 0 0\n2 2 0 0\n2 3 0 0\n"
        "3 0 0.5 0\n3 1 0 0\n3 2 0 0\n3 3 0.5 0\n";
    std::istringstream in(text);
    CHECK(max_abs_diff(read_state(in).matrix(), bell_state().matrix()) <= 1e-15);
  }

  TEST_CASE("well-formed files that are not states") {
    ComplexMatrix low = ComplexMatrix::Identity(4, 4) * 0.225;
    CHECK(property_of(entries_of(low, 2, 2)) == "trace");
    ComplexMatrix skew = ComplexMatrix::Identity(4, 4) / 4.0;
    skew(0, 1) = Complex(0.0, 0.1);
    CHECK(property_of(entries_of(skew, 2, 2)) == "hermiticity");
    ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
    neg.diagonal() << 0.7, 0.4, 0.1, -0.2;
    CHECK(property_of(entries_of(neg, 2, 2)) == "positivity");
  }

  TEST_CASE("malformed files report the line") {
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("2 2\n0 0 x 0\n") == 2);
    CHECK(parse_error_line("# c\n2 2\n0 0 0.25 0\n0 2 0 0\n") == 4);
    CHECK(parse_error_line("2 2 7\n") == 1);
    CHECK(parse_error_line("0 2\n") == 1);
    CHECK(parse_error_line("1 2\n0 0 1 0\n0 1 0 0\n1 0 0 0\n1 1 0 0 9\n") == 5);

    std::istringstream truncated("1 2\n0 0 1 0\n");
    CHECK_THROWS_AS(read_state(truncated), ParseError);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_state(empty), ParseError);
  }
}
