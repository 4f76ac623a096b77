#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqd/commands.hpp"
#include "gqd/states.hpp"

using namespace gqd;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& row, char sep) {
  std::vector<std::string> out;
  std::istringstream in(row);
  for (std::string cell; std::getline(in, cell, sep);) out.push_back(cell);
  return out;
}

std::string field(const std::string& report, const std::string& key) {
  for (const auto& line : lines_of(report))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gqd_test_commands";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  CHECK(cli::format_double(0.5) == "0.5");
  CHECK(cli::format_double(0.1) == "0.10000000000000001");
  CHECK(cli::format_double(-0.0) == "-0");
  CHECK(std::strtod(cli::format_double(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);
}

TEST_CASE("bounds report") {
  std::ostringstream out;
  cli::write_bounds(out, cli::family_state("eq52", 0.7));
  const std::string text = out.str();
  CHECK(field(text, "dims") == "3 3");
  CHECK(std::strtod(field(text, "tight_bound").c_str(), nullptr) == doctest::Approx(0.20416666666666669).epsilon(1e-12));
  CHECK(std::strtod(field(text, "luo_fu_bound").c_str(), nullptr) == doctest::Approx(0.18086203726867239).epsilon(1e-12));
  CHECK(field(text, "dominance") == "ok");
  CHECK(split(field(text, "eta"), ' ').size() == 8);
  CHECK(split(field(text, "lambda"), ' ').size() == 9);
}

TEST_CASE("decomposition report") {
  std::ostringstream out;
  cli::write_decomposition(out, bell_state());
  const std::string text = out.str();
  CHECK(field(text, "dims") == "2 2");
  CHECK(split(field(text, "x"), ' ').size() == 3);
  const double expected[3][3] = {{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    const auto cells = split(field(text, "T[" + std::to_string(i) + "]"), ' ');
    REQUIRE(cells.size() == 3);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(std::strtod(cells[j].c_str(), nullptr) - expected[i][j]) <= 1e-15);
  }
}

TEST_CASE("state sources") {
  CHECK_THROWS_AS(cli::load_state({}), ValidationError);
  CHECK_THROWS_AS(cli::load_state({std::nullopt, std::string("eq52"), std::nullopt}), ValidationError);
  CHECK_THROWS_AS(cli::load_state({std::string("x"), std::string("eq52"), 0.5}), ValidationError);
  CHECK_THROWS_AS(cli::family_state("ghz", 0.5), ValidationError);
  CHECK_THROWS_AS(cli::family_state("eq52", 1.5), ValidationError);

  const auto path = scratch("werner.txt");
  write_state(werner_qubit(0.3), path);
  const DensityMatrix rho = cli::load_state({path.string(), std::nullopt, std::nullopt});
  CHECK(rho.matrix() == werner_qubit(0.3).matrix());

  const auto single = scratch("single.txt");
  write_state(random_state(2, 1, 1), single);
  CHECK_THROWS_AS(cli::load_state({single.string(), std::nullopt, std::nullopt}), ValidationError);
}

TEST_CASE("sweep rows match single-point bounds") {
  cli::SweepSpec spec;
  spec.family = "eq53";
  spec.steps = 7;
  spec.p_min = 0.1;
  spec.p_max = 0.9;
  std::ostringstream csv;
  cli::run_sweep(spec, csv);
  const auto rows = lines_of(csv.str());
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "p,tight_raw,tight,luo_fu");
  for (int i = 0; i < spec.steps; ++i) {
    const auto cells = split(rows[static_cast<std::size_t>(i + 1)], ',');
    REQUIRE(cells.size() == 4);
    const double p = std::strtod(cells[0].c_str(), nullptr);
    CHECK(p == cli::sweep_point(spec, i));
    const BoundsReport r = compute_bounds(eq53_state(p));
    CHECK(cells[1] == cli::format_double(r.tight_bound));
    CHECK(cells[2] == cli::format_double(r.tight_bound_clamped));
    CHECK(cells[3] == cli::format_double(r.luo_fu_bound));
  }
  CHECK(cli::sweep_point(spec, 6) == 0.9);
}

TEST_CASE("sweep with the oracle column is reproducible") {
  for (const std::string family : {"werner", "eq52"}) {
    cli::SweepSpec spec;
    spec.family = family;
    spec.steps = 5;
    spec.include_oracle = true;
    spec.seed = 21;
    std::ostringstream a, b;
    cli::run_sweep(spec, a);
    cli::run_sweep(spec, b);
    CHECK(a.str() == b.str());
    const auto rows = lines_of(a.str());
    CHECK(rows[0] == "p,tight_raw,tight,luo_fu,oracle_upper");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto cells = split(rows[i], ',');
      REQUIRE(cells.size() == 5);
      CHECK(std::strtod(cells[4].c_str(), nullptr) >= std::strtod(cells[1].c_str(), nullptr) - 1e-9);
    }
  }
}

TEST_CASE("sweep argument validation") {
  cli::SweepSpec spec;
  spec.family = "eq52";
  spec.steps = 1;
  std::ostringstream sink;
  CHECK_THROWS_AS(cli::run_sweep(spec, sink), ValidationError);
  spec.steps = 3;
  spec.p_min = 0.8;
  spec.p_max = 0.2;
  CHECK_THROWS_AS(cli::run_sweep(spec, sink), ValidationError);
  spec.p_min = 0.0;
  spec.p_max = 1.5;
  CHECK_THROWS_AS(cli::run_sweep(spec, sink), ValidationError);
  spec.p_max = 1.0;
  spec.family = "bell";
  CHECK_THROWS_AS(cli::run_sweep(spec, sink), ValidationError);
  CHECK(sink.str().empty());
}

TEST_CASE("dims parsing") {
  CHECK(cli::parse_dims("3x4") == std::pair<Index, Index>{3, 4});
  CHECK_THROWS_AS(cli::parse_dims("3"), ValidationError);
  CHECK_THROWS_AS(cli::parse_dims("3x"), ValidationError);
  CHECK_THROWS_AS(cli::parse_dims("ax2"), ValidationError);
  CHECK_THROWS_AS(cli::parse_dims("2x2x2"), ValidationError);
}

TEST_CASE("verify passes on random states and is reproducible") {
  cli::VerifySpec spec;
  spec.instances = 4;
  spec.seed = 77;
  std::ostringstream a, b;
  CHECK(cli::run_verify(spec, a));
  CHECK(cli::run_verify(spec, b));
  CHECK(a.str() == b.str());
  const auto lines = lines_of(a.str());
  CHECK(lines.back() == "all checks passed");
  for (const std::string name : {"epsilon-identity", "bloch-roundtrip", "c-matrix-traces", "cct-trace-identity",
                                 "purity-bridge", "closed-form-maximum", "optimal-isometry", "dominance",
                                 "interlacing", "trace-bookkeeping", "measurement-upper-bound", "qubit-exactness"}) {
    CHECK(a.str().find("PASS " + name + " ") != std::string::npos);
  }
}

TEST_CASE("verify flags an invalid state file") {
  const auto path = scratch("low_trace.txt");
  {
    std::ofstream out(path);
    out << "2 2\n";
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out << i << ' ' << j << ' ' << (i == j ? 0.225 : 0.0) << " 0\n";
  }
  cli::VerifySpec spec;
  spec.dims = {{2, 2}};
  spec.instances = 1;
  spec.state_file = path.string();
  std::ostringstream out;
  CHECK_FALSE(cli::run_verify(spec, out));
  CHECK(out.str().find("state-file: INVALID") != std::string::npos);
  CHECK(out.str().find("trace") != std::string::npos);
  CHECK(lines_of(out.str()).back() == "CHECKS FAILED");

  spec.state_file.reset();
  spec.dims = {{4, 4}};
  CHECK_THROWS_AS(cli::run_verify(spec, out), ValidationError);
  spec.dims = {{2, 2}};
  spec.instances = 0;
  CHECK_THROWS_AS(cli::run_verify(spec, out), ValidationError);
}
