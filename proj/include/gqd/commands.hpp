#pragma once

// The operations behind the `gqd` command-line tool. They write to a stream
// and throw on invalid input, so the same code is exercised by tests and by
// the executable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqd/bounds.hpp"
#include "gqd/density_matrix.hpp"

namespace gqd::cli {

/// Process exit codes of the tool.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,  // `verify` found a failing check or an invalid injected state
  kInvalidInput = 2  // bad arguments, unreadable or invalid state
};

/// Random-basis samples per sweep row for the m >= 3 oracle column.
inline constexpr std::size_t kSweepOracleSamples = 2000;

/// 17 significant digits, '.' separator.
std::string format_double(double v);

/// Known families: "eq52", "eq53", "werner".
DensityMatrix family_state(const std::string& family, double p);

struct StateSource {
  std::optional<std::string> state_file;
  std::optional<std::string> family;
  std::optional<double> p;
};

/// Exactly one of a state file or a family with --p must be given.
DensityMatrix load_state(const StateSource& source);

void write_bounds(std::ostream& out, const DensityMatrix& rho);
void write_decomposition(std::ostream& out, const DensityMatrix& rho);

struct SweepSpec {
  std::string family;
  double p_min = 0.0;
  double p_max = 1.0;
  int steps = 101;
  bool include_oracle = false;
  std::uint64_t seed = 1;
};

void validate(const SweepSpec& spec);
/// Parameter of row `i`; the last row is exactly p_max.
double sweep_point(const SweepSpec& spec, int i);
/// CSV with header `p,tight_raw,tight,luo_fu[,oracle_upper]`, LF endings.
void run_sweep(const SweepSpec& spec, std::ostream& csv);

struct VerifySpec {
  std::vector<std::pair<Index, Index>> dims{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}};
  int instances = 50;
  std::uint64_t seed = 1;
  std::optional<std::string> state_file;
};

/// Parses "MxN".
std::pair<Index, Index> parse_dims(const std::string& text);

/// Runs the invariant suite and prints one line per check. Returns true when
/// every check passed.
bool run_verify(const VerifySpec& spec, std::ostream& out);

}  // namespace gqd::cli
