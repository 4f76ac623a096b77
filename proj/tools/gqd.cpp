// gqd: lower bounds on the geometric quantum discord of bipartite states.
//
//   gqd bounds    --family eq52 --p 0.7        | --state-file rho.txt
//   gqd decompose --family werner --p 1        | --state-file rho.txt
//   gqd sweep     --family eq52 --p-min 0 --p-max 1 --steps 101 [--oracle] [--seed S] --out fig1.csv
//   gqd verify    [--dims 2x2,3x3] [--instances 50] [--seed S] [--state-file rho.txt]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gqd/commands.hpp"
#include "gqd/states.hpp"

namespace {

using namespace gqd;

void add_state_options(CLI::App* cmd, cli::StateSource& source) {
  cmd->add_option("--state-file", source.state_file, "State file ('m n' header, then 'i j re im' rows)");
  cmd->add_option("--family", source.family, "State family: eq52, eq53, werner");
  cmd->add_option("--p", source.p, "Family parameter in [0, 1]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds on the geometric measure of quantum discord"};
  app.require_subcommand(1);

  cli::StateSource bounds_source;
  auto* bounds = app.add_subcommand("bounds", "Tight and Luo-Fu lower bounds with spectra");
  add_state_options(bounds, bounds_source);

  cli::StateSource decompose_source;
  auto* decompose = app.add_subcommand("decompose", "Coherence vectors, correlation matrix and G spectrum");
  add_state_options(decompose, decompose_source);

  cli::SweepSpec sweep_spec;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Bounds along a one-parameter family, written as CSV");
  sweep->add_option("--family", sweep_spec.family, "eq52, eq53 or werner")->required();
  sweep->add_option("--p-min", sweep_spec.p_min, "First parameter value")->capture_default_str();
  sweep->add_option("--p-max", sweep_spec.p_max, "Last parameter value")->capture_default_str();
  sweep->add_option("--steps", sweep_spec.steps, "Number of rows")->capture_default_str();
  sweep->add_flag("--oracle", sweep_spec.include_oracle, "Add the measurement-minimization column");
  sweep->add_option("--seed", sweep_spec.seed, "Seed of the random-basis oracle")->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output CSV path ('-' for stdout)")->required();

  cli::VerifySpec verify_spec;
  std::vector<std::string> verify_dims;
  auto* verify = app.add_subcommand("verify", "Invariant suite on random states");
  verify->add_option("--dims", verify_dims, "Bipartitions MxN among 2x2,2x3,3x2,3x3,3x4")->delimiter(',');
  verify->add_option("--instances", verify_spec.instances, "Random states per bipartition")->capture_default_str();
  verify->add_option("--seed", verify_spec.seed, "Seed")->capture_default_str();
  verify->add_option("--state-file", verify_spec.state_file, "Additional state to validate and check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kInvalidInput;
  }

  try {
    if (*bounds) {
      cli::write_bounds(std::cout, cli::load_state(bounds_source));
    } else if (*decompose) {
      cli::write_decomposition(std::cout, cli::load_state(decompose_source));
    } else if (*sweep) {
      if (sweep_out == "-") {
        cli::run_sweep(sweep_spec, std::cout);
      } else {
        std::ofstream out(sweep_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + sweep_out + " for writing");
        cli::run_sweep(sweep_spec, out);
        if (!out) throw std::runtime_error("write to " + sweep_out + " failed");
      }
    } else if (*verify) {
      if (!verify_dims.empty()) {
        verify_spec.dims.clear();
        for (const auto& d : verify_dims) verify_spec.dims.push_back(cli::parse_dims(d));
      }
      return cli::run_verify(verify_spec, std::cout) ? cli::kSuccess : cli::kCheckFailed;
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return cli::kInvalidInput;
  } catch (const ParseError& e) {
    std::cerr << "malformed state file: " << e.what() << '\n';
    return cli::kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInvalidInput;
  }
  return cli::kSuccess;
}
