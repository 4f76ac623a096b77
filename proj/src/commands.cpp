#include "gqd/commands.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "gqd/oracle.hpp"
#include "gqd/states.hpp"

namespace gqd::cli {

namespace {

constexpr std::pair<Index, Index> kSupportedDims[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}};

void write_vector(std::ostream& out, const char* label, const RealVector& v) {
  out << label << ':';
  for (Index i = 0; i < v.size(); ++i) out << ' ' << format_double(v[i]);
  out << '\n';
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t dims_index, int instance) {
  // splitmix64 finalizer over the packed coordinates
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (dims_index + 1)) ^ (0xBF58476D1CE4E5B9ULL * (instance + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Ordered tally of named checks.
class Tally {
 public:
  void record(const std::string& name, bool ok, double measure) {
    auto [it, inserted] = index_.try_emplace(name, entries_.size());
    if (inserted) entries_.push_back({name, 0, 0, 0.0});
    Entry& e = entries_[it->second];
    ++e.total;
    if (ok) ++e.passed;
    e.worst = std::max(e.worst, measure);
  }

  bool all_passed() const {
    for (const auto& e : entries_)
      if (e.passed != e.total) return false;
    return true;
  }

  void print(std::ostream& out) const {
    for (const auto& e : entries_) {
      out << (e.passed == e.total ? "PASS " : "FAIL ") << e.name << ' ' << e.passed << '/' << e.total
          << " worst=" << format_double(e.worst) << '\n';
    }
  }

 private:
  struct Entry {
    std::string name;
    int passed;
    int total;
    double worst;
  };
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

void check_state(const DensityMatrix& rho, std::uint64_t seed, Tally& tally) {
  const Index m = rho.m();
  const Index n = rho.n();
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);

  const BlochRep b = decompose(rho);
  const CMatrix c = build_c_matrix(b);
  const double tr_cct = c.entries.squaredNorm();

  const double roundtrip = (reconstruct(b) - rho.matrix()).cwiseAbs().maxCoeff();
  tally.record("bloch-roundtrip", roundtrip <= 1e-10, roundtrip);

  const GeneratorBasis ga(m);
  const GeneratorBasis gb(n);
  const double c_defect = (c.entries - c_matrix_by_traces(rho, ga, gb).entries).cwiseAbs().maxCoeff();
  tally.record("c-matrix-traces", c_defect <= 1e-10, c_defect);

  const double eq19 = std::abs(tr_cct - cct_trace_from_bloch(b));
  tally.record("cct-trace-identity", eq19 <= 1e-10, eq19);

  const double purity = std::abs(tr_cct - rho.purity());
  tally.record("purity-bridge", purity <= 1e-10, purity);

  const ClosedFormCheck closed = verify_closed_form_maximum(b);
  const double closed_gap = std::abs(closed.direct - closed.closed_form);
  tally.record("closed-form-maximum", closed_gap <= 1e-10, closed_gap);

  const GramMatrix g = gram_matrix(b);
  const IsometryConstruction iso = build_optimal_isometry(m, g.F);
  double iso_defect = (iso.A * iso.A.transpose() - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
  RealMatrix expected_gram = RealMatrix::Constant(m, m, -1.0 / (md - 1.0));
  expected_gram.diagonal().setOnes();
  iso_defect = std::max(iso_defect, (iso.E * iso.E.transpose() - expected_gram).cwiseAbs().maxCoeff());
  RealVector expected_sums = RealVector::Zero(m * m);
  expected_sums[0] = std::sqrt(md);
  iso_defect = std::max(iso_defect, (iso.A.colwise().sum().transpose() - expected_sums).cwiseAbs().maxCoeff());
  tally.record("optimal-isometry", iso_defect <= 1e-10, iso_defect);

  const BoundsReport report = compute_bounds(b);
  const double dominance_gap = std::max(0.0, report.luo_fu_bound - report.tight_bound);
  tally.record("dominance", dominance_gap <= 1e-10, dominance_gap);

  const InterlacingCheck inter = verify_interlacing(c);
  tally.record("interlacing", inter.holds, std::max(inter.max_violation, inter.bordered_mismatch));

  const double a = 1.0 / (md * nd) + 2.0 * b.y.squaredNorm() / (nd * nd * md);
  const double bookkeeping = std::max(std::abs(a + 2.0 / (md * md * nd) * report.eta.sum() - report.tr_cct),
                                      std::abs(report.lambda.sum() - report.tr_cct));
  tally.record("trace-bookkeeping", bookkeeping <= 1e-10, bookkeeping);

  const double measured = distance_after_measurement(rho, haar_random_basis(m, seed, 0));
  const double sandwich = std::max(0.0, report.tight_bound - measured);
  tally.record("measurement-upper-bound", sandwich <= 1e-9, sandwich);

  if (m == 2) {
    const double exact = std::abs(minimize_qubit_measurement(rho).value - report.tight_bound);
    tally.record("qubit-exactness", exact <= 1e-5, exact);
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

DensityMatrix family_state(const std::string& family, double p) {
  if (family == "eq52") return eq52_state(p);
  if (family == "eq53") return eq53_state(p);
  if (family == "werner") return werner_qubit(p);
  throw ValidationError("family", "unknown family '" + family + "' (expected eq52, eq53 or werner)");
}

DensityMatrix load_state(const StateSource& source) {
  if (source.state_file && (source.family || source.p))
    throw ValidationError("arguments", "give either --state-file or --family/--p, not both");
  if (source.state_file) {
    DensityMatrix rho = read_state(std::filesystem::path(*source.state_file));
    if (!rho.has_bipartition()) throw ValidationError("bipartition", "state file declares n = 1");
    return rho;
  }
  if (!source.family || !source.p) throw ValidationError("arguments", "need --state-file, or --family with --p");
  return family_state(*source.family, *source.p);
}

void write_bounds(std::ostream& out, const DensityMatrix& rho) {
  const BoundsReport r = compute_bounds(rho);
  out << "dims: " << rho.m() << ' ' << rho.n() << '\n';
  out << "tight_bound_raw: " << format_double(r.tight_bound) << '\n';
  out << "tight_bound: " << format_double(r.tight_bound_clamped) << '\n';
  out << "luo_fu_bound: " << format_double(r.luo_fu_bound) << '\n';
  out << "tr_cct: " << format_double(r.tr_cct) << '\n';
  out << "dominance: " << (r.dominance_ok ? "ok" : "VIOLATED") << '\n';
  write_vector(out, "eta", r.eta);
  write_vector(out, "lambda", r.lambda);
}

void write_decomposition(std::ostream& out, const DensityMatrix& rho) {
  const BlochRep b = decompose(rho);
  out << "dims: " << b.m << ' ' << b.n << '\n';
  write_vector(out, "x", b.x);
  write_vector(out, "y", b.y);
  for (Index i = 0; i < b.T.rows(); ++i) {
    const std::string label = "T[" + std::to_string(i) + "]";
    write_vector(out, label.c_str(), b.T.row(i).transpose());
  }
  write_vector(out, "eta", gram_matrix(b).eta);
}

void validate(const SweepSpec& spec) {
  if (spec.family != "eq52" && spec.family != "eq53" && spec.family != "werner")
    throw ValidationError("family", "unknown family '" + spec.family + "' (expected eq52, eq53 or werner)");
  if (!(spec.p_min >= 0.0 && spec.p_max <= 1.0 && spec.p_min <= spec.p_max))
    throw ValidationError("parameter", "need 0 <= p-min <= p-max <= 1");
  if (spec.steps < 2) throw ValidationError("steps", "need at least 2 steps");
}

double sweep_point(const SweepSpec& spec, int i) {
  if (i == spec.steps - 1) return spec.p_max;
  return spec.p_min + (spec.p_max - spec.p_min) * static_cast<double>(i) / static_cast<double>(spec.steps - 1);
}

void run_sweep(const SweepSpec& spec, std::ostream& csv) {
  validate(spec);
  std::vector<std::string> rows(static_cast<std::size_t>(spec.steps));
  // Rows are independent; they are stored by index so the output order never
  // depends on evaluation order.
  for (int i = 0; i < spec.steps; ++i) {
    const double p = sweep_point(spec, i);
    const DensityMatrix rho = family_state(spec.family, p);
    const BoundsReport r = compute_bounds(rho);
    std::string row = format_double(p) + ',' + format_double(r.tight_bound) + ',' +
                      format_double(r.tight_bound_clamped) + ',' + format_double(r.luo_fu_bound);
    if (spec.include_oracle) {
      const double upper = rho.m() == 2 ? minimize_qubit_measurement(rho).value
                                        : sample_measurement_upper_bound(rho, kSweepOracleSamples, spec.seed).value;
      row += ',' + format_double(upper);
    }
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  csv << "p,tight_raw,tight,luo_fu" << (spec.include_oracle ? ",oracle_upper" : "") << '\n';
  for (const auto& row : rows) csv << row << '\n';
}

std::pair<Index, Index> parse_dims(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_m = 0;
    std::size_t used_n = 0;
    const Index m = std::stol(text.substr(0, x), &used_m);
    const Index n = std::stol(text.substr(x + 1), &used_n);
    if (used_m != x || used_n != text.size() - x - 1) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::logic_error&) {
    throw ValidationError("dims", "cannot parse dims '" + text + "' (expected MxN)");
  }
}

bool run_verify(const VerifySpec& spec, std::ostream& out) {
  for (const auto& d : spec.dims) {
    bool supported = false;
    for (const auto& s : kSupportedDims) supported = supported || s == d;
    if (!supported) {
      std::ostringstream os;
      os << "dims " << d.first << "x" << d.second << " not among 2x2, 2x3, 3x2, 3x3, 3x4";
      throw ValidationError("dims", os.str());
    }
  }
  if (spec.instances < 1) throw ValidationError("instances", "need at least one instance");

  Tally tally;
  out << "seed: " << spec.seed << '\n';
  out << "instances per dims: " << spec.instances << '\n';

  std::vector<Index> qudit_dims;
  for (const auto& d : spec.dims)
    if (d.first >= 3 && std::find(qudit_dims.begin(), qudit_dims.end(), d.first) == qudit_dims.end())
      qudit_dims.push_back(d.first);
  for (Index m : qudit_dims) {
    const RealMatrix eps = epsilon_table(m);
    const double target = static_cast<double>(m) / (2.0 * (static_cast<double>(m) - 1.0));
    for (Index k = 1; k + 1 < m; ++k) {
      const double gap = std::abs(epsilon_identity_lhs(eps, k) - target);
      tally.record("epsilon-identity", gap <= 1e-12, gap);
    }
  }

  for (std::size_t di = 0; di < spec.dims.size(); ++di) {
    const auto [m, n] = spec.dims[di];
    for (int i = 0; i < spec.instances; ++i) {
      const std::uint64_t s = instance_seed(spec.seed, di, i);
      const Index rank = 1 + static_cast<Index>(i) % (m * n);
      check_state(random_bipartite_state(m, n, rank, s), s, tally);
    }
  }

  bool injected_ok = true;
  if (spec.state_file) {
    try {
      const DensityMatrix rho = load_state(StateSource{spec.state_file, std::nullopt, std::nullopt});
      check_state(rho, spec.seed, tally);
      out << "state-file: valid\n";
    } catch (const ValidationError& e) {
      injected_ok = false;
      out << "state-file: INVALID (" << e.what() << ")\n";
    } catch (const ParseError& e) {
      injected_ok = false;
      out << "state-file: INVALID (parse error, " << e.what() << ")\n";
    }
  }

  tally.print(out);
  const bool ok = injected_ok && tally.all_passed();
  out << (ok ? "all checks passed" : "CHECKS FAILED") << '\n';
  return ok;
}

}  // namespace gqd::cli
