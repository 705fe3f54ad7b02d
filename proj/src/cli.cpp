#include "rankone/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "rankone/checks.hpp"
#include "rankone/embedding.hpp"
#include "rankone/json_io.hpp"
#include "rankone/suite.hpp"

namespace rankone::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 7;
const char* const kSeedEnv = "RANKONE_SEED";

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t default_seed() {
  const char* v = std::getenv(kSeedEnv);
  if (!v || !*v) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto s = std::stoull(v, &used);
    if (used == std::string(v).size()) return s;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(kSeedEnv) + " must be a nonnegative integer, got '" + v + "'");
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const char* const kCsvHeader = "check,ring,n,seed,trials,max_residual,pass,elapsed_ms";

std::string report_csv(const StructureReport& r) {
  std::ostringstream s;
  s << r.check << ',' << r.ring << ',' << r.n << ',' << r.seed << ',' << r.trials << ','
    << fmt("%.17g", r.max_residual) << ',' << (r.pass ? "true" : "false") << ',' << fmt("%.3f", r.elapsed_ms);
  return s.str();
}

/// Report sink honoring --out and --format.
class Emitter {
 public:
  Emitter(std::ostream& out, const std::string& path, const std::string& format) : format_(format) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open output file '" + path + "'");
    }
    out_ = path.empty() ? &out : &file_;
  }
  bool csv() const { return format_ == "csv"; }
  std::ostream& stream() { return *out_; }
  void report(const StructureReport& r) {
    if (csv()) {
      if (!header_done_) *out_ << kCsvHeader << '\n';
      header_done_ = true;
      *out_ << report_csv(r) << '\n';
    } else {
      *out_ << report_to_json(r).dump() << '\n';
    }
    out_->flush();
  }

 private:
  std::string format_;
  std::ofstream file_;
  std::ostream* out_;
  bool header_done_ = false;
};

void summary_table(std::ostream& err, const std::vector<StructureReport>& reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-16s %3s %7s %12s %6s\n", "check", "ring", "n", "trials", "max_residual",
                "result");
  err << line;
  int failed = 0;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-22s %-16s %3zu %7d %12.3e %6s\n", r.check.c_str(), r.ring.c_str(), r.n,
                  r.trials, r.max_residual, r.pass ? "pass" : "FAIL");
    err << line;
    failed += r.pass ? 0 : 1;
  }
  err << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks passed\n";
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> checks;
  std::string ring = "gaussian-q";
  std::size_t n = 2;
  int trials = 100;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  double fd_step = 1e-4;
  unsigned workers = 1;
  bool no_timing = false;
};

int do_verify(const VerifyArgs& a, Emitter& em, std::ostream& err) {
  validate_ring(a.ring);
  for (const auto& c : a.checks)
    if (!is_check(c)) throw UsageError("unknown check '" + c + "'");
  std::vector<StructureReport> reports;
  for (const auto& c : a.checks) {
    TrialConfig cfg;
    cfg.seed = a.seed ? *a.seed : default_seed();
    cfg.trials = a.trials;
    cfg.tol = a.tol ? *a.tol : default_tolerance(c, a.ring);
    cfg.fd_step = a.fd_step;
    cfg.ring = a.ring;
    cfg.n = a.n;
    cfg.workers = a.workers;
    cfg.timing = !a.no_timing;
    reports.push_back(run_check(c, cfg));
    em.report(reports.back());
  }
  summary_table(err, reports);
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string ring;
  std::size_t n = 2;
  std::uint64_t budget = EnumerateOptions{}.budget;
  unsigned workers = 1;
  bool emit_points = false;
  bool no_timing = false;
};

int do_enumerate(const EnumerateArgs& a, Emitter& em, std::ostream& err) {
  validate_ring(a.ring);
  EnumerateOptions opt;
  opt.budget = a.budget;
  opt.workers = a.workers;
  const auto r = run_enumeration(a.ring, a.n, opt, a.emit_points, !a.no_timing);
  auto& o = em.stream();
  if (em.csv()) {
    o << "ring,n,count,elapsed_ms\n" << r.ring << ',' << r.n << ',' << r.count << ',' << fmt("%.3f", r.elapsed_ms)
      << '\n';
  } else {
    Json j;
    j["ring"] = r.ring;
    j["n"] = r.n;
    j["count"] = r.count;
    j["elapsed_ms"] = r.elapsed_ms;
    o << j.dump() << '\n';
  }
  for (const auto& p : r.points) o << p.dump() << '\n';
  o.flush();
  err << r.ring << " n=" << r.n << ": " << r.count << " rank-1 projections\n";
  return 0;
}

// ---------------------------------------------------------------- embed

struct EmbedArgs {
  std::string input;
  std::string sheet = "+";
  bool check_roundtrip = false;
  double tol = 1e-12;
  double roundtrip_tol = 1e-10;
};

/// Entries may be numbers, [re, im] pairs or rational strings.
MachineComplex read_entry(const Json& j) {
  if (j.is_string()) return MachineComplex(Rational::parse(j.get<std::string>()).to_double());
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return MachineComplex(Rational::parse(j[0].get<std::string>()).to_double(),
                          Rational::parse(j[1].get<std::string>()).to_double());
  return json_reader<MachineComplex>::read(j);
}

Matrix<MachineComplex> read_input_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("q")) throw ParseError("input object needs a \"q\" matrix");
    j = j["q"];
  }
  if (!j.is_array() || j.empty()) throw ParseError("input must be a nonempty square matrix");
  Matrix<MachineComplex> q(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("input matrix must be square");
    for (std::size_t k = 0; k < j.size(); ++k) q(i, k) = read_entry(j[i][k]);
  }
  return q;
}

int do_embed(const EmbedArgs& a, Emitter& em, std::ostream& err) {
  if (a.sheet != "+" && a.sheet != "-") throw UsageError("--sheet must be + or -");
  const int sheet = a.sheet == "+" ? 1 : -1;
  const auto q = read_input_matrix(a.input);
  const auto t = embed_projection(q, sheet);
  em.stream() << triple_to_json(t).dump() << '\n';
  em.stream().flush();

  bool ok = true;
  char line[128];
  std::snprintf(line, sizeof line, "%-12s %12s %6s\n", "residual", "value", "result");
  err << line;
  const auto res = variety_residuals(t);
  for (std::size_t k = 0; k < res.size(); ++k) {
    const bool pass = res[k] <= a.tol;
    ok = ok && pass;
    std::snprintf(line, sizeof line, "%-12s %12.3e %6s\n", kVarietyResidualNames[k], res[k], pass ? "pass" : "FAIL");
    err << line;
  }
  if (a.check_roundtrip) {
    const double d = max_magnitude(variety_to_projection(t) - q);
    const bool pass = d <= a.roundtrip_tol;
    ok = ok && pass;
    std::snprintf(line, sizeof line, "%-12s %12.3e %6s\n", "roundtrip", d, pass ? "pass" : "FAIL");
    err << line;
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- suite

struct SuiteArgs {
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

int do_suite(const SuiteArgs& a, Emitter& em, std::ostream& err) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const auto result = run_suite(seed, a.timing, [&](const StructureReport& r) { em.report(r); });
  if (!em.csv()) {
    Json j;
    j["suite"] = "acceptance";
    j["seed"] = result.seed;
    j["checks"] = result.reports.size();
    j["pass"] = result.pass;
    em.stream() << j.dump() << '\n';
  }
  summary_table(err, result.reports);
  return result.pass ? 0 : 1;
}

std::string ring_help() {
  return "ring tag: rational, gaussian-q, bicomplex, split, quaternion-q, machine-complex, fp:p, zmod:m";
}

std::string check_help() {
  std::string s = "check name (repeatable):";
  for (const auto& c : check_names()) s += " " + c;
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-1 projection structure checks over exact and machine rings", "rankone"};
  app.require_subcommand(1);
  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "write reports to this file instead of stdout");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run randomized structure checks");
  verify->add_option("--check", va.checks, check_help())->required();
  verify->add_option("--ring", va.ring, ring_help());
  verify->add_option("--n", va.n, "matrix size")->check(CLI::PositiveNumber);
  verify->add_option("--trials", va.trials, "number of seeded trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, std::string("seed (default $") + kSeedEnv + " or 7)");
  verify->add_option("--tol", va.tol, "residual tolerance (default: 0 for exact rings, per check otherwise)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--fd-step", va.fd_step, "finite-difference step")->check(CLI::PositiveNumber);
  verify->add_option("--workers", va.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", va.no_timing, "report elapsed_ms as 0 for byte-identical output");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "count rank-1 projections over a finite ring");
  enumerate->add_option("--ring", ea.ring, "fp:p or zmod:m")->required();
  enumerate->add_option("--n", ea.n, "matrix size")->check(CLI::PositiveNumber);
  enumerate->add_option("--budget", ea.budget, "largest number of candidate matrices to scan");
  enumerate->add_option("--workers", ea.workers, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--emit-points", ea.emit_points, "print every projection as a JSON matrix");
  enumerate->add_flag("--no-timing", ea.no_timing, "report elapsed_ms as 0");

  EmbedArgs ma;
  auto* embed = app.add_subcommand("embed", "embed a complex rank-1 projection into the variety");
  embed->add_option("--input", ma.input, "JSON file holding the projection matrix")->required();
  embed->add_option("--sheet", ma.sheet, "sheet sign, + or -");
  embed->add_flag("--check-roundtrip", ma.check_roundtrip, "also map the triple back and compare");
  embed->add_option("--tol", ma.tol, "tolerance for the variety residuals")->check(CLI::NonNegativeNumber);

  SuiteArgs sa;
  auto* suite = app.add_subcommand("suite", "run the full acceptance matrix");
  suite->add_option("--seed", sa.seed, std::string("seed (default $") + kSeedEnv + " or 7)");
  suite->add_flag("--timing", sa.timing, "record elapsed_ms (output is then no longer byte-identical)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Emitter em(out, out_path, format);
    if (*verify) return do_verify(va, em, err);
    if (*enumerate) return do_enumerate(ea, em, err);
    if (*embed) return do_embed(ma, em, err);
    return do_suite(sa, em, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const RingRefused& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rankone::cli
