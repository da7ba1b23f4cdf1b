#include "cli.hpp"

#include "fdg/analysis.hpp"
#include "fdg/cc.hpp"
#include "fdg/serialization.hpp"
#include "fdg/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace fdg::cli {
namespace {

using io::Json;

struct Options {
  std::uint64_t seed = 0;
  std::string problem;
  std::string out;
  bool oracle = false;
  bool force_psdp = false;
  std::string budget_text;
  std::uint64_t budget = 0;
  std::string framework = "decc";
  std::string suite;
  double gap_factor = kDefaultGapFactor;
  std::size_t trials = kDefaultTrials;
  std::string trace;
  std::string lambda_csv;
  std::string separables = "singletons";
  cc::DeParams de;
  std::uint64_t samples = 1'000'000;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  write_text(opt.out, report.dump(2) + "\n", out);
}

std::size_t oracle_cap() {
  const char* env = std::getenv("FDG_ORACLE_CAP");
  if (!env || !*env) return analysis::kDefaultOracleCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || env[0] == '-') throw UsageError("FDG_ORACLE_CAP must be an unsigned integer");
  return static_cast<std::size_t>(v);
}

FdgConfig fdg_config(const Options& opt) {
  FdgConfig c;
  c.trials = opt.trials;
  c.gap_factor = opt.gap_factor;
  c.force_psdp = opt.force_psdp;
  return c;
}

Json decomposition_report(const bench::Benchmark& bm, const FdgResult& r) {
  const std::size_t n = bm.problem.dimension();
  Json j;
  j["type"] = std::string(to_string(r.trace.type));
  const auto d = io::to_json(r.decomposition);
  j["nonseps"] = d["nonseps"];
  j["seps"] = d["seps"];
  j["feNum"] = r.fe_count;
  j["thresholds"] = io::to_json(r.trace.final_thresholds);
  j["nmi_vs_ground_truth"] = analysis::nmi(r.decomposition, bm.ground_truth, n);
  j["nmi_vs_oracle"] = nullptr;
  return j;
}

int cmd_decompose(const Options& opt, std::ostream& out) {
  const auto spec = io::load_spec(opt.problem);
  const auto bm = bench::build(spec);
  const std::size_t cap = opt.oracle ? oracle_cap() : 0;

  Rng rng(opt.seed);
  EvaluationLedger ledger;
  const auto r = decompose(bm.problem, ledger, rng, fdg_config(opt));
  Json report = decomposition_report(bm, r);

  if (opt.oracle) {
    EvaluationLedger oracle_ledger;
    const auto o = analysis::pairwise_oracle(bm.problem, oracle_ledger, cap, opt.gap_factor);
    report["nmi_vs_oracle"] = analysis::nmi(r.decomposition, o.decomposition, bm.problem.dimension());
    report["oracle"] = {{"feNum", o.fe_count}, {"partition", io::to_json(o.decomposition)}};
  }
  report["trace"] = io::trace_to_json(r.trace);
  report["problem"] = io::spec_to_json(spec);
  report["seed"] = opt.seed;

  if (!opt.lambda_csv.empty()) {
    std::ostringstream csv;
    io::write_lambda_csv(csv, r.trace.itip.analysis);
    write_text(opt.lambda_csv, csv.str(), out);
  }
  emit(report, opt, out);
  return kOk;
}

std::string trace_path(const Options& opt) {
  if (!opt.trace.empty()) return opt.trace;
  if (opt.out.empty()) return {};
  std::filesystem::path p(opt.out);
  p.replace_extension(".csv");
  return p.string();
}

// Accepts plain integers and integral scientific notation such as 5e4.
std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--budget must be a non-negative integer");
  }
  if (used != text.size() || !(v >= 0.0) || v != std::floor(v) || v > 9.0e15)
    throw UsageError("--budget must be a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

int cmd_optimize(Options opt, std::ostream& out, std::ostream& err) {
  if (opt.framework != "decc" && opt.framework != "mono")
    throw UsageError("--framework must be decc or mono");
  if (opt.budget_text.empty()) throw UsageError("--budget is required");
  opt.budget = parse_budget(opt.budget_text);
  const auto spec = io::load_spec(opt.problem);
  const auto bm = bench::build(spec);

  Json report;
  report["framework"] = opt.framework;
  report["budget"] = opt.budget;
  report["problem"] = io::spec_to_json(spec);
  report["seed"] = opt.seed;
  if (opt.budget == 0) {
    report["status"] = "budget_exceeded";
    report["feNum"] = 0;
    emit(report, opt, out);
    err << "budget must be positive\n";
    return kBudget;
  }

  Rng rng(opt.seed);
  EvaluationLedger ledger(opt.budget);
  cc::CcResult result;
  if (opt.framework == "decc") {
    const auto d = decompose(bm.problem, ledger, rng, fdg_config(opt));
    report["decomposition"] = decomposition_report(bm, d);
    report["decomposition_feNum"] = d.fe_count;
    if (ledger.count() >= opt.budget) {
      report["status"] = "budget_exceeded";
      report["feNum"] = ledger.count();
      emit(report, opt, out);
      err << "budget " << opt.budget << " does not exceed the decomposition cost "
          << ledger.count() << "\n";
      return kBudget;
    }
    cc::CcConfig config;
    config.de = opt.de;
    config.separables = opt.separables == "whole" ? cc::SeparablePolicy::Whole
                                                  : cc::SeparablePolicy::Singletons;
    result = cc::decc_optimize(bm.problem, d.decomposition, ledger, config, rng);
  } else {
    report["decomposition_feNum"] = 0;
    result = cc::mono_optimize(bm.problem, ledger, opt.de, rng);
  }

  report["status"] = result.truncated ? "truncated" : "ok";
  report["feNum"] = ledger.count();
  report["final_fitness"] = result.best_fitness;
  report["cycles"] = result.cycles;
  report["best"] = result.best;

  if (const auto path = trace_path(opt); !path.empty()) {
    std::ostringstream csv;
    cc::write_trace_csv(csv, result.trace);
    write_text(path, csv.str(), out);
  }
  emit(report, opt, out);
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  verify::SuiteOptions so;
  so.seed = opt.seed;
  so.mc_samples = opt.samples;
  const auto checks = verify::run_suite(opt.suite, so);
  verify::print_table(out, checks);
  if (!opt.out.empty()) {
    Json j;
    j["suite"] = opt.suite;
    j["seed"] = opt.seed;
    j["passed"] = verify::all_passed(checks);
    j["checks"] = Json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + opt.out);
    f << j.dump(2) << "\n";
  }
  return verify::all_passed(checks) ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Fast differential grouping: decompose, optimize, verify", "fdg_cli"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "Seed of the random stream (unsigned 64-bit)");

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--problem", opt.problem, "Problem spec JSON file")->required();
    sub->add_option("--gap-factor", opt.gap_factor, "Gap factor of the indicator analysis")
        ->check(CLI::Range(1e3, 1e8));
    sub->add_option("--trials", opt.trials, "Probe pairs per selection rule")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--force-psdp", opt.force_psdp, "Run the grouping loop on every instance");
  };

  auto* dec = app.add_subcommand("decompose", "Decompose a benchmark and write a JSON report");
  add_problem(dec);
  dec->add_option("--out", opt.out, "Report path (stdout when omitted)");
  dec->add_flag("--oracle", opt.oracle, "Compare against the pairwise oracle");
  dec->add_option("--lambda-csv", opt.lambda_csv, "Write the sorted indicators and ratios");

  auto* optz = app.add_subcommand("optimize", "Decompose then optimize, or run plain DE");
  add_problem(optz);
  optz->add_option("--out", opt.out, "Summary JSON path (stdout when omitted)");
  optz->add_option("--budget", opt.budget_text, "Total evaluations, decomposition included");
  optz->add_option("--framework", opt.framework, "decc or mono");
  optz->add_option("--trace", opt.trace, "Convergence CSV (default: --out with .csv)");
  optz->add_option("--separables", opt.separables, "singletons or whole")
      ->check(CLI::IsMember({"singletons", "whole"}));
  optz->add_option("--population", opt.de.population, "DE population size")
      ->check(CLI::Range(4, 100000));
  optz->add_option("--F", opt.de.f, "DE differential weight");
  optz->add_option("--CR", opt.de.cr, "DE crossover rate")->check(CLI::Range(0.0, 1.0));
  optz->add_option("--generations", opt.de.generations_per_cycle, "DE generations per cycle")
      ->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run a property suite and print a pass/fail table");
  ver->add_option("--suite", opt.suite, "probabilities, indicators, nmi or complexity")->required();
  ver->add_option("--out", opt.out, "Also write the results as JSON");
  ver->add_option("--samples", opt.samples, "Monte Carlo samples per estimate")
      ->check(CLI::PositiveNumber);
  app.fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*dec) return cmd_decompose(opt, out);
    if (*optz) return cmd_optimize(opt, out, err);
    return cmd_verify(opt, out);
  } catch (const analysis::CapExceeded& e) {
    err << e.what() << "\n";
    return kCapExceeded;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fdg::cli
