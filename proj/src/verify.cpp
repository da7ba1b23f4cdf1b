#include "fdg/verify.hpp"

#include "fdg/analysis.hpp"
#include "fdg/benchmarks.hpp"
#include "fdg/fdg.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fdg::verify {
namespace {

using analysis::Rational;

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string sizes_label(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::ostringstream s;
  s << "n=" << n << " sizes=(";
  for (std::size_t i = 0; i < sizes.size(); ++i) s << (i ? "," : "") << sizes[i];
  s << ")";
  return s.str();
}

// group id per variable, -1 when separable; groups are consecutive blocks
std::vector<int> group_of(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<int> g(n, -1);
  std::size_t at = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes[i]; ++j) g[at++] = static_cast<int>(i);
  return g;
}

bool halving_keeps_groups(std::uint32_t mask, const std::vector<int>& group, std::size_t k) {
  std::vector<int> inside(k, 0), total(k, 0);
  for (std::size_t v = 0; v < group.size(); ++v) {
    if (group[v] < 0) continue;
    ++total[static_cast<std::size_t>(group[v])];
    if (mask >> v & 1u) ++inside[static_cast<std::size_t>(group[v])];
  }
  for (std::size_t g = 0; g < k; ++g)
    if (inside[g] != 0 && inside[g] != total[g]) return false;
  return true;
}

// Exhaustive counterparts of the closed forms for n <= 12.
void enumerate_exact(std::size_t n, const std::vector<std::size_t>& sizes, std::size_t l,
                     std::vector<Check>& out) {
  const auto group = group_of(n, sizes);
  const std::size_t n_n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const std::string label = sizes_label(n, sizes);

  std::uint64_t halvings = 0, kept = 0;
  std::uint64_t draws = 0, with_sep = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto pc = static_cast<std::size_t>(std::popcount(mask));
    if (pc == n / 2) {
      ++halvings;
      kept += halving_keeps_groups(mask, group, sizes.size());
    }
    if (pc == l) {
      ++draws;
      bool sep = false;
      for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v & 1u) && group[v] < 0) sep = true;
      with_sep += sep;
    }
  }
  const Rational enum_s1(kept, halvings);
  out.push_back({"enumeration p_s1 " + label, enum_s1 == analysis::p_s1_exact(n, sizes),
                 "kept " + std::to_string(kept) + " of " + std::to_string(halvings)});

  std::uint64_t pairs = 0, same = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      ++pairs;
      same += group[a] >= 0 && group[a] == group[b];
    }
  const Rational enum_n2(same, pairs);
  out.push_back({"enumeration p_n2 " + label, enum_n2 == analysis::p_n2_exact(n, sizes),
                 std::to_string(same) + " of " + std::to_string(pairs) + " pairs"});

  const double enum_s3 = Rational(with_sep, draws).convert_to<double>();
  const double exact_s3 = analysis::p_s3_exact(n, n_n, l);
  out.push_back({"enumeration p_s3 " + label + " l=" + std::to_string(l),
                 enum_s3 == exact_s3 && analysis::p_s3_bound(n, n_n, l) <= exact_s3,
                 "exact " + fmt(exact_s3) + " bound " + fmt(analysis::p_s3_bound(n, n_n, l))});
}

Check mc_check(const std::string& name, const analysis::Estimate& e, double p) {
  return {name, e.agrees_with(p, 3.0), "mc " + fmt(e.mean) + " formula " + fmt(p)};
}

// Fraction of samples where at least one of l independent halvings splits a
// group, or at least one of l random pairs falls outside every group.
analysis::Estimate mc_any_of(std::size_t n, const std::vector<std::size_t>& sizes, std::size_t l,
                             bool pairs, std::uint64_t samples, Rng& rng) {
  analysis::Estimate e;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool any = false;
    for (std::size_t t = 0; t < l; ++t) {
      Rng child = rng.split();
      const auto one = pairs ? analysis::mc_pair_nonseparable(n, sizes, 1, child)
                             : analysis::mc_halving_separable(n, sizes, 1, child);
      if (one.mean == 0.0) any = true;
    }
    hits += any;
  }
  e.samples = samples;
  e.mean = static_cast<double>(hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(samples));
  return e;
}

std::vector<Check> probabilities(const SuiteOptions& opt) {
  std::vector<Check> out;
  Rng rng(opt.seed);
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> params = {
      {6, {2}},  {12, {3, 4}},      {8, {2, 2}},      {10, {5}},  {12, {2, 2, 2}},
      {16, {4, 4, 4, 4}}, {20, {5, 3}}, {24, {6, 6}}, {24, {2, 3, 4, 5}}, {18, {9, 9}},
  };
  const std::size_t l = 3;
  for (const auto& [n, sizes] : params) {
    const std::string label = sizes_label(n, sizes);
    const std::size_t n_n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    const double s1 = analysis::p_s1(n, sizes);
    const double n2 = analysis::p_n2(n, sizes);
    out.push_back(mc_check("mc p_s1 " + label,
                           analysis::mc_halving_separable(n, sizes, opt.mc_samples, rng), s1));
    out.push_back(mc_check("mc p_n2 " + label,
                           analysis::mc_pair_nonseparable(n, sizes, opt.mc_samples, rng), n2));
    out.push_back(mc_check("mc p_s3 " + label,
                           analysis::mc_svep_early_find(n, n_n, l, opt.mc_samples, rng),
                           analysis::p_s3_exact(n, n_n, l)));
    const std::uint64_t few = std::max<std::uint64_t>(opt.mc_samples / 10, 1000);
    out.push_back(mc_check("mc p_n1 " + label + " l=2",
                           mc_any_of(n, sizes, 2, false, few, rng), analysis::p_n1(s1, 2)));
    out.push_back(mc_check("mc p_s2 " + label + " l=2",
                           mc_any_of(n, sizes, 2, true, few, rng), analysis::p_s2(n2, 2)));
    if (n <= 12) enumerate_exact(n, sizes, l, out);
  }

  // Uniform-size closed form against the general one.
  for (const auto& [n, k, s] : std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{
           {12, 2, 3}, {24, 3, 4}, {100, 5, 10}, {1000, 20, 50}}) {
    const bool same = analysis::p_s1_uniform_exact(n, k, s) ==
                      analysis::p_s1_exact(n, std::vector<std::size_t>(k, s));
    out.push_back({"uniform p_s1 n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " s=" + std::to_string(s),
                   same, same ? "equal" : "differ"});
  }

  const double n2 = analysis::p_n2(1000, std::vector<std::size_t>(20, 50));
  out.push_back({"worked p_n2 n=1000 20x50", std::abs(n2 - 0.049) < 0.0005, "p_n2 " + fmt(n2)});

  const Rational s1 = analysis::p_s1_exact(1000, {50});
  const Rational limit(analysis::BigInt(1), analysis::BigInt(1) << 49);
  out.push_back({"worked p_s1 n=1000 1x50 <= 2^-49", s1 <= limit,
                 "p_s1 " + fmt(s1.convert_to<double>())});

  out.push_back({"no groups p_s1 = 1", analysis::p_s1_exact(10, {}) == 1, ""});
  out.push_back({"one group p_n2 = 1", analysis::p_n2_exact(10, {10}) == 1, ""});
  return out;
}

std::vector<Check> indicators(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  std::size_t cross_ok = 0, cross_total = 0, within_ok = 0, within_total = 0;
  std::size_t judged_ok = 0, judged_total = 0;
  std::size_t per_instance = 50;

  while (cross_total < opt.indicator_pairs || within_total < opt.indicator_pairs) {
    const std::size_t n = 10 + rng.index(91);
    const std::size_t k = 1 + rng.index(4);
    const std::size_t s = 2 + rng.index(std::min<std::size_t>(9, n / (k + 1) - 1));
    const std::uint64_t seed = rng.next();
    const bool balanced = rng.index(2) == 1;
    const auto spec = balanced ? bench::group_schwefel(n, k, s, seed)
                               : bench::imbalanced_group(n, k, s, seed);
    const auto bm = bench::build(spec);
    const auto& problem = bm.problem;

    EvaluationLedger ledger;
    const double y_lb = problem.evaluate(ledger, problem.lower());
    const double y_ub = problem.evaluate(ledger, problem.upper());
    Rng itip_rng = rng.split();
    const auto itip = identify(problem, ledger, y_lb, y_ub, itip_rng);
    const bool judged = itip.thresholds.complete();

    const auto blocks = bm.ground_truth.blocks();
    auto random_context = [&] {
      Vector x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = rng.uniform(problem.lower()[j], problem.upper()[j]);
      return x;
    };

    for (std::size_t t = 0; t < per_instance && cross_total < opt.indicator_pairs; ++t) {
      IndexSet xi, xj;
      while (xi.empty() || xj.empty()) {
        xi.clear();
        xj.clear();
        for (const auto& b : blocks) {
          const auto side = rng.index(3);
          if (side == 0) xi.insert(xi.end(), b.begin(), b.end());
          if (side == 1) xj.insert(xj.end(), b.begin(), b.end());
        }
      }
      const auto ctx = random_context();
      const double v = sample_and_phi(problem, ledger, ctx, xi, xj).phi;
      bool ok = v == kMachineEpsilon;
      if (!ok && judged) ok = judge_sep(v, itip.thresholds).separable;
      cross_ok += ok;
      ++cross_total;
    }

    for (std::size_t t = 0; t < per_instance && within_total < opt.indicator_pairs; ++t) {
      const auto& group = bm.ground_truth.nonseps[rng.index(bm.ground_truth.nonseps.size())];
      IndexSet members = group;
      rng.shuffle(members);
      IndexSet xi{members[0]}, xj{members[1]};
      for (std::size_t v = 0; v < n; ++v) {
        if (v == members[0] || v == members[1]) continue;
        const auto side = rng.index(3);
        if (side == 0) xi.push_back(v);
        if (side == 1) xj.push_back(v);
      }
      const auto ctx = random_context();
      const double v = sample_and_phi(problem, ledger, ctx, xi, xj).phi;
      within_ok += v > kMachineEpsilon;
      // Adaptive thresholds cannot resolve groups weighted many decades
      // below the rest, so the threshold verdict is tallied on balanced
      // weights only.
      if (balanced && judged) {
        ++judged_total;
        judged_ok += v > kMachineEpsilon && !judge_sep(v, itip.thresholds).separable;
      }
      ++within_total;
    }
  }

  const double cross_rate = static_cast<double>(cross_ok) / static_cast<double>(cross_total);
  return {
      {"cross-group pairs separable >= 99.9%", cross_rate >= 0.999,
       std::to_string(cross_ok) + "/" + std::to_string(cross_total)},
      {"within-group pairs nonseparable = 100%", within_ok == within_total,
       std::to_string(within_ok) + "/" + std::to_string(within_total)},
      {"within-group pairs judged by thresholds, balanced weights = 100%",
       judged_ok == judged_total && judged_total > 0,
       std::to_string(judged_ok) + "/" + std::to_string(judged_total)},
  };
}

// Direct transcription kept apart from the library implementation.
double nmi_reference(const std::vector<std::vector<std::size_t>>& a,
                     const std::vector<std::vector<std::size_t>>& b, std::size_t n) {
  double num = 0.0, den = 0.0;
  const double dn = static_cast<double>(n);
  for (const auto& x : a)
    for (const auto& y : b) {
      double m = 0.0;
      for (auto u : x)
        for (auto v : y) m += u == v;
      if (m > 0)
        num += m * std::log2(dn * m / (static_cast<double>(x.size()) * static_cast<double>(y.size())));
    }
  for (const auto& x : a) den += static_cast<double>(x.size()) * std::log2(static_cast<double>(x.size()) / dn);
  for (const auto& y : b) den += static_cast<double>(y.size()) * std::log2(static_cast<double>(y.size()) / dn);
  return -2.0 * num / den * 100.0;
}

std::vector<Check> nmi_suite(const SuiteOptions& opt) {
  std::vector<Check> out;
  const Decomposition pairs{{{0, 1}, {2, 3}}, {}};
  const Decomposition singles{{}, {0, 1, 2, 3}};
  const double fixture = analysis::nmi(pairs, singles, 4);
  out.push_back({"pairs vs singletons n=4", std::abs(fixture - 200.0 / 3.0) < 1e-9, fmt(fixture)});
  out.push_back({"identical partitions", analysis::nmi(pairs, pairs, 4) == 100.0, ""});
  out.push_back({"symmetry", analysis::nmi(singles, pairs, 4) == fixture, ""});

  Rng rng(opt.seed);
  bool agree = true, symmetric = true, bounded = true;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.index(30);
    auto random_partition = [&] {
      const std::size_t parts = 1 + rng.index(n);
      std::vector<IndexSet> blocks(parts);
      for (std::size_t v = 0; v < n; ++v) blocks[rng.index(parts)].push_back(v);
      Decomposition d;
      for (auto& b : blocks) {
        if (b.size() == 1) d.seps.push_back(b[0]);
        else if (b.size() > 1) d.nonseps.push_back(b);
      }
      return d;
    };
    const auto a = random_partition();
    const auto b = random_partition();
    const double ab = analysis::nmi(a, b, n);
    const double ba = analysis::nmi(b, a, n);
    const double ref = a == b ? 100.0 : nmi_reference(a.blocks(), b.blocks(), n);
    if (std::abs(ab - ba) > 1e-9) symmetric = false;
    if (ab < 0.0 || ab > 100.0) bounded = false;
    if (std::isfinite(ref) && std::abs(ab - std::clamp(ref, 0.0, 100.0)) > 1e-9) agree = false;
  }
  out.push_back({"random partitions match transcription", agree, "200 cases"});
  out.push_back({"random partitions symmetric", symmetric, ""});
  out.push_back({"random partitions within [0,100]", bounded, ""});
  return out;
}

std::vector<Check> complexity(const SuiteOptions& opt) {
  std::vector<Check> out;
  double previous = 0.0;
  std::size_t previous_n = 0;
  for (std::size_t n : {64u, 256u, 1024u}) {
    const std::size_t k = n / 16;
    const auto bm = bench::build(bench::group_schwefel(n, k, 16, opt.seed));
    EvaluationLedger ledger;
    Rng rng(opt.seed);
    const auto r = decompose(bm.problem, ledger, rng);
    const double fe = static_cast<double>(r.fe_count);
    const double bound = fe_upper_bound(n, k);
    out.push_back({"FE bound n=" + std::to_string(n) + " k=" + std::to_string(k), fe <= bound,
                   fmt(fe) + " <= " + fmt(bound)});
    if (previous_n != 0) {
      const double quad = std::pow(static_cast<double>(n) / static_cast<double>(previous_n), 2.0);
      out.push_back({"sub-quadratic growth " + std::to_string(previous_n) + "->" + std::to_string(n),
                     fe / previous < quad, "ratio " + fmt(fe / previous) + " < " + fmt(quad)});
    }
    previous = fe;
    previous_n = n;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"probabilities", "indicators", "nmi", "complexity"};
  return names;
}

std::vector<Check> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "probabilities") return probabilities(options);
  if (name == "indicators") return indicators(options);
  if (name == "nmi") return nmi_suite(options);
  if (name == "complexity") return complexity(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void print_table(std::ostream& out, const std::vector<Check>& checks) {
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks)
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
        << c.name << "  " << c.detail << '\n';
}

double fe_upper_bound(std::size_t n, std::size_t k) {
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  return 2.0 * dn * std::log2(dk) + 2.0 * dn + dk + 72.0;
}

}  // namespace fdg::verify
