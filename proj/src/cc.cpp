#include "fdg/cc.hpp"

#include <numeric>
#include <stdexcept>

namespace fdg::cc {

std::vector<IndexSet> subproblems(const Decomposition& decomposition, SeparablePolicy policy) {
  const auto canon = decomposition.canonical();
  std::vector<IndexSet> out = canon.nonseps;
  if (canon.seps.empty()) return out;
  if (policy == SeparablePolicy::Whole) {
    out.push_back(canon.seps);
  } else {
    for (auto v : canon.seps) out.push_back({v});
  }
  return out;
}

namespace {

struct Subproblem {
  IndexSet subset;
  Population population;
  bool stale = false;  // context moved outside `subset` since last evaluation
};

CcResult run(const Problem& problem, std::vector<IndexSet> subsets, EvaluationLedger& ledger,
             const DeParams& params, Rng& rng) {
  if (!ledger.budget()) throw std::invalid_argument("cooperative coevolution needs a budget");
  if (params.population < 4) throw std::invalid_argument("DE needs at least 4 members");
  if (ledger.exhausted()) throw std::invalid_argument("budget already exhausted");

  const std::size_t n = problem.dimension();
  const auto& lb = problem.lower();
  const auto& ub = problem.upper();

  CcResult result;
  result.truncated = true;

  // Initial uniform sample; the best member becomes the context.
  std::vector<Vector> samples;
  std::vector<double> sample_fit;
  for (std::size_t i = 0; i < params.population && !ledger.exhausted(); ++i) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = rng.uniform(lb[j], ub[j]);
    sample_fit.push_back(problem.evaluate(ledger, x));
    samples.push_back(std::move(x));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (sample_fit[i] < sample_fit[best]) best = i;
  Vector context = samples[best];
  double context_fit = sample_fit[best];
  result.trace.push_back({ledger.count(), context_fit});

  auto finish = [&]() {
    if (result.trace.back().fe < ledger.count()) result.trace.push_back({ledger.count(), context_fit});
    result.best = context;
    result.best_fitness = context_fit;
    return result;
  };
  if (samples.size() < params.population) return finish();

  std::vector<Subproblem> subs;
  for (auto& subset : subsets) {
    Subproblem sp;
    sp.population.members.reserve(samples.size());
    for (const auto& x : samples) sp.population.members.push_back(gather(x, subset));
    // Embedded in the context, a member only reproduces its sample when it
    // covers every variable.
    if (subset.size() == n) {
      sp.population.fitness = sample_fit;
    } else {
      sp.population.fitness.assign(samples.size(), 0.0);
      sp.stale = true;
    }
    sp.subset = std::move(subset);
    subs.push_back(std::move(sp));
  }

  bool improved = false;
  for (;;) {
    for (std::size_t s = 0; s < subs.size(); ++s) {
      auto& sp = subs[s];
      SubproblemView view{gather(lb, sp.subset), gather(ub, sp.subset),
                          [&](const Vector& member) -> std::optional<double> {
                            if (ledger.exhausted()) return std::nullopt;
                            Vector x = compose(context, sp.subset, member);
                            const double y = problem.evaluate(ledger, x);
                            if (y < context_fit) {
                              context = std::move(x);
                              context_fit = y;
                              result.trace.push_back({ledger.count(), y});
                              improved = true;
                            }
                            return y;
                          }};
      improved = false;
      if (sp.stale) {
        for (std::size_t i = 0; i < sp.population.members.size(); ++i) {
          const auto y = view.evaluate(sp.population.members[i]);
          if (!y) return finish();
          sp.population.fitness[i] = *y;
        }
        sp.stale = false;
      }
      const auto done = de_optimizer(view, sp.population, params.generations_per_cycle, params, rng);
      if (improved)
        for (std::size_t t = 0; t < subs.size(); ++t)
          if (t != s) subs[t].stale = true;
      if (done < params.generations_per_cycle) return finish();
    }
    ++result.cycles;
    result.truncated = false;
  }
}

}  // namespace

CcResult decc_optimize(const Problem& problem, const Decomposition& decomposition,
                       EvaluationLedger& ledger, const CcConfig& config, Rng& rng) {
  if (!decomposition.is_partition_of(problem.dimension()))
    throw std::invalid_argument("decomposition does not partition the variables");
  return run(problem, subproblems(decomposition, config.separables), ledger, config.de, rng);
}

CcResult mono_optimize(const Problem& problem, EvaluationLedger& ledger, const DeParams& params,
                       Rng& rng) {
  IndexSet all(problem.dimension());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return run(problem, {all}, ledger, params, rng);
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
  out << "feNum,best_fitness\n";
  auto old = out.precision(17);
  for (const auto& p : trace) out << p.fe << ',' << p.best << '\n';
  out.precision(old);
}

}  // namespace fdg::cc
