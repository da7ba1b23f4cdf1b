#include "fdg/psdp.hpp"

#include <stdexcept>

namespace fdg {

SvepResult svep(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                const Thresholds& thresholds, Rng& rng, std::size_t trials) {
  if (!thresholds.complete()) throw std::invalid_argument("SVEP needs both thresholds");
  const std::size_t n = problem.dimension();
  SvepResult r;
  r.thresholds = thresholds;
  if (n < 2) {
    r.seps.assign(n, 0);
    return r;
  }

  const IndexSet order = rng.permutation(n);
  bool found = false;
  IndexSet rest;
  rest.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= trials && !found) break;
    const std::size_t x = order[i];
    rest.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (v != x) rest.push_back(v);
    const IndexSet xi{x};
    const auto ind = sample_and_phi(problem, ledger, problem.lower(), xi, rest,
                                    CornerReuse{y_lb, std::nullopt, std::nullopt, y_ub});
    r.fe_count += ind.evaluations;
    const auto verdict = judge_sep(ind.phi, r.thresholds);
    r.thresholds = verdict.thresholds;
    r.probes.push_back({x, ind.phi, verdict.separable});
    if (verdict.separable) {
      r.seps.push_back(x);
      found = true;
    }
  }
  return r;
}

namespace {

IndexSet difference(const IndexSet& a, const std::vector<char>& remove) {
  IndexSet out;
  out.reserve(a.size());
  for (auto v : a)
    if (!remove[v]) out.push_back(v);
  return out;
}

}  // namespace

PsdpResult psdp(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                const Thresholds& thresholds, Rng& rng, std::size_t trials) {
  const std::size_t n = problem.dimension();
  PsdpResult r;
  r.svep = svep(problem, ledger, y_lb, y_ub, thresholds, rng, trials);
  r.fe_count = r.svep.fe_count;
  r.thresholds = r.svep.thresholds;
  r.decomposition.seps = r.svep.seps;

  std::vector<char> mark(n, 0);
  for (auto v : r.svep.seps) mark[v] = 1;
  IndexSet candidates;
  for (std::size_t v = 0; v < n; ++v)
    if (!mark[v]) candidates.push_back(v);
  if (candidates.empty()) return r;

  auto finalize = [&](IndexSet group) {
    if (group.size() == 1)
      r.decomposition.seps.push_back(group.front());
    else
      r.decomposition.nonseps.push_back(std::move(group));
  };

  std::vector<char> in_group(n, 0);
  IndexSet group{candidates[rng.index(candidates.size())]};
  in_group[group.front()] = 1;
  while (group.size() < candidates.size()) {
    IndexSet rest = difference(candidates, in_group);
    IndexSet x1 = group;
    auto found = run_btdp(problem, ledger, group, rest, y_lb, r.thresholds, rng);
    r.fe_count += found.fe_count;
    r.thresholds = found.thresholds;
    const bool none = found.interacting.empty();
    for (auto v : found.interacting) {
      group.push_back(v);
      in_group[v] = 1;
    }
    r.btdp_calls.push_back({std::move(x1), rest.size(), std::move(found)});
    if (none) {
      for (auto v : group) in_group[v] = 0;
      finalize(std::move(group));
      candidates = std::move(rest);
      group = {candidates[rng.index(candidates.size())]};
      in_group[group.front()] = 1;
    }
  }
  finalize(std::move(group));
  return r;
}

}  // namespace fdg
