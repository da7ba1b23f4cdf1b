#include "fdg/analysis.hpp"

#include "fdg/indicator.hpp"
#include "fdg/union_find.hpp"

#include <functional>

namespace fdg::analysis {

OracleResult pairwise_oracle(const Problem& problem, EvaluationLedger& ledger, std::size_t cap,
                             double gap_factor) {
  const std::size_t n = problem.dimension();
  if (n > cap)
    throw CapExceeded("pairwise oracle limited to n <= " + std::to_string(cap) + ", got " +
                      std::to_string(n));
  OracleResult r;
  const std::uint64_t start = ledger.count();
  if (n == 1) {
    r.decomposition.seps = {0};
    return r;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IndexSet xi{i};
      const IndexSet xj{j};
      r.pair_phis.push_back(sample_and_phi(problem, ledger, problem.lower(), xi, xj).phi);
    }
  }
  r.fe_count = ledger.count() - start;

  // A single pair gives IDAP nothing to compare against; fall back to the
  // epsilon floor as the separability criterion.
  std::function<bool(double)> nonseparable = [](double value) { return value > kMachineEpsilon; };
  if (r.pair_phis.size() >= 2) {
    r.idap = analyze(r.pair_phis, gap_factor);
    switch (r.idap->type) {
      case InstanceType::FullySeparable:
        nonseparable = [](double) { return false; };
        break;
      case InstanceType::Nonseparable:
        nonseparable = [](double) { return true; };
        break;
      case InstanceType::PartiallySeparable: {
        const double cut = *r.idap->thresholds.phi_n;
        nonseparable = [cut](double value) { return value >= cut; };
        break;
      }
    }
  }

  UnionFind uf(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (nonseparable(r.pair_phis[k])) uf.unite(i, j);

  std::vector<IndexSet> by_root(n);
  for (std::size_t v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  for (auto& members : by_root) {
    if (members.size() == 1)
      r.decomposition.seps.push_back(members.front());
    else if (members.size() > 1)
      r.decomposition.nonseps.push_back(std::move(members));
  }
  r.decomposition = r.decomposition.canonical();
  return r;
}

}  // namespace fdg::analysis
