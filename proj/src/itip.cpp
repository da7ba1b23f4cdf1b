#include "fdg/itip.hpp"

#include <stdexcept>

namespace fdg {

ItipResult identify(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                    Rng& rng, std::size_t trials, double gap_factor) {
  const std::size_t n = problem.dimension();
  ItipResult r;
  if (n < 2) return r;
  if (trials == 0) throw std::invalid_argument("ITIP needs at least one trial");

  const auto& lb = problem.lower();
  for (std::size_t t = 0; t < trials; ++t) {
    const IndexSet order = rng.permutation(n);
    const std::size_t half = n / 2;
    const IndexSet left(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(half));
    const IndexSet right(order.begin() + static_cast<std::ptrdiff_t>(half), order.end());
    const auto ind = sample_and_phi(problem, ledger, lb, left, right,
                                    CornerReuse{y_lb, std::nullopt, std::nullopt, y_ub});
    r.halving_phis.push_back(ind.phi);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) ++b;
    const IndexSet xi{a};
    const IndexSet xj{b};
    const auto ind = sample_and_phi(problem, ledger, lb, xi, xj, CornerReuse{y_lb, std::nullopt, std::nullopt, std::nullopt});
    r.pair_phis.push_back(ind.phi);
  }

  std::vector<double> all = r.halving_phis;
  all.insert(all.end(), r.pair_phis.begin(), r.pair_phis.end());
  r.analysis = analyze(all, gap_factor);
  r.type = r.analysis.type;
  r.thresholds = r.analysis.thresholds;
  r.fe_total = 5 * trials + 2;
  return r;
}

}  // namespace fdg
