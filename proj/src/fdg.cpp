#include "fdg/fdg.hpp"

#include <numeric>

namespace fdg {

FdgResult decompose(const Problem& problem, EvaluationLedger& ledger, Rng& rng,
                    const FdgConfig& config) {
  const std::size_t n = problem.dimension();
  const std::uint64_t start = ledger.count();
  FdgResult r;
  if (n == 1) {
    r.decomposition.seps = {0};
    r.trace.phases.push_back({"bounds", 0});
    return r;
  }

  const double y_lb = problem.evaluate(ledger, problem.lower());
  const double y_ub = problem.evaluate(ledger, problem.upper());
  r.trace.phases.push_back({"bounds", 2});

  r.trace.itip = identify(problem, ledger, y_lb, y_ub, rng, config.trials, config.gap_factor);
  r.trace.phases.push_back({"itip", r.trace.itip.fe_total - 2});
  r.trace.type = r.trace.itip.type;
  r.trace.itip_thresholds = r.trace.itip.thresholds;
  r.trace.final_thresholds = r.trace.itip.thresholds;

  IndexSet all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  const bool run_psdp = config.force_psdp || r.trace.type == InstanceType::PartiallySeparable;
  if (!run_psdp) {
    if (r.trace.type == InstanceType::Nonseparable)
      r.decomposition.nonseps.push_back(all);
    else
      r.decomposition.seps = all;
  } else {
    Thresholds start_thresholds = r.trace.itip.thresholds;
    if (!start_thresholds.complete()) start_thresholds = {kMachineEpsilon, kForcedPhiN};
    auto result = psdp(problem, ledger, y_lb, y_ub, start_thresholds, rng, config.trials);
    std::uint64_t btdp_fe = 0;
    for (const auto& call : result.btdp_calls) btdp_fe += call.result.fe_count;
    r.trace.phases.push_back({"svep", result.svep.fe_count});
    r.trace.phases.push_back({"btdp", btdp_fe});
    r.trace.final_thresholds = result.thresholds;
    r.decomposition = result.decomposition;
    r.trace.psdp = std::move(result);
  }
  r.fe_count = ledger.count() - start;
  return r;
}

}  // namespace fdg
