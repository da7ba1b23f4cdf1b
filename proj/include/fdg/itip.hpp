#pragma once

#include "fdg/idap.hpp"
#include "fdg/rng.hpp"

namespace fdg {

inline constexpr std::size_t kDefaultTrials = 10;

struct ItipResult {
  InstanceType type = InstanceType::FullySeparable;
  Thresholds thresholds;
  // 5l + 2: the new evaluations plus the f(lb), f(ub) pair supplied by the
  // caller. Zero when n < 2.
  std::uint64_t fe_total = 0;
  std::vector<double> halving_phis;  // rule 1, one per trial
  std::vector<double> pair_phis;     // rule 2, one per trial
  IdapResult analysis;
};

/// Instance type identification. Rule 1 halves the variable set at random
/// and reuses lb and ub as two corners (2 new evaluations per trial). Rule 2
/// pairs two distinct random variables and reuses lb (3 per trial). All 2l
/// indicators go through IDAP.
ItipResult identify(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                    Rng& rng, std::size_t trials = kDefaultTrials,
                    double gap_factor = kDefaultGapFactor);

}  // namespace fdg
