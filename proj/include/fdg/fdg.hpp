#pragma once

#include "fdg/psdp.hpp"

#include <optional>
#include <string>

namespace fdg {

struct FdgConfig {
  std::size_t trials = kDefaultTrials;
  double gap_factor = kDefaultGapFactor;
  // Route every instance through PSDP regardless of the identified type,
  // starting from phi_s = eps and phi_n = kForcedPhiN.
  bool force_psdp = false;
};

// Upper threshold used when PSDP runs without ITIP thresholds. The
// indicator is normalized to roughly (0, 1], so 1 is its natural ceiling.
inline constexpr double kForcedPhiN = 1.0;

struct Phase {
  std::string name;
  std::uint64_t fe_count = 0;
};

struct FdgTrace {
  InstanceType type = InstanceType::FullySeparable;
  Thresholds itip_thresholds;
  Thresholds final_thresholds;
  std::vector<Phase> phases;  // bounds, itip, and (when run) svep, btdp
  ItipResult itip;
  std::optional<PsdpResult> psdp;
};

struct FdgResult {
  Decomposition decomposition;
  std::uint64_t fe_count = 0;
  FdgTrace trace;
};

/// Fast differential grouping: evaluate the bounds, identify the instance
/// type, then either return the trivial grouping or run PSDP.
FdgResult decompose(const Problem& problem, EvaluationLedger& ledger, Rng& rng,
                    const FdgConfig& config = {});

}  // namespace fdg
