#pragma once

#include "fdg/btdp.hpp"
#include "fdg/decomposition.hpp"
#include "fdg/itip.hpp"

namespace fdg {

struct Probe {
  std::size_t variable = 0;
  double phi = 0.0;
  bool separable = false;
};

struct SvepResult {
  IndexSet seps;
  std::uint64_t fe_count = 0;
  Thresholds thresholds;
  std::vector<Probe> probes;
};

/// Separable variable exclusion. Probes variables in random order against
/// the rest of X (2 evaluations each, reusing f(lb) and f(ub)). Stops after
/// `trials` probes unless one of them was separable, in which case every
/// variable is probed.
SvepResult svep(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                const Thresholds& thresholds, Rng& rng, std::size_t trials = kDefaultTrials);

struct BtdpCall {
  IndexSet x1;
  std::size_t x2_size = 0;
  BtdpResult result;
};

struct PsdpResult {
  Decomposition decomposition;
  std::uint64_t fe_count = 0;  // SVEP + all BTDP calls
  Thresholds thresholds;
  SvepResult svep;
  std::vector<BtdpCall> btdp_calls;
};

/// Grouping loop for partially separable instances: exclude separable
/// variables, then grow a group X1 by repeated BTDP calls until no new
/// interacting variable appears. Groups of one variable become separable.
PsdpResult psdp(const Problem& problem, EvaluationLedger& ledger, double y_lb, double y_ub,
                const Thresholds& thresholds, Rng& rng, std::size_t trials = kDefaultTrials);

}  // namespace fdg
