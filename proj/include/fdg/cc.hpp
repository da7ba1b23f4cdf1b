#pragma once

#include "fdg/decomposition.hpp"
#include "fdg/problem.hpp"
#include "fdg/rng.hpp"

#include <functional>
#include <optional>
#include <ostream>

namespace fdg::cc {

struct DeParams {
  std::size_t population = 25;
  double f = 0.5;   // differential weight
  double cr = 0.9;  // crossover rate
  std::size_t generations_per_cycle = 1;
};

/// Members of one subproblem, stored over the subproblem's own coordinates.
struct Population {
  std::vector<Vector> members;
  std::vector<double> fitness;
};

/// What the optimizer sees of a subproblem: its box and a fitness function.
/// `evaluate` returns nothing once the evaluation budget is spent.
struct SubproblemView {
  Vector lower;
  Vector upper;
  std::function<std::optional<double>(const Vector&)> evaluate;
};

/// rand/1/bin differential evolution with greedy (<=) selection. Mutant
/// coordinates outside the box are replaced by the midpoint between the
/// violated bound and the target value. The forced crossover coordinate is
/// only applied when cr > 0, so f = 0 with cr = 0 leaves members unchanged.
/// Returns the number of completed generations (fewer than requested when
/// the budget ran out).
std::size_t de_optimizer(const SubproblemView& view, Population& population,
                         std::size_t generations, const DeParams& params, Rng& rng);

enum class SeparablePolicy {
  Singletons,  // one subproblem per separable variable
  Whole,       // all separable variables together
};

struct CcConfig {
  DeParams de;
  SeparablePolicy separables = SeparablePolicy::Singletons;
};

struct TracePoint {
  std::uint64_t fe = 0;
  double best = 0.0;
};

struct CcResult {
  Vector best;
  double best_fitness = 0.0;
  std::vector<TracePoint> trace;  // strictly increasing fe
  std::size_t cycles = 0;         // completed round-robin cycles
  bool truncated = false;         // budget ran out before one full cycle
};

/// Subproblem index sets for a decomposition under a separable policy.
std::vector<IndexSet> subproblems(const Decomposition& decomposition, SeparablePolicy policy);

/// Cooperative coevolution. The context vector starts as the best of
/// `population` uniform samples, which also seed every subpopulation. Each
/// cycle visits the subproblems in order and runs DE on each for
/// `generations_per_cycle` generations, evaluating members inside the
/// context. A subpopulation whose context was changed by another subproblem
/// is re-evaluated before it evolves. Runs until the ledger budget (which
/// must be set) is reached.
CcResult decc_optimize(const Problem& problem, const Decomposition& decomposition,
                       EvaluationLedger& ledger, const CcConfig& config, Rng& rng);

/// Monolithic DE: decc_optimize over the single block {0..n-1}.
CcResult mono_optimize(const Problem& problem, EvaluationLedger& ledger, const DeParams& params,
                       Rng& rng);

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace fdg::cc
