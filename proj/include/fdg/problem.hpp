#pragma once

#include "fdg/types.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>

namespace fdg {

// Counts objective invocations. Increments are atomic so evaluators may be
// called from several threads against one ledger.
class EvaluationLedger {
public:
  explicit EvaluationLedger(std::optional<std::uint64_t> budget = std::nullopt)
      : budget_(budget) {}

  EvaluationLedger(const EvaluationLedger&) = delete;
  EvaluationLedger& operator=(const EvaluationLedger&) = delete;

  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }
  void record() { count_.fetch_add(1, std::memory_order_relaxed); }

  const std::optional<std::uint64_t>& budget() const { return budget_; }
  void set_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }

  // Evaluations left before the budget is reached; unbounded ledgers report
  // the maximum value. The ledger itself never refuses an evaluation.
  std::uint64_t remaining() const {
    if (!budget_) return std::numeric_limits<std::uint64_t>::max();
    const auto used = count();
    return used >= *budget_ ? 0 : *budget_ - used;
  }
  bool exhausted() const { return remaining() == 0; }

private:
  std::atomic<std::uint64_t> count_{0};
  std::optional<std::uint64_t> budget_;
};

/// A bounded black-box objective (minimization). The evaluator must be pure:
/// identical inputs give bit-identical outputs.
class Problem {
public:
  using Objective = std::function<double(std::span<const double>)>;

  Problem(Vector lower, Vector upper, Objective objective);

  std::size_t dimension() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  /// Evaluates `x` and records one evaluation in `ledger`. Throws
  /// std::invalid_argument on a length mismatch or an out-of-bounds value.
  double evaluate(EvaluationLedger& ledger, std::span<const double> x) const;

  // Raw objective access, no bookkeeping and no checks.
  const Objective& objective() const { return objective_; }

private:
  Vector lower_;
  Vector upper_;
  Objective objective_;
};

/// Copy of `base` with positions `subset` overwritten by `donor` (donor[i]
/// goes to base[subset[i]]).
Vector compose(std::span<const double> base, std::span<const std::size_t> subset,
               std::span<const double> donor);

// In-place variant used on hot paths: x[subset] <- source[subset].
void assign_subset(Vector& x, std::span<const std::size_t> subset,
                   std::span<const double> source);

// Values of `x` at `subset`, in subset order.
Vector gather(std::span<const double> x, std::span<const std::size_t> subset);

}  // namespace fdg
