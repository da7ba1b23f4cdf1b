#pragma once

#include "fdg/problem.hpp"
#include "fdg/types.hpp"

#include <optional>
#include <span>

namespace fdg {

/// The four solutions behind one interdependency indicator phi(X_i, X_j),
/// sampled around a context vector:
///
///   x_ll = context             x_ul = x_ll with X_i at upper bound
///   x_lu = x_ll with X_j up    x_uu = x_lu with X_i at upper bound
struct CornerSample {
  Vector x_ll, x_ul, x_lu, x_uu;
  double y_ll = 0.0, y_ul = 0.0, y_lu = 0.0, y_uu = 0.0;
};

/// Pair of adaptive thresholds. Either may be absent before initialization.
struct Thresholds {
  std::optional<double> phi_s;  // separability
  std::optional<double> phi_n;  // nonseparability

  bool complete() const { return phi_s.has_value() && phi_n.has_value(); }
};

// Fitness difference caused by moving X_i, under a fixed X_j.
inline double delta(double y_a, double y_b) { return y_a - y_b; }

double influence(const CornerSample& s);

/// Roundoff estimate: gamma_2 * sum of the four |y|.
double error_bound(const CornerSample& s, double gamma = kErrorCoefficient);

/// Normalized, roundoff-corrected indicator. Always >= machine epsilon; a
/// zero denominator (no response to X_i at all) yields machine epsilon.
double phi(const CornerSample& s);

// Fitnesses already known for some corners; the rest are evaluated.
struct CornerReuse {
  std::optional<double> y_ll, y_ul, y_lu, y_uu;
};

struct IndicatorResult {
  double phi = kMachineEpsilon;
  CornerSample sample;
  std::size_t evaluations = 0;  // corners evaluated by this call
};

/// Builds the corner sample of (X_i, X_j) around `context`, evaluating only
/// the corners whose fitness is not supplied through `reuse`. X_i and X_j
/// must be nonempty and disjoint.
IndicatorResult sample_and_phi(const Problem& problem, EvaluationLedger& ledger,
                               std::span<const double> context,
                               std::span<const std::size_t> xi,
                               std::span<const std::size_t> xj, const CornerReuse& reuse = {});

struct Judgement {
  bool separable = false;
  Thresholds thresholds;
};

/// JudgeSep: separable iff phi/phi_s < phi_n/phi, evaluated as
/// phi^2 < phi_s * phi_n. Separable verdicts raise phi_s to phi, the others
/// lower phi_n to phi. Throws std::invalid_argument on absent thresholds.
Judgement judge_sep(double phi_value, const Thresholds& thresholds);

}  // namespace fdg
