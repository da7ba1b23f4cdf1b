#include "fdg/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdg {

double influence(const CornerSample& s) {
  return std::abs(delta(s.y_ll, s.y_ul) - delta(s.y_lu, s.y_uu));
}

double error_bound(const CornerSample& s, double gamma) {
  return gamma * (std::abs(s.y_ll) + std::abs(s.y_ul) + std::abs(s.y_lu) + std::abs(s.y_uu));
}

double phi(const CornerSample& s) {
  const double d1 = delta(s.y_ll, s.y_ul);
  const double d2 = delta(s.y_lu, s.y_uu);
  const double denom = 2.0 * std::max(std::abs(d1), std::abs(d2));
  if (denom == 0.0 || !std::isfinite(denom)) return kMachineEpsilon;
  const double value = (influence(s) - error_bound(s)) / denom;
  // NaN compares false, so it falls back to epsilon as well
  return value > kMachineEpsilon ? value : kMachineEpsilon;
}

IndicatorResult sample_and_phi(const Problem& problem, EvaluationLedger& ledger,
                               std::span<const double> context,
                               std::span<const std::size_t> xi,
                               std::span<const std::size_t> xj, const CornerReuse& reuse) {
  if (xi.empty() || xj.empty()) throw std::invalid_argument("indicator subsets must be nonempty");
  const std::size_t n = problem.dimension();
  if (context.size() != n) throw std::invalid_argument("context length differs from dimension");
  std::vector<char> in_i(n, 0);
  for (auto v : xi) {
    if (v >= n) throw std::out_of_range("subset index out of range");
    in_i[v] = 1;
  }
  for (auto v : xj) {
    if (v >= n) throw std::out_of_range("subset index out of range");
    if (in_i[v]) throw std::invalid_argument("indicator subsets overlap");
  }

  const auto& ub = problem.upper();
  IndicatorResult out;
  CornerSample& s = out.sample;
  s.x_ll.assign(context.begin(), context.end());
  s.x_ul = s.x_ll;
  assign_subset(s.x_ul, xi, ub);
  s.x_lu = s.x_ll;
  assign_subset(s.x_lu, xj, ub);
  s.x_uu = s.x_lu;
  assign_subset(s.x_uu, xi, ub);

  auto fill = [&](const std::optional<double>& known, const Vector& x) {
    if (known) return *known;
    ++out.evaluations;
    return problem.evaluate(ledger, x);
  };
  s.y_ll = fill(reuse.y_ll, s.x_ll);
  s.y_ul = fill(reuse.y_ul, s.x_ul);
  s.y_lu = fill(reuse.y_lu, s.x_lu);
  s.y_uu = fill(reuse.y_uu, s.x_uu);
  out.phi = phi(s);
  return out;
}

Judgement judge_sep(double phi_value, const Thresholds& thresholds) {
  if (!thresholds.complete()) throw std::invalid_argument("judge_sep needs both thresholds");
  Judgement j{false, thresholds};
  const double phi_s = *thresholds.phi_s;
  const double phi_n = *thresholds.phi_n;
  if (phi_value * phi_value < phi_s * phi_n) {
    j.separable = true;
    j.thresholds.phi_s = std::max(phi_value, phi_s);
  } else {
    j.thresholds.phi_n = std::min(phi_value, phi_n);
  }
  return j;
}

}  // namespace fdg
