#include "fdg/idap.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdg {

std::string_view to_string(InstanceType t) {
  switch (t) {
    case InstanceType::FullySeparable: return "fs";
    case InstanceType::Nonseparable: return "ns";
    case InstanceType::PartiallySeparable: return "ps";
  }
  return "?";
}

IdapResult analyze(std::span<const double> phis, double gap_factor) {
  if (phis.size() < 2) throw std::invalid_argument("IDAP needs at least two indicator values");
  if (!(gap_factor >= 1e3 && gap_factor <= 1e8))
    throw std::invalid_argument("gap factor must lie in [1e3, 1e8]");
  for (double p : phis)
    if (!(p >= kMachineEpsilon)) throw std::invalid_argument("indicator value below machine epsilon");

  IdapResult r;
  r.sorted.assign(phis.begin(), phis.end());
  std::sort(r.sorted.begin(), r.sorted.end());
  const std::size_t m = r.sorted.size();
  r.ratios.resize(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) r.ratios[i] = r.sorted[i + 1] / r.sorted[i];

  // earliest maximum wins ties
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.ratios.size(); ++i)
    if (r.ratios[i] > r.ratios[best]) best = i;
  r.gap_index = best;
  double runner_up = 1.0;
  if (r.ratios.size() > 1) {
    runner_up = 0.0;
    for (std::size_t i = 0; i < r.ratios.size(); ++i)
      if (i != best) runner_up = std::max(runner_up, r.ratios[i]);
  }

  if (r.ratios[best] > gap_factor * runner_up) {
    r.type = InstanceType::PartiallySeparable;
    r.thresholds.phi_s = r.sorted[best];
    r.thresholds.phi_n = r.sorted[best + 1];
  } else if (r.sorted.front() > kMachineEpsilon) {
    r.type = InstanceType::Nonseparable;
  } else {
    r.type = InstanceType::FullySeparable;
  }
  return r;
}

}  // namespace fdg
