#pragma once

#include "fdg/indicator.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace fdg {

enum class InstanceType { FullySeparable, Nonseparable, PartiallySeparable };

std::string_view to_string(InstanceType t);  // "fs", "ns", "ps"

struct IdapResult {
  InstanceType type = InstanceType::FullySeparable;
  Thresholds thresholds;       // set only for PartiallySeparable
  std::vector<double> sorted;  // ascending indicator values
  std::vector<double> ratios;  // lambda_i = sorted[i+1] / sorted[i]
  std::size_t gap_index = 0;   // i* (0-based) of the largest ratio
};

inline constexpr double kDefaultGapFactor = 1000.0;

/// Classifies a multiset of indicator values by its largest adjacent ratio.
/// If that ratio exceeds `gap_factor` times the runner-up, the values split
/// into a separable and a nonseparable class and the values bracketing the
/// gap become the thresholds. Otherwise the set is nonseparable when every
/// value exceeds machine epsilon, fully separable when one equals it.
///
/// Requires at least two values, each >= machine epsilon, and a gap factor
/// in [1e3, 1e8].
IdapResult analyze(std::span<const double> phis, double gap_factor = kDefaultGapFactor);

}  // namespace fdg
