#pragma once

#include "fdg/decomposition.hpp"
#include "fdg/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdg::bench {

enum class Family {
  SumOfSquares,               // fully separable
  ShiftedRastriginSeparable,  // fully separable, multimodal
  GroupSchwefel,              // k nonseparable groups + separable remainder
  ImbalancedGroup,            // GroupSchwefel with weights spanning many decades
  FullSchwefel,               // one group over all variables
  ShiftedAckley,              // additively nonseparable
  ChainedOverlap,             // consecutive groups share one variable
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// Recipe for a synthetic objective with a known partition.
///
/// `sizes` holds one entry per nonseparable group. For every family except
/// ChainedOverlap the groups are disjoint and the separable remainder is
/// n - sum(sizes). ChainedOverlap shares one variable between consecutive
/// groups, so the chain spans sum(sizes) - (k - 1) variables.
struct BenchmarkSpec {
  Family family = Family::SumOfSquares;
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  std::vector<double> weights;  // per group; empty selects the family default
  std::uint64_t permutation_seed = 0;
  std::uint64_t shift_seed = 0;

  std::size_t k() const { return sizes.size(); }
  std::size_t nonseparable_count() const;

  void validate() const;  // throws std::invalid_argument
};

// Convenience constructors.
BenchmarkSpec sum_of_squares(std::size_t n, std::uint64_t seed = 0);
BenchmarkSpec rastrigin(std::size_t n, std::uint64_t seed = 0);
BenchmarkSpec group_schwefel(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed = 0);
BenchmarkSpec imbalanced_group(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed = 0);
BenchmarkSpec full_schwefel(std::size_t n, std::uint64_t seed = 0);
BenchmarkSpec ackley(std::size_t n, std::uint64_t seed = 0);
BenchmarkSpec chained_overlap(std::size_t n, std::vector<std::size_t> sizes, std::uint64_t seed = 0);

struct Benchmark {
  Problem problem;
  Decomposition ground_truth;
  // "fully-separable", "partially-separable", "nonseparable", or
  // "nonseparable (additively)" for families that are not sums of subfunctions.
  std::string structure;
  Vector optimum;  // the shift vector
  // Actual member lists of every kernel (overlapping for ChainedOverlap).
  std::vector<IndexSet> kernel_groups;
  bool direct_interaction = true;  // false when groups interact only through chains
};

Benchmark build(const BenchmarkSpec& spec);

/// Default weights of the imbalanced family: 10^-6 .. 10^6, log-spaced.
std::vector<double> imbalanced_weights(std::size_t k);

}  // namespace fdg::bench
