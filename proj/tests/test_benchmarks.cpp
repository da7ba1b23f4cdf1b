#include "fdg/benchmarks.hpp"
#include "fdg/indicator.hpp"
#include "fdg/rng.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace fdg;
using namespace fdg::bench;

namespace {

// Plain re-statement of the grouped objective from the kernel member lists.
double reference_value(const Benchmark& bm, const std::vector<double>& weights,
                       std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<bool> grouped(n, false);
  long double total = 0.0L;
  for (std::size_t g = 0; g < bm.kernel_groups.size(); ++g) {
    long double prefix = 0.0L, kernel = 0.0L;
    for (auto v : bm.kernel_groups[g]) {
      prefix += x[v] - bm.optimum[v];
      kernel += prefix * prefix;
      grouped[v] = true;
    }
    total += weights[g] * kernel;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!grouped[v]) total += (x[v] - bm.optimum[v]) * (x[v] - bm.optimum[v]);
  return static_cast<double>(total);
}

Vector random_point(const Problem& p, Rng& rng) {
  Vector x(p.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(p.lower()[i], p.upper()[i]);
  return x;
}

}  // namespace

TEST(Benchmarks, SumOfSquaresGroundTruth) {
  const auto bm = build(sum_of_squares(8));
  EXPECT_TRUE(bm.ground_truth.nonseps.empty());
  EXPECT_EQ(bm.ground_truth.seps.size(), 8u);
  EXPECT_EQ(bm.structure, "fully-separable");
}

TEST(Benchmarks, GroupSchwefelGroundTruth) {
  const auto bm = build(group_schwefel(20, 2, 5, 3));
  ASSERT_EQ(bm.ground_truth.nonseps.size(), 2u);
  EXPECT_EQ(bm.ground_truth.nonseps[0].size(), 5u);
  EXPECT_EQ(bm.ground_truth.nonseps[1].size(), 5u);
  EXPECT_EQ(bm.ground_truth.seps.size(), 10u);
  EXPECT_TRUE(bm.ground_truth.is_partition_of(20));
  EXPECT_EQ(bm.structure, "partially-separable");
}

TEST(Benchmarks, GroupsAreNotContiguous) {
  const auto bm = build(group_schwefel(100, 2, 20, 11));
  bool scattered = false;
  for (const auto& g : bm.ground_truth.nonseps)
    if (g.back() - g.front() + 1 != g.size()) scattered = true;
  EXPECT_TRUE(scattered);
}

TEST(Benchmarks, AckleyIsLabelledAdditivelyNonseparable) {
  const auto bm = build(ackley(8));
  EXPECT_EQ(bm.structure, "nonseparable (additively)");
  ASSERT_EQ(bm.ground_truth.nonseps.size(), 1u);
  EXPECT_EQ(bm.ground_truth.nonseps[0].size(), 8u);
}

TEST(Benchmarks, ChainedOverlapMergesChain) {
  const auto bm = build(chained_overlap(12, {3, 3, 3}));
  ASSERT_EQ(bm.ground_truth.nonseps.size(), 1u);
  EXPECT_EQ(bm.ground_truth.nonseps[0].size(), 7u);
  EXPECT_EQ(bm.ground_truth.seps.size(), 5u);
  EXPECT_FALSE(bm.direct_interaction);
  ASSERT_EQ(bm.kernel_groups.size(), 3u);
  EXPECT_EQ(bm.kernel_groups[0].back(), bm.kernel_groups[1].front());
}

TEST(Benchmarks, RejectsInconsistentSpecs) {
  EXPECT_THROW(build(group_schwefel(10, 3, 4)), std::invalid_argument);
  EXPECT_THROW(build(group_schwefel(10, 1, 1)), std::invalid_argument);
  EXPECT_THROW(build(BenchmarkSpec{Family::FullSchwefel, 10, {5}, {}, 0, 1}), std::invalid_argument);
  EXPECT_THROW(build(BenchmarkSpec{Family::GroupSchwefel, 10, {5}, {1.0, 2.0}, 0, 1}),
               std::invalid_argument);
  EXPECT_THROW(build(chained_overlap(5, {3, 3, 3})), std::invalid_argument);
}

TEST(Benchmarks, FamilyNamesRoundTrip) {
  for (auto f : {Family::SumOfSquares, Family::ShiftedRastriginSeparable, Family::GroupSchwefel,
                 Family::ImbalancedGroup, Family::FullSchwefel, Family::ShiftedAckley,
                 Family::ChainedOverlap})
    EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_THROW(family_from_string("nope"), std::invalid_argument);
}

TEST(Benchmarks, OptimumIsTheShift) {
  for (const auto& spec : {sum_of_squares(10, 2), rastrigin(10, 2), group_schwefel(30, 2, 6, 2),
                           full_schwefel(12, 2), ackley(10, 2)}) {
    const auto bm = build(spec);
    EvaluationLedger ledger;
    EXPECT_NEAR(bm.problem.evaluate(ledger, bm.optimum), 0.0, 1e-12) << to_string(spec.family);
  }
}

TEST(Benchmarks, DeterministicForEqualSeeds) {
  const auto a = build(group_schwefel(50, 3, 8, 9));
  const auto b = build(group_schwefel(50, 3, 8, 9));
  Rng rng(1);
  const auto x = random_point(a.problem, rng);
  EXPECT_EQ(a.problem.objective()(x), b.problem.objective()(x));
  EXPECT_EQ(a.ground_truth, b.ground_truth);
}

TEST(Benchmarks, MatchesReferenceUnderAnyLayout) {
  Rng rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (const auto& spec : {group_schwefel(40, 3, 6, seed), imbalanced_group(40, 3, 6, seed),
                             chained_overlap(40, {4, 5, 3}, seed), full_schwefel(15, seed)}) {
      const auto bm = build(spec);
      const auto weights = spec.family == Family::ImbalancedGroup
                               ? imbalanced_weights(spec.k())
                               : std::vector<double>(spec.k(), 1.0);
      for (int t = 0; t < 5; ++t) {
        const auto x = random_point(bm.problem, rng);
        const double want = reference_value(bm, weights, x);
        EXPECT_NEAR(bm.problem.objective()(x), want, 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST(Benchmarks, ImbalancedWeightsSpanTwelveDecades) {
  const auto w = imbalanced_weights(5);
  EXPECT_DOUBLE_EQ(w.front(), 1e-6);
  EXPECT_DOUBLE_EQ(w.back(), 1e6);
  EXPECT_DOUBLE_EQ(w[2], 1.0);
}

// Additive separability: moving one block gives
// the same fitness difference wherever another, unrelated block sits.
TEST(Benchmarks, CrossGroupDifferencesAgreeWithinErrorBound) {
  Rng rng(23);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const auto& spec : {group_schwefel(60, 4, 7, seed), imbalanced_group(60, 4, 7, seed),
                             sum_of_squares(30, seed), rastrigin(30, seed)}) {
      const auto bm = build(spec);
      const auto blocks = bm.ground_truth.blocks();
      for (int t = 0; t < 20; ++t) {
        IndexSet xi, xj;
        while (xi.empty() || xj.empty()) {
          xi.clear();
          xj.clear();
          for (const auto& b : blocks) {
            const auto side = rng.index(3);
            if (side == 0) xi.insert(xi.end(), b.begin(), b.end());
            if (side == 1) xj.insert(xj.end(), b.begin(), b.end());
          }
        }
        EvaluationLedger ledger;
        const auto r = sample_and_phi(bm.problem, ledger, random_point(bm.problem, rng), xi, xj);
        EXPECT_LE(influence(r.sample), error_bound(r.sample)) << to_string(spec.family);
      }
    }
  }
}
