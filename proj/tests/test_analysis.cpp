#include "fdg/analysis.hpp"
#include "fdg/benchmarks.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>

using namespace fdg;
using namespace fdg::analysis;

namespace {

// Independent transcription of the NMI formula over explicit block lists.
double nmi_by_hand(const std::vector<IndexSet>& a, const std::vector<IndexSet>& b, double n) {
  double top = 0.0, bottom = 0.0;
  for (const auto& x : a)
    for (const auto& y : b) {
      double m = 0;
      for (auto u : x) m += std::count(y.begin(), y.end(), u);
      if (m > 0) top += m * std::log2(n * m / (x.size() * static_cast<double>(y.size())));
    }
  for (const auto& x : a) bottom += x.size() * std::log2(x.size() / n);
  for (const auto& y : b) bottom += y.size() * std::log2(y.size() / n);
  return -2.0 * top / bottom * 100.0;
}

std::vector<int> layout(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<int> g(n, -1);
  std::size_t at = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes[i]; ++j) g[at++] = static_cast<int>(i);
  return g;
}

}  // namespace

TEST(Oracle, RecoversGroupSchwefel) {
  const auto bm = bench::build(bench::group_schwefel(20, 2, 5, 1));
  EvaluationLedger ledger;
  const auto r = pairwise_oracle(bm.problem, ledger);
  EXPECT_EQ(r.decomposition, bm.ground_truth);
  EXPECT_EQ(r.fe_count, 2u * 20 * 19);
  EXPECT_EQ(ledger.count(), r.fe_count);
  EXPECT_EQ(r.pair_phis.size(), 190u);
}

TEST(Oracle, SumOfSquaresIsAllSingletons) {
  EvaluationLedger ledger;
  const auto r = pairwise_oracle(bench::build(bench::sum_of_squares(8)).problem, ledger);
  EXPECT_TRUE(r.decomposition.nonseps.empty());
  EXPECT_EQ(r.decomposition.seps.size(), 8u);
}

TEST(Oracle, ClosesChains) {
  const auto bm = bench::build(bench::chained_overlap(9, {3, 3, 3}, 4));
  EvaluationLedger ledger;
  const auto r = pairwise_oracle(bm.problem, ledger);
  ASSERT_EQ(r.decomposition.nonseps.size(), 1u);
  EXPECT_EQ(r.decomposition.nonseps[0].size(), 7u);
  EXPECT_EQ(r.decomposition, bm.ground_truth);
}

TEST(Oracle, CapAndTinyProblems) {
  EvaluationLedger ledger;
  const auto big = bench::build(bench::sum_of_squares(129));
  EXPECT_THROW(pairwise_oracle(big.problem, ledger), CapExceeded);
  EXPECT_NO_THROW(pairwise_oracle(big.problem, ledger, 200));
  const auto two = bench::build(bench::full_schwefel(2));
  EXPECT_EQ(pairwise_oracle(two.problem, ledger).decomposition.nonseps.size(), 1u);
}

TEST(Nmi, FixtureAgainstHandTranscription) {
  const Decomposition pairs{{{0, 1}, {2, 3}}, {}};
  const Decomposition singles{{}, {0, 1, 2, 3}};
  const double want = nmi_by_hand(pairs.blocks(), singles.blocks(), 4);
  EXPECT_NEAR(want, 200.0 / 3.0, 1e-12);
  EXPECT_NEAR(nmi(pairs, singles, 4), want, 1e-12);
  EXPECT_EQ(nmi(pairs, singles, 4), nmi(singles, pairs, 4));
  EXPECT_EQ(nmi(pairs, pairs, 4), 100.0);
}

TEST(Nmi, RandomPartitions) {
  Rng rng(10);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng.index(25);
    auto make = [&] {
      const std::size_t parts = 1 + rng.index(n);
      std::vector<IndexSet> blocks(parts);
      for (std::size_t v = 0; v < n; ++v) blocks[rng.index(parts)].push_back(v);
      Decomposition d;
      for (auto& b : blocks) {
        if (b.size() == 1) d.seps.push_back(b[0]);
        if (b.size() > 1) d.nonseps.push_back(b);
      }
      return d;
    };
    const auto a = make();
    const auto b = make();
    const double v = nmi(a, b, n);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 100.0);
    EXPECT_NEAR(v, nmi(b, a, n), 1e-9);
    EXPECT_EQ(v == 100.0, a == b);
    const double hand = nmi_by_hand(a.blocks(), b.blocks(), static_cast<double>(n));
    if (a != b && std::isfinite(hand)) EXPECT_NEAR(v, hand, 1e-9);
  }
}

TEST(Nmi, RejectsNonPartitions) {
  const Decomposition ok{{{0, 1}}, {2}};
  EXPECT_THROW(nmi(ok, Decomposition{{{0, 1}}, {1, 2}}, 3), std::invalid_argument);
  EXPECT_THROW(nmi(ok, Decomposition{{}, {0, 1}}, 3), std::invalid_argument);
}

TEST(Probability, BinomialConvention) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_GT(binomial(1000, 500), BigInt(1) << 990);
}

TEST(Probability, TrivialCases) {
  EXPECT_EQ(p_s1_exact(10, {}), 1);
  EXPECT_EQ(p_n2_exact(12, {12}), 1);
  EXPECT_EQ(p_n1(1.0, 10), 0.0);
  EXPECT_DOUBLE_EQ(p_s2(0.5, 3), 0.875);
  EXPECT_DOUBLE_EQ(p_s3_bound(10, 5, 2), 0.75);
}

TEST(Probability, RejectsInvalidSizes) {
  EXPECT_THROW(p_s1(10, {1, 3}), std::invalid_argument);
  EXPECT_THROW(p_s1(10, {6, 5}), std::invalid_argument);
  EXPECT_THROW(p_n2(1, {}), std::invalid_argument);
  EXPECT_THROW(p_s3_bound(4, 5, 1), std::invalid_argument);
}

TEST(Probability, WorkedValues) {
  const double n2 = p_n2(1000, std::vector<std::size_t>(20, 50));
  EXPECT_NEAR(n2, 0.049, 0.0005);
  EXPECT_EQ(p_n2_exact(1000, std::vector<std::size_t>(20, 50)),
            Rational(20 * 1225, 499500));

  const Rational s1 = p_s1_exact(1000, {50});
  EXPECT_LE(s1, Rational(BigInt(1), BigInt(1) << 49));
  for (std::size_t l : {1u, 2u, 5u})
    EXPECT_GE(p_n1(s1.convert_to<double>(), l), 1.0 - std::pow(2.0, -49.0 * l));
}

TEST(Probability, UniformFormMatchesGeneral) {
  for (auto [n, k, s] : std::vector<std::array<std::size_t, 3>>{{12, 2, 3}, {50, 4, 6}, {1000, 20, 50}})
    EXPECT_EQ(p_s1_uniform_exact(n, k, s), p_s1_exact(n, std::vector<std::size_t>(k, s)));
}

// Every halving, pair, and probe draw enumerated for small n.
TEST(Probability, ExhaustiveEnumeration) {
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cases = {
      {4, {2}}, {6, {2}}, {7, {3}}, {8, {2, 2}}, {9, {2, 3}}, {10, {5}}, {11, {2, 2, 2}},
      {12, {3, 4}}, {12, {6, 6}}, {12, {2, 2, 2, 2, 2, 2}}};
  for (const auto& [n, sizes] : cases) {
    const auto g = layout(n, sizes);
    std::size_t n_n = 0;
    for (auto s : sizes) n_n += s;
    std::map<int, int> total;
    for (int v : g)
      if (v >= 0) ++total[v];
    std::uint64_t halvings = 0, kept = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n / 2) continue;
      ++halvings;
      std::map<int, int> inside;
      for (std::size_t v = 0; v < n; ++v)
        if (g[v] >= 0 && (mask >> v & 1u)) ++inside[g[v]];
      bool ok = true;
      for (auto [grp, c] : inside) ok = ok && c == total[grp];
      kept += ok;
    }
    EXPECT_EQ(p_s1_exact(n, sizes), Rational(kept, halvings)) << n;
    // Complementary mass: the halvings that split some group.
    EXPECT_EQ(p_s1_exact(n, sizes) + Rational(halvings - kept, halvings), 1);

    std::uint64_t pairs = 0, same = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        ++pairs;
        same += g[a] >= 0 && g[a] == g[b];
      }
    EXPECT_EQ(p_n2_exact(n, sizes), Rational(same, pairs));

    for (std::size_t l = 1; l <= 4; ++l) {
      std::uint64_t draws = 0, found = 0;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != l) continue;
        ++draws;
        bool sep = false;
        for (std::size_t v = 0; v < n; ++v) sep = sep || ((mask >> v & 1u) && g[v] < 0);
        found += sep;
      }
      EXPECT_EQ(p_s3_exact(n, n_n, l), Rational(found, draws).convert_to<double>());
      EXPECT_LE(p_s3_bound(n, n_n, l), p_s3_exact(n, n_n, l) + 1e-15);
    }
  }
}

TEST(Probability, MonteCarloAgreement) {
  Rng rng(2024);
  const std::uint64_t samples = 1'000'000;
  const auto s1 = mc_halving_separable(6, {2}, samples, rng);
  EXPECT_TRUE(s1.agrees_with(p_s1(6, {2}))) << s1.mean;
  const auto n2 = mc_pair_nonseparable(12, {3, 4}, samples, rng);
  EXPECT_TRUE(n2.agrees_with(p_n2(12, {3, 4}))) << n2.mean;
  const auto s3 = mc_svep_early_find(20, 14, 3, samples, rng);
  EXPECT_TRUE(s3.agrees_with(p_s3_exact(20, 14, 3))) << s3.mean;
}

TEST(Probability, AllInUnitInterval) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.index(60);
    std::vector<std::size_t> sizes;
    std::size_t left = n;
    while (left >= 2 && rng.index(3) != 0) {
      const std::size_t s = 2 + rng.index(left - 1);
      sizes.push_back(s);
      left -= s;
    }
    for (double p : {p_s1(n, sizes), p_n2(n, sizes), p_n1(p_s1(n, sizes), 3),
                     p_s2(p_n2(n, sizes), 3), p_s3_bound(n, n - left, 3),
                     p_s3_exact(n, n - left, 3)}) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
}
