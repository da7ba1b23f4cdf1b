#include "fdg/benchmarks.hpp"
#include "fdg/btdp.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace fdg;

namespace {

const Thresholds kThresholds{kMachineEpsilon, 1e-2};

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

IndexSet others(std::size_t n, const IndexSet& skip) {
  IndexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(skip.begin(), skip.end(), v) == skip.end()) out.push_back(v);
  return out;
}

// Every corner of `node` matches a fresh composition around its own x_ll:
// X1 raised in x_ul, the node subset raised in x_lu, both in x_uu.
void expect_corner_relations(const Problem& p, const IndexSet& x1, const DetectionNode& node) {
  const auto& c = node.corners;
  const auto& ub = p.upper();
  auto raise = [&](Vector x, const IndexSet& s) {
    assign_subset(x, s, ub);
    return x;
  };
  EXPECT_EQ(c.x_ul, raise(c.x_ll, x1));
  EXPECT_EQ(c.x_lu, raise(c.x_ll, node.subset));
  EXPECT_EQ(c.x_uu, raise(c.x_lu, x1));
  EXPECT_EQ(c.y_ll, p.objective()(c.x_ll));
  EXPECT_EQ(c.y_ul, p.objective()(c.x_ul));
  EXPECT_EQ(c.y_lu, p.objective()(c.x_lu));
  EXPECT_EQ(c.y_uu, p.objective()(c.x_uu));
}

}  // namespace

TEST(Btdp, SeparableSubsetCostsThree) {
  const auto bm = bench::build(bench::group_schwefel(20, 2, 5, 1));
  const auto& g0 = bm.ground_truth.nonseps[0];
  const auto& g1 = bm.ground_truth.nonseps[1];
  EvaluationLedger ledger;
  const double y_lb = bm.problem.evaluate(ledger, bm.problem.lower());
  Rng rng(0);
  const auto r = run_btdp(bm.problem, ledger, g0, g1, y_lb, kThresholds, rng);
  EXPECT_TRUE(r.interacting.empty());
  EXPECT_EQ(r.fe_count, 3u);
  EXPECT_EQ(ledger.count(), 4u);
}

TEST(Btdp, SingletonInteractingLeaf) {
  const auto bm = bench::build(bench::group_schwefel(20, 2, 5, 1));
  const auto& g0 = bm.ground_truth.nonseps[0];
  EvaluationLedger ledger;
  const double y_lb = bm.problem.evaluate(ledger, bm.problem.lower());
  Rng rng(0);
  const auto r = run_btdp(bm.problem, ledger, {g0[0]}, {g0[1]}, y_lb, kThresholds, rng);
  EXPECT_EQ(r.interacting, IndexSet{g0[1]});
  EXPECT_EQ(r.fe_count, 3u);
  EXPECT_EQ(r.splits, 0u);
}

TEST(Btdp, FullGroupOfEightCostsFifteen) {
  const auto bm = bench::build(bench::full_schwefel(8, 2));
  EvaluationLedger ledger;
  const double y_lb = bm.problem.evaluate(ledger, bm.problem.lower());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto r = run_btdp(bm.problem, ledger, {0}, others(8, {0}), y_lb, kThresholds, rng);
    EXPECT_EQ(sorted(r.interacting), others(8, {0}));
    EXPECT_EQ(r.splits, 6u);
    EXPECT_EQ(r.fe_count, 15u);
  }
}

TEST(Btdp, SplitCostsTwoAndKeepsCornerRelations) {
  const auto bm = bench::build(bench::group_schwefel(30, 3, 6, 4));
  const auto& p = bm.problem;
  const IndexSet x1 = bm.ground_truth.nonseps[0];
  const IndexSet x2 = others(30, x1);
  EvaluationLedger ledger;
  const double y_lb = p.evaluate(ledger, p.lower());
  Rng rng(5);

  std::vector<DetectionNode> frontier{make_root(p, ledger, x1, x2, y_lb)};
  EXPECT_EQ(frontier[0].fe_cost, 3u);
  expect_corner_relations(p, x1, frontier[0]);
  while (!frontier.empty()) {
    auto node = std::move(frontier.back());
    frontier.pop_back();
    if (node.subset.size() < 2) continue;
    const auto before = ledger.count();
    auto [left, right] = split(node, p, ledger, rng);
    EXPECT_EQ(ledger.count() - before, 2u);
    EXPECT_EQ(left.subset.size(), (node.subset.size() + 1) / 2);
    IndexSet joined = left.subset;
    joined.insert(joined.end(), right.subset.begin(), right.subset.end());
    EXPECT_EQ(sorted(joined), sorted(node.subset));
    EXPECT_EQ(right.corners.x_ll, left.corners.x_lu);
    EXPECT_EQ(right.corners.x_lu, node.corners.x_lu);
    expect_corner_relations(p, x1, left);
    expect_corner_relations(p, x1, right);
    frontier.push_back(std::move(left));
    frontier.push_back(std::move(right));
  }
}

TEST(Btdp, RejectsSingletonSplitAndEmptySets) {
  const auto p = fdg::testing::unit_box(3, fdg::testing::sum_sq);
  EvaluationLedger ledger;
  Rng rng(0);
  const auto root = make_root(p, ledger, {0}, {1}, 0.0);
  EXPECT_THROW(split(root, p, ledger, rng), std::invalid_argument);
  EXPECT_THROW(make_root(p, ledger, {}, {1}, 0.0), std::invalid_argument);
  EXPECT_THROW(run_btdp(p, ledger, {0}, {1}, 0.0, Thresholds{}, rng), std::invalid_argument);
}

TEST(Btdp, FindsExactlyTheInteractingVariables) {
  Rng pick(8);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto bm = bench::build(bench::group_schwefel(60, 4, 3 + pick.index(8), seed));
    const auto& p = bm.problem;
    const auto& groups = bm.ground_truth.nonseps;
    const IndexSet& g = groups[pick.index(groups.size())];
    const IndexSet x1{g[0]};
    const IndexSet x2 = others(60, x1);
    EvaluationLedger ledger;
    const double y_lb = p.evaluate(ledger, p.lower());
    Rng rng(seed);
    const auto r = run_btdp(p, ledger, x1, x2, y_lb, kThresholds, rng);
    EXPECT_EQ(sorted(r.interacting), sorted(IndexSet(g.begin() + 1, g.end())));

    // FE count reconciles with the trace, and the visit order is breadth first.
    std::uint64_t from_trace = 0;
    std::size_t splits = 0;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      from_trace += r.trace[i].fe_cost;
      if (i > 0) EXPECT_GE(r.trace[i].depth, r.trace[i - 1].depth);
      if (!r.trace[i].separable && r.trace[i].subset.size() > 1) ++splits;
    }
    EXPECT_EQ(from_trace, r.fe_count);
    EXPECT_EQ(r.fe_count, 3 + 2 * splits);
    EXPECT_EQ(ledger.count(), 1 + r.fe_count);

    // Each returned variable checked on its own against X1.
    for (auto v : r.interacting) {
      EvaluationLedger side;
      const double w = sample_and_phi(p, side, p.lower(), x1, IndexSet{v}).phi;
      EXPECT_FALSE(judge_sep(w, kThresholds).separable);
    }
    EXPECT_GE(*r.thresholds.phi_s, *kThresholds.phi_s);
    EXPECT_LE(*r.thresholds.phi_n, *kThresholds.phi_n);
  }
}
