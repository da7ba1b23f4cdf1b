#include "fdg/btdp.hpp"

#include <deque>
#include <stdexcept>

namespace fdg {

DetectionNode make_root(const Problem& problem, EvaluationLedger& ledger,
                        const IndexSet& x1, const IndexSet& x2, double y_lb) {
  if (x1.empty() || x2.empty()) throw std::invalid_argument("BTDP subsets must be nonempty");
  auto ind = sample_and_phi(problem, ledger, problem.lower(), x1, x2, CornerReuse{y_lb, std::nullopt, std::nullopt, std::nullopt});
  return DetectionNode{x2, std::move(ind.sample), ind.evaluations, 0};
}

std::pair<DetectionNode, DetectionNode> split(const DetectionNode& parent, const Problem& problem,
                                              EvaluationLedger& ledger, Rng& rng) {
  if (parent.subset.size() < 2) throw std::invalid_argument("cannot split a singleton node");
  IndexSet shuffled = parent.subset;
  rng.shuffle(shuffled);
  const std::size_t left_size = (shuffled.size() + 1) / 2;
  IndexSet left_set(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(left_size));
  IndexSet right_set(shuffled.begin() + static_cast<std::ptrdiff_t>(left_size), shuffled.end());

  const auto& lb = problem.lower();
  DetectionNode left{std::move(left_set), parent.corners, 2, parent.depth + 1};
  assign_subset(left.corners.x_lu, right_set, lb);
  assign_subset(left.corners.x_uu, right_set, lb);
  left.corners.y_lu = problem.evaluate(ledger, left.corners.x_lu);
  left.corners.y_uu = problem.evaluate(ledger, left.corners.x_uu);

  DetectionNode right{std::move(right_set), parent.corners, 0, parent.depth + 1};
  right.corners.x_ll = left.corners.x_lu;
  right.corners.y_ll = left.corners.y_lu;
  right.corners.x_ul = left.corners.x_uu;
  right.corners.y_ul = left.corners.y_uu;
  return {std::move(left), std::move(right)};
}

BtdpResult run_btdp(const Problem& problem, EvaluationLedger& ledger, const IndexSet& x1,
                    const IndexSet& x2, double y_lb, const Thresholds& thresholds, Rng& rng) {
  if (!thresholds.complete()) throw std::invalid_argument("BTDP needs both thresholds");
  BtdpResult r;
  r.thresholds = thresholds;

  std::deque<DetectionNode> queue;
  queue.push_back(make_root(problem, ledger, x1, x2, y_lb));
  r.fe_count += queue.back().fe_cost;

  while (!queue.empty()) {
    DetectionNode node = std::move(queue.front());
    queue.pop_front();
    const double value = phi(node.corners);
    const auto verdict = judge_sep(value, r.thresholds);
    r.thresholds = verdict.thresholds;
    r.trace.push_back({node.subset, value, verdict.separable, node.fe_cost, node.depth});
    if (verdict.separable) continue;
    if (node.subset.size() == 1) {
      r.interacting.push_back(node.subset.front());
      continue;
    }
    auto [left, right] = split(node, problem, ledger, rng);
    r.fe_count += 2;
    ++r.splits;
    queue.push_back(std::move(left));
    queue.push_back(std::move(right));
  }
  return r;
}

}  // namespace fdg
