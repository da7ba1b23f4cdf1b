#pragma once

#include "fdg/indicator.hpp"
#include "fdg/rng.hpp"

#include <utility>

namespace fdg {

/// A subset of X2 together with the corners of phi(X1, subset).
struct DetectionNode {
  IndexSet subset;
  CornerSample corners;
  std::uint64_t fe_cost = 0;  // evaluations spent creating this node
  std::size_t depth = 0;
};

struct NodeRecord {
  IndexSet subset;
  double phi = 0.0;
  bool separable = false;
  std::uint64_t fe_cost = 0;
  std::size_t depth = 0;
};

struct BtdpResult {
  IndexSet interacting;  // members of X2 found interdependent with X1
  std::uint64_t fe_count = 0;
  Thresholds thresholds;
  std::vector<NodeRecord> trace;  // visit order
  std::size_t splits = 0;
};

/// Root node for X2 around lb, reusing f(lb): 3 evaluations.
DetectionNode make_root(const Problem& problem, EvaluationLedger& ledger,
                        const IndexSet& x1, const IndexSet& x2, double y_lb);

/// Halves a node at random (left gets the larger half). The left child moves
/// the right half back to its lower bound in x_lu and x_uu and re-evaluates
/// both; the right child takes the left child's x_lu/x_uu as its x_ll/x_ul
/// and inherits x_lu/x_uu from the parent. Costs exactly 2 evaluations.
std::pair<DetectionNode, DetectionNode> split(const DetectionNode& parent, const Problem& problem,
                                              EvaluationLedger& ledger, Rng& rng);

/// Breadth-first binary-tree search for the variables of X2 that interact
/// with X1. Thresholds are tightened by every judgement.
BtdpResult run_btdp(const Problem& problem, EvaluationLedger& ledger, const IndexSet& x1,
                    const IndexSet& x2, double y_lb, const Thresholds& thresholds, Rng& rng);

}  // namespace fdg
