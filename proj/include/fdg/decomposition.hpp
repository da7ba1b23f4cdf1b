#pragma once

#include "fdg/types.hpp"

#include <vector>

namespace fdg {

/// Grouping result: nonseparable variable groups plus separable singletons.
struct Decomposition {
  std::vector<IndexSet> nonseps;
  IndexSet seps;

  /// Every block as an index set; each separable variable is its own block.
  std::vector<IndexSet> blocks() const {
    std::vector<IndexSet> out = nonseps;
    for (auto v : seps) out.push_back({v});
    return out;
  }

  // Sorted groups (by first member) and sorted members so that two
  // decompositions of the same partition compare equal.
  Decomposition canonical() const;

  /// True when the blocks form a disjoint cover of 0..n-1.
  bool is_partition_of(std::size_t n) const;

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    const auto ca = a.canonical();
    const auto cb = b.canonical();
    return ca.nonseps == cb.nonseps && ca.seps == cb.seps;
  }
};

}  // namespace fdg
