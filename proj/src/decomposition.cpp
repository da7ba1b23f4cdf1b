#include "fdg/decomposition.hpp"

#include <algorithm>

namespace fdg {

Decomposition Decomposition::canonical() const {
  Decomposition out = *this;
  for (auto& g : out.nonseps) std::sort(g.begin(), g.end());
  std::sort(out.nonseps.begin(), out.nonseps.end());
  std::sort(out.seps.begin(), out.seps.end());
  return out;
}

bool Decomposition::is_partition_of(std::size_t n) const {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  auto visit = [&](std::size_t v) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
    ++total;
    return true;
  };
  for (const auto& g : nonseps) {
    if (g.empty()) return false;
    for (auto v : g)
      if (!visit(v)) return false;
  }
  for (auto v : seps)
    if (!visit(v)) return false;
  return total == n;
}

}  // namespace fdg
