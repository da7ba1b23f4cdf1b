#include "fdg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fdg::analysis {
namespace {

std::vector<std::size_t> labels(const Decomposition& d, std::size_t n) {
  if (!d.is_partition_of(n)) throw std::invalid_argument("decomposition is not a partition");
  std::vector<std::size_t> label(n);
  const auto blocks = d.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto v : blocks[b]) label[v] = b;
  return label;
}

}  // namespace

double nmi(const Decomposition& a, const Decomposition& b, std::size_t n) {
  const auto la = labels(a, n);
  const auto lb = labels(b, n);
  if (a == b) return 100.0;

  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  std::map<std::size_t, double> rows, cols;
  for (std::size_t v = 0; v < n; ++v) {
    joint[{la[v], lb[v]}] += 1.0;
    rows[la[v]] += 1.0;
    cols[lb[v]] += 1.0;
  }
  const double total = static_cast<double>(n);
  double num = 0.0;
  for (const auto& [cell, m] : joint)
    num += m * std::log2(total * m / (rows[cell.first] * cols[cell.second]));
  num *= -2.0;
  double den = 0.0;
  for (const auto& [_, m] : rows) den += m * std::log2(m / total);
  for (const auto& [_, m] : cols) den += m * std::log2(m / total);
  if (den == 0.0) return 100.0;  // both single-block, handled above unless unequal
  return std::clamp(100.0 * num / den, 0.0, 100.0);
}

}  // namespace fdg::analysis
