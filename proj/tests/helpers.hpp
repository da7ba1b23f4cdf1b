#pragma once

#include "fdg/problem.hpp"

#include <cmath>

namespace fdg::testing {

inline Problem unit_box(std::size_t n, Problem::Objective f) {
  return Problem(Vector(n, 0.0), Vector(n, 1.0), std::move(f));
}

inline double sum_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

inline double product2(std::span<const double> x) { return x[0] * x[1]; }

// Objective with a caller-chosen interaction graph: squares of every
// variable plus x_a * x_b for each listed pair.
struct PairwiseObjective {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double operator()(std::span<const double> x) const {
    double s = sum_sq(x);
    for (auto [a, b] : pairs) s += x[a] * x[b];
    return s;
  }
};

}  // namespace fdg::testing
