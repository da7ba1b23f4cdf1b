#include "fdg/cc.hpp"

#include <stdexcept>

namespace fdg::cc {

std::size_t de_optimizer(const SubproblemView& view, Population& population,
                         std::size_t generations, const DeParams& params, Rng& rng) {
  const std::size_t np = population.members.size();
  if (np < 4) throw std::invalid_argument("DE needs at least 4 members");
  if (population.fitness.size() != np)
    throw std::invalid_argument("population fitness size mismatch");
  const std::size_t d = view.lower.size();

  for (std::size_t g = 0; g < generations; ++g) {
    std::vector<Vector> next = population.members;
    std::vector<double> next_fit = population.fitness;
    for (std::size_t i = 0; i < np; ++i) {
      std::size_t r1, r2, r3;
      do r1 = rng.index(np); while (r1 == i);
      do r2 = rng.index(np); while (r2 == i || r2 == r1);
      do r3 = rng.index(np); while (r3 == i || r3 == r1 || r3 == r2);
      const auto& a = population.members[r1];
      const auto& b = population.members[r2];
      const auto& c = population.members[r3];
      const auto& target = population.members[i];

      const std::size_t jrand = rng.index(d);
      Vector trial = target;
      for (std::size_t j = 0; j < d; ++j) {
        const bool cross = rng.uniform01() < params.cr || (params.cr > 0.0 && j == jrand);
        if (!cross) continue;
        double v = a[j] + params.f * (b[j] - c[j]);
        if (v < view.lower[j]) v = 0.5 * (view.lower[j] + target[j]);
        if (v > view.upper[j]) v = 0.5 * (view.upper[j] + target[j]);
        trial[j] = v;
      }

      const auto y = view.evaluate(trial);
      if (!y) {
        population.members = std::move(next);
        population.fitness = std::move(next_fit);
        return g;
      }
      if (*y <= population.fitness[i]) {
        next[i] = std::move(trial);
        next_fit[i] = *y;
      }
    }
    population.members = std::move(next);
    population.fitness = std::move(next_fit);
  }
  return generations;
}

}  // namespace fdg::cc
