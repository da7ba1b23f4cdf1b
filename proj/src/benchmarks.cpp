#include "fdg/benchmarks.hpp"

#include "fdg/rng.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fdg::bench {
namespace {

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::SumOfSquares, "sum-of-squares"},
    {Family::ShiftedRastriginSeparable, "shifted-rastrigin-separable"},
    {Family::GroupSchwefel, "group-schwefel"},
    {Family::ImbalancedGroup, "imbalanced-group"},
    {Family::FullSchwefel, "full-schwefel"},
    {Family::ShiftedAckley, "shifted-ackley"},
    {Family::ChainedOverlap, "chained-overlap"},
};

// Neumaier compensated summation. The outer sum of a separable objective is
// the only place where cross-subfunction roundoff enters, so keeping it
// accurate keeps separable interaction estimates near one ulp.
class CompensatedSum {
public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Nested sum of squares: every pair of members interacts directly.
double schwefel_12(const IndexSet& members, std::span<const double> x, const Vector& shift) {
  double prefix = 0.0;
  double acc = 0.0;
  for (auto i : members) {
    prefix += x[i] - shift[i];
    acc += prefix * prefix;
  }
  return acc;
}

double sphere_term(double z) { return z * z; }

double rastrigin_term(double z) {
  return z * z - 10.0 * std::cos(2.0 * std::numbers::pi * z) + 10.0;
}

struct Bounds {
  double lower;
  double upper;
};

Bounds family_bounds(Family f) {
  switch (f) {
    case Family::ShiftedRastriginSeparable: return {-5.0, 5.0};
    case Family::ShiftedAckley: return {-32.0, 32.0};
    default: return {-100.0, 100.0};
  }
}

// Immutable data shared by the objective closure.
struct GroupedData {
  Vector shift;
  std::vector<IndexSet> groups;
  Vector weights;
  IndexSet separable;
};

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& fn : kFamilyNames)
    if (fn.family == f) return fn.name;
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (const auto& fn : kFamilyNames)
    if (fn.name == name) return fn.family;
  throw std::invalid_argument("unknown benchmark family: " + std::string(name));
}

std::size_t BenchmarkSpec::nonseparable_count() const {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (family == Family::ChainedOverlap && !sizes.empty()) return total - (sizes.size() - 1);
  return total;
}

void BenchmarkSpec::validate() const {
  if (n == 0) throw std::invalid_argument("benchmark dimension must be positive");
  for (auto s : sizes)
    if (s < 2) throw std::invalid_argument("nonseparable groups need at least 2 members");
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (family != Family::ChainedOverlap && total > n)
    throw std::invalid_argument("group sizes exceed the dimension");
  if (family == Family::ChainedOverlap && !sizes.empty() && total - (sizes.size() - 1) > n)
    throw std::invalid_argument("chained groups exceed the dimension");
  if (!weights.empty()) {
    if (weights.size() != sizes.size())
      throw std::invalid_argument("one weight per group is required");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("group weights must be positive and finite");
  }
  switch (family) {
    case Family::SumOfSquares:
    case Family::ShiftedRastriginSeparable:
    case Family::ShiftedAckley:
      if (!sizes.empty()) throw std::invalid_argument("this family takes no groups");
      break;
    case Family::FullSchwefel:
      if (sizes.size() != 1 || sizes[0] != n || n < 2)
        throw std::invalid_argument("full-schwefel is one group covering all n >= 2 variables");
      break;
    case Family::GroupSchwefel:
    case Family::ImbalancedGroup:
      break;
    case Family::ChainedOverlap:
      if (sizes.size() < 2) throw std::invalid_argument("chained-overlap needs at least 2 groups");
      break;
  }
}

BenchmarkSpec sum_of_squares(std::size_t n, std::uint64_t seed) {
  return {Family::SumOfSquares, n, {}, {}, seed, seed + 1};
}

BenchmarkSpec rastrigin(std::size_t n, std::uint64_t seed) {
  return {Family::ShiftedRastriginSeparable, n, {}, {}, seed, seed + 1};
}

BenchmarkSpec group_schwefel(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed) {
  return {Family::GroupSchwefel, n, std::vector<std::size_t>(k, s), {}, seed, seed + 1};
}

BenchmarkSpec imbalanced_group(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed) {
  return {Family::ImbalancedGroup, n, std::vector<std::size_t>(k, s), {}, seed, seed + 1};
}

BenchmarkSpec full_schwefel(std::size_t n, std::uint64_t seed) {
  return {Family::FullSchwefel, n, {n}, {}, seed, seed + 1};
}

BenchmarkSpec ackley(std::size_t n, std::uint64_t seed) {
  return {Family::ShiftedAckley, n, {}, {}, seed, seed + 1};
}

BenchmarkSpec chained_overlap(std::size_t n, std::vector<std::size_t> sizes, std::uint64_t seed) {
  return {Family::ChainedOverlap, n, std::move(sizes), {}, seed, seed + 1};
}

std::vector<double> imbalanced_weights(std::size_t k) {
  std::vector<double> w(k, 1.0);
  if (k < 2) return w;
  for (std::size_t g = 0; g < k; ++g)
    w[g] = std::pow(10.0, -6.0 + 12.0 * static_cast<double>(g) / static_cast<double>(k - 1));
  return w;
}

Benchmark build(const BenchmarkSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const Bounds b = family_bounds(spec.family);
  Vector lower(n, b.lower);
  Vector upper(n, b.upper);

  Rng shift_rng(spec.shift_seed);
  Vector shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = shift_rng.uniform(lower[i], upper[i]);

  Rng perm_rng(spec.permutation_seed);
  const IndexSet order = perm_rng.permutation(n);

  auto data = std::make_shared<GroupedData>();
  data->shift = shift;

  // Lay kernels out along the permuted order.
  std::size_t used = 0;
  if (spec.family == Family::ChainedOverlap) {
    std::size_t start = 0;
    for (std::size_t g = 0; g < spec.sizes.size(); ++g) {
      IndexSet members(order.begin() + static_cast<std::ptrdiff_t>(start),
                       order.begin() + static_cast<std::ptrdiff_t>(start + spec.sizes[g]));
      data->groups.push_back(std::move(members));
      start += spec.sizes[g] - 1;
    }
    used = start + 1;
  } else {
    for (auto s : spec.sizes) {
      data->groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(used),
                                order.begin() + static_cast<std::ptrdiff_t>(used + s));
      used += s;
    }
  }
  data->separable.assign(order.begin() + static_cast<std::ptrdiff_t>(used), order.end());
  data->weights = spec.weights;
  if (data->weights.empty()) {
    data->weights = spec.family == Family::ImbalancedGroup ? imbalanced_weights(spec.k())
                                                           : std::vector<double>(spec.k(), 1.0);
  }

  Problem::Objective objective;
  std::string structure;
  switch (spec.family) {
    case Family::SumOfSquares:
    case Family::ShiftedRastriginSeparable: {
      const bool rast = spec.family == Family::ShiftedRastriginSeparable;
      objective = [data, rast](std::span<const double> x) {
        CompensatedSum sum;
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double z = x[i] - data->shift[i];
          sum.add(rast ? rastrigin_term(z) : sphere_term(z));
        }
        return sum.value();
      };
      structure = "fully-separable";
      break;
    }
    case Family::ShiftedAckley: {
      objective = [data](std::span<const double> x) {
        const double dim = static_cast<double>(x.size());
        double sq = 0.0;
        double cs = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double z = x[i] - data->shift[i];
          sq += z * z;
          cs += std::cos(2.0 * std::numbers::pi * z);
        }
        return -20.0 * std::exp(-0.2 * std::sqrt(sq / dim)) - std::exp(cs / dim) + 20.0 +
               std::numbers::e;
      };
      structure = "nonseparable (additively)";
      break;
    }
    case Family::GroupSchwefel:
    case Family::ImbalancedGroup:
    case Family::FullSchwefel:
    case Family::ChainedOverlap: {
      objective = [data](std::span<const double> x) {
        CompensatedSum sum;
        for (std::size_t g = 0; g < data->groups.size(); ++g)
          sum.add(data->weights[g] * schwefel_12(data->groups[g], x, data->shift));
        for (auto i : data->separable) sum.add(sphere_term(x[i] - data->shift[i]));
        return sum.value();
      };
      break;
    }
  }

  Decomposition truth;
  if (spec.family == Family::ShiftedAckley) {
    truth.nonseps.push_back(IndexSet(order.begin(), order.end()));
    if (n == 1) truth = Decomposition{{}, {0}};
  } else if (spec.family == Family::ChainedOverlap) {
    truth.nonseps.push_back(IndexSet(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(used)));
    truth.seps = data->separable;
  } else {
    truth.nonseps = data->groups;
    truth.seps = data->separable;
  }
  truth = truth.canonical();

  if (structure.empty()) {
    if (truth.nonseps.empty())
      structure = "fully-separable";
    else if (truth.nonseps.size() == 1 && truth.seps.empty())
      structure = "nonseparable";
    else
      structure = "partially-separable";
  }

  auto kernels = data->groups;
  if (spec.family == Family::ShiftedAckley) kernels = truth.nonseps;
  return Benchmark{Problem(std::move(lower), std::move(upper), std::move(objective)),
                   std::move(truth), std::move(structure), std::move(shift),
                   std::move(kernels), spec.family != Family::ChainedOverlap};
}

}  // namespace fdg::bench
