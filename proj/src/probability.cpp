#include "fdg/analysis.hpp"

#include <numeric>

namespace fdg::analysis {
namespace {

void check_sizes(std::size_t n, const std::vector<std::size_t>& sizes) {
  if (n < 2) throw std::invalid_argument("probabilities need n >= 2");
  std::size_t total = 0;
  for (auto s : sizes) {
    if (s < 2) throw std::invalid_argument("group sizes must be >= 2");
    total += s;
  }
  if (total > n) throw std::invalid_argument("group sizes exceed n");
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational power(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

BigInt binomial(long long p, long long q) {
  if (p < 0 || q < 0 || p < q) return 0;
  q = std::min(q, p - q);
  BigInt out = 1;
  for (long long i = 1; i <= q; ++i) {
    out *= p - q + i;
    out /= i;
  }
  return out;
}

Rational p_s1_exact(std::size_t n, const std::vector<std::size_t>& sizes) {
  check_sizes(n, sizes);
  const std::size_t n_n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  const long long n_s = static_cast<long long>(n - n_n);
  const long long half = static_cast<long long>(n / 2);

  // ways[t]: number of sets of whole groups whose sizes add up to t.
  std::vector<BigInt> ways(n_n + 1, 0);
  ways[0] = 1;
  std::size_t reach = 0;
  for (auto s : sizes) {
    for (std::size_t t = reach + 1; t-- > 0;)
      if (ways[t] != 0) ways[t + s] += ways[t];
    reach += s;
  }
  BigInt favourable = 0;
  for (std::size_t t = 0; t <= n_n; ++t)
    if (ways[t] != 0) favourable += ways[t] * binomial(n_s, half - static_cast<long long>(t));
  return Rational(favourable, binomial(static_cast<long long>(n), half));
}

double p_s1(std::size_t n, const std::vector<std::size_t>& sizes) {
  return to_double(p_s1_exact(n, sizes));
}

Rational p_s1_uniform_exact(std::size_t n, std::size_t k, std::size_t s) {
  check_sizes(n, std::vector<std::size_t>(k, s));
  const long long n_s = static_cast<long long>(n - k * s);
  const long long half = static_cast<long long>(n / 2);
  BigInt favourable = 0;
  for (std::size_t i = 0; i <= k; ++i)
    favourable += binomial(static_cast<long long>(k), static_cast<long long>(i)) *
                  binomial(n_s, half - static_cast<long long>(i * s));
  return Rational(favourable, binomial(static_cast<long long>(n), half));
}

double p_s1_uniform(std::size_t n, std::size_t k, std::size_t s) {
  return to_double(p_s1_uniform_exact(n, k, s));
}

double p_n1(double p_s1_value, std::size_t l) {
  return 1.0 - std::pow(p_s1_value, static_cast<double>(l));
}

Rational p_n2_exact(std::size_t n, const std::vector<std::size_t>& sizes) {
  check_sizes(n, sizes);
  BigInt same = 0;
  for (auto s : sizes) same += binomial(static_cast<long long>(s), 2);
  return Rational(same, binomial(static_cast<long long>(n), 2));
}

double p_n2(std::size_t n, const std::vector<std::size_t>& sizes) {
  return to_double(p_n2_exact(n, sizes));
}

double p_s2(double p_n2_value, std::size_t l) {
  return 1.0 - std::pow(p_n2_value, static_cast<double>(l));
}

double p_s3_bound(std::size_t n, std::size_t n_n, std::size_t l) {
  if (n == 0 || n_n > n) throw std::invalid_argument("need 0 <= n_n <= n, n > 0");
  return 1.0 - to_double(power(Rational(n_n, n), l));
}

double p_s3_exact(std::size_t n, std::size_t n_n, std::size_t l) {
  if (n == 0 || n_n > n) throw std::invalid_argument("need 0 <= n_n <= n, n > 0");
  l = std::min(l, n);
  const Rational all_nonsep(binomial(static_cast<long long>(n_n), static_cast<long long>(l)),
                            binomial(static_cast<long long>(n), static_cast<long long>(l)));
  return to_double(Rational(1) - all_nonsep);
}

namespace {

// group id per index, -1 for separable
std::vector<long> layout(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<long> g(n, -1);
  std::size_t at = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes[i]; ++j) g[at++] = static_cast<long>(i);
  return g;
}

Estimate finish(std::uint64_t hits, std::uint64_t samples) {
  Estimate e;
  e.samples = samples;
  e.mean = static_cast<double>(hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(samples));
  return e;
}

}  // namespace

Estimate mc_halving_separable(std::size_t n, const std::vector<std::size_t>& sizes,
                              std::uint64_t samples, Rng& rng) {
  check_sizes(n, sizes);
  const auto group = layout(n, sizes);
  const std::size_t half = n / 2;
  std::vector<std::size_t> idx(n);
  std::vector<char> side(n);
  std::vector<int> count(sizes.size());
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::fill(side.begin(), side.end(), 0);
    for (std::size_t i = 0; i < half; ++i) {
      std::swap(idx[i], idx[i + rng.index(n - i)]);
      side[idx[i]] = 1;
    }
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t v = 0; v < n; ++v)
      if (group[v] >= 0 && side[v]) ++count[static_cast<std::size_t>(group[v])];
    bool separable = true;
    for (std::size_t g = 0; g < sizes.size(); ++g)
      if (count[g] != 0 && static_cast<std::size_t>(count[g]) != sizes[g]) separable = false;
    hits += separable;
  }
  return finish(hits, samples);
}

Estimate mc_pair_nonseparable(std::size_t n, const std::vector<std::size_t>& sizes,
                              std::uint64_t samples, Rng& rng) {
  check_sizes(n, sizes);
  const auto group = layout(n, sizes);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t a = rng.index(n);
    std::size_t b = rng.index(n - 1);
    if (b >= a) ++b;
    hits += group[a] >= 0 && group[a] == group[b];
  }
  return finish(hits, samples);
}

Estimate mc_svep_early_find(std::size_t n, std::size_t n_n, std::size_t l,
                            std::uint64_t samples, Rng& rng) {
  if (n == 0 || n_n > n) throw std::invalid_argument("need 0 <= n_n <= n, n > 0");
  l = std::min(l, n);
  std::vector<std::size_t> idx(n);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    bool found = false;
    for (std::size_t i = 0; i < l; ++i) {
      std::swap(idx[i], idx[i + rng.index(n - i)]);
      // indices >= n_n are the separable ones
      if (idx[i] >= n_n) found = true;
    }
    hits += found;
  }
  return finish(hits, samples);
}

}  // namespace fdg::analysis
