#pragma once

#include "fdg/decomposition.hpp"
#include "fdg/idap.hpp"
#include "fdg/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace fdg::analysis {

// ---------------------------------------------------------------------------
// Pairwise oracle

inline constexpr std::size_t kDefaultOracleCap = 128;

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  Decomposition decomposition;
  std::vector<double> pair_phis;  // row-major over i < j
  std::optional<IdapResult> idap;
  std::uint64_t fe_count = 0;
};

/// DG-style reference decomposer: a fresh four-corner indicator for every
/// pair of variables, IDAP over all pair indicators, then transitive closure
/// of the nonseparable pairs. Costs 2n(n-1) evaluations; throws CapExceeded
/// when n > cap.
OracleResult pairwise_oracle(const Problem& problem, EvaluationLedger& ledger,
                             std::size_t cap = kDefaultOracleCap,
                             double gap_factor = kDefaultGapFactor);

// ---------------------------------------------------------------------------
// Partition similarity

/// Normalized mutual information between two partitions of 0..n-1, in
/// percent. Separable variables count as singleton blocks. Throws
/// std::invalid_argument when either input is not a partition.
double nmi(const Decomposition& a, const Decomposition& b, std::size_t n);

// ---------------------------------------------------------------------------
// Selection probabilities. Group sizes describe disjoint nonseparable groups
// (each >= 2, total <= n); everything else is separable.

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(p, q), zero when q < 0 or p < q.
BigInt binomial(long long p, long long q);

/// Probability that a random halving (floor(n/2) variables on one side)
/// keeps every group on one side.
Rational p_s1_exact(std::size_t n, const std::vector<std::size_t>& sizes);
double p_s1(std::size_t n, const std::vector<std::size_t>& sizes);
/// Same for k groups of equal size s, via the binomial-weighted sum.
Rational p_s1_uniform_exact(std::size_t n, std::size_t k, std::size_t s);
double p_s1_uniform(std::size_t n, std::size_t k, std::size_t s);
/// Chance that at least one of l halvings is nonseparable: 1 - p_s1^l.
double p_n1(double p_s1, std::size_t l);

/// Probability that two distinct random variables share a group.
Rational p_n2_exact(std::size_t n, const std::vector<std::size_t>& sizes);
double p_n2(std::size_t n, const std::vector<std::size_t>& sizes);
/// Chance that at least one of l random pairs is separable: 1 - p_n2^l.
double p_s2(double p_n2, std::size_t l);

/// Lower bound 1 - (n_n/n)^l on SVEP finding a separable variable among its
/// first l probes.
double p_s3_bound(std::size_t n, std::size_t n_n, std::size_t l);
/// Exact value 1 - C(n_n, l) / C(n, l) for draws without repetition.
double p_s3_exact(std::size_t n, std::size_t n_n, std::size_t l);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;

  // |mean - p| within `sigmas` standard errors of a Bernoulli(p) mean.
  bool agrees_with(double p, double sigmas = 3.0) const {
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return std::abs(mean - p) <= sigmas * se + 1e-15;
  }
};

// Monte Carlo counterparts. Groups occupy consecutive index blocks; the
// probabilities do not depend on where groups sit.
Estimate mc_halving_separable(std::size_t n, const std::vector<std::size_t>& sizes,
                              std::uint64_t samples, Rng& rng);
Estimate mc_pair_nonseparable(std::size_t n, const std::vector<std::size_t>& sizes,
                              std::uint64_t samples, Rng& rng);
Estimate mc_svep_early_find(std::size_t n, std::size_t n_n, std::size_t l,
                            std::uint64_t samples, Rng& rng);

}  // namespace fdg::analysis
