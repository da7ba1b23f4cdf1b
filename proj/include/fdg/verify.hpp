#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fdg::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t mc_samples = 1'000'000;  // per Monte Carlo estimate
  std::size_t indicator_pairs = 1000;    // per pair kind
};

// "probabilities", "indicators", "nmi", "complexity"
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
std::vector<Check> run_suite(std::string_view name, const SuiteOptions& options = {});

bool all_passed(const std::vector<Check>& checks);
void print_table(std::ostream& out, const std::vector<Check>& checks);

/// Worst-case evaluation count of FDG for k groups over n variables:
/// 2n log2(k) + 2n + k + 72.
double fe_upper_bound(std::size_t n, std::size_t k);

}  // namespace fdg::verify
