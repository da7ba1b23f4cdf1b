#pragma once

#include "fdg/benchmarks.hpp"
#include "fdg/fdg.hpp"

#include <json.hpp>

#include <filesystem>
#include <ostream>

namespace fdg::io {

using Json = nlohmann::ordered_json;

/// Problem spec object:
///   {"family": "group-schwefel", "n": 200, "k": 5, "s": 20,
///    "weights": [...], "permutation_seed": 3, "shift_seed": 4}
/// `s` is either one size shared by all k groups or an array of sizes (then
/// `k` is optional). `weights` and both seeds are optional; shift_seed
/// defaults to permutation_seed + 1. full-schwefel needs no group fields.
/// Throws std::invalid_argument on malformed input.
bench::BenchmarkSpec spec_from_json(const Json& j);
Json spec_to_json(const bench::BenchmarkSpec& spec);
bench::BenchmarkSpec load_spec(const std::filesystem::path& path);

Json to_json(const Thresholds& t);
Json to_json(const Decomposition& d);  // {"nonseps": [[...]], "seps": [...]}

/// Per-phase trace: [{"name", "feNum", "detail"}].
Json trace_to_json(const FdgTrace& trace);

// Sorted indicator values and adjacent ratios as CSV (index,phi,lambda).
void write_lambda_csv(std::ostream& out, const IdapResult& analysis);

}  // namespace fdg::io
