#include "fdg/serialization.hpp"

#include <fstream>
#include <stdexcept>

namespace fdg::io {
namespace {

std::size_t count_field(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw std::invalid_argument(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::uint64_t seed_field(const Json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw std::invalid_argument(std::string("field '") + key + "' must be an unsigned integer");
  return v.get<std::uint64_t>();
}

Json index_array(const IndexSet& s) { return Json(s); }

}  // namespace

bench::BenchmarkSpec spec_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("problem spec must be a JSON object");
    bench::BenchmarkSpec spec;
    spec.family = bench::family_from_string(j.at("family").get<std::string>());
    spec.n = count_field(j, "n");

    if (j.contains("s")) {
      const auto& s = j.at("s");
      if (s.is_array()) {
        for (const auto& v : s) {
          if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::invalid_argument("group sizes must be non-negative integers");
          spec.sizes.push_back(v.get<std::size_t>());
        }
        if (j.contains("k") && count_field(j, "k") != spec.sizes.size())
          throw std::invalid_argument("k does not match the number of sizes");
      } else {
        spec.sizes.assign(count_field(j, "k"), count_field(j, "s"));
      }
    } else if (j.contains("k") && count_field(j, "k") != 0) {
      throw std::invalid_argument("k groups given without sizes");
    } else if (spec.family == bench::Family::FullSchwefel) {
      spec.sizes = {spec.n};
    }

    if (j.contains("weights")) spec.weights = j.at("weights").get<std::vector<double>>();
    spec.permutation_seed = seed_field(j, "permutation_seed", 0);
    spec.shift_seed = seed_field(j, "shift_seed", spec.permutation_seed + 1);
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed problem spec: ") + e.what());
  }
}

Json spec_to_json(const bench::BenchmarkSpec& spec) {
  Json j;
  j["family"] = std::string(bench::to_string(spec.family));
  j["n"] = spec.n;
  j["k"] = spec.k();
  j["s"] = spec.sizes;
  if (!spec.weights.empty()) j["weights"] = spec.weights;
  j["permutation_seed"] = spec.permutation_seed;
  j["shift_seed"] = spec.shift_seed;
  return j;
}

bench::BenchmarkSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read problem spec " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return spec_from_json(j);
}

Json to_json(const Thresholds& t) {
  Json j;
  j["phi_s"] = t.phi_s ? Json(*t.phi_s) : Json(nullptr);
  j["phi_n"] = t.phi_n ? Json(*t.phi_n) : Json(nullptr);
  return j;
}

Json to_json(const Decomposition& d) {
  const auto c = d.canonical();
  Json j;
  j["nonseps"] = Json::array();
  for (const auto& g : c.nonseps) j["nonseps"].push_back(index_array(g));
  j["seps"] = index_array(c.seps);
  return j;
}

Json trace_to_json(const FdgTrace& trace) {
  Json phases = Json::array();
  for (const auto& phase : trace.phases) {
    Json p;
    p["name"] = phase.name;
    p["feNum"] = phase.fe_count;
    Json detail = Json::object();
    if (phase.name == "itip") {
      const auto& it = trace.itip;
      detail["type"] = std::string(to_string(it.type));
      detail["halving_phis"] = it.halving_phis;
      detail["pair_phis"] = it.pair_phis;
      detail["sorted"] = it.analysis.sorted;
      detail["lambdas"] = it.analysis.ratios;
      detail["gap_index"] = it.analysis.gap_index;
      detail["thresholds"] = to_json(it.thresholds);
    } else if (phase.name == "svep" && trace.psdp) {
      const auto& sv = trace.psdp->svep;
      Json probes = Json::array();
      for (const auto& pr : sv.probes)
        probes.push_back({{"variable", pr.variable}, {"phi", pr.phi}, {"separable", pr.separable}});
      detail["probes"] = std::move(probes);
      detail["seps"] = index_array(sv.seps);
      detail["thresholds"] = to_json(sv.thresholds);
    } else if (phase.name == "btdp" && trace.psdp) {
      Json calls = Json::array();
      for (const auto& call : trace.psdp->btdp_calls) {
        Json nodes = Json::array();
        for (const auto& node : call.result.trace)
          nodes.push_back({{"subset", index_array(node.subset)},
                           {"phi", node.phi},
                           {"separable", node.separable},
                           {"feNum", node.fe_cost},
                           {"depth", node.depth}});
        calls.push_back({{"x1", index_array(call.x1)},
                         {"x2_size", call.x2_size},
                         {"feNum", call.result.fe_count},
                         {"splits", call.result.splits},
                         {"interacting", index_array(call.result.interacting)},
                         {"nodes", std::move(nodes)}});
      }
      detail["calls"] = std::move(calls);
      detail["thresholds"] = to_json(trace.psdp->thresholds);
    }
    p["detail"] = std::move(detail);
    phases.push_back(std::move(p));
  }
  Json j;
  j["type"] = std::string(to_string(trace.type));
  j["itip_thresholds"] = to_json(trace.itip_thresholds);
  j["final_thresholds"] = to_json(trace.final_thresholds);
  j["phases"] = std::move(phases);
  return j;
}

void write_lambda_csv(std::ostream& out, const IdapResult& analysis) {
  out << "index,phi,lambda\n";
  auto old = out.precision(17);
  for (std::size_t i = 0; i < analysis.sorted.size(); ++i) {
    out << i << ',' << analysis.sorted[i] << ',';
    if (i < analysis.ratios.size()) out << analysis.ratios[i];
    out << '\n';
  }
  out.precision(old);
}

}  // namespace fdg::io
