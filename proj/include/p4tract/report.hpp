#pragma once

// Structured run reports. Reports are byte-reproducible for fixed input,
// flags, seed and tool version; wall-clock time is therefore only emitted
// when explicitly requested.

#include <optional>
#include <string>

#include <json.hpp>

#include "p4tract/instance_io.hpp"
#include "p4tract/obstructions.hpp"
#include "p4tract/solve.hpp"

namespace p4tract {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct RunReport {
  std::string problem;
  std::string input_path;
  std::string input_digest;
  int n = 0;
  int m = 0;
  std::string k_spec;  // the requested budget, or "min"
  bool feasible = false;
  int budget_used = 0;
  std::optional<int> min_k;
  Solution solution;
  SearchStats stats;
  std::optional<double> elapsed_ms;
  std::optional<std::uint64_t> seed;
};

inline nlohmann::ordered_json report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = "p4tract";
  j["version"] = kToolVersion;
  j["problem"] = r.problem;
  j["input"] = {{"path", r.input_path}, {"digest", r.input_digest}, {"n", r.n}, {"m", r.m}};
  j["k"] = r.k_spec;
  if (r.min_k) j["min_k"] = *r.min_k;
  j["feasible"] = r.feasible;
  j["budget_used"] = r.budget_used;
  nlohmann::ordered_json deletions;
  if (!r.solution.edges.empty() || !r.solution.vertices.empty()) {
    if (!r.solution.edges.empty()) {
      auto arr = nlohmann::ordered_json::array();
      for (const Edge& e : r.solution.edges) arr.push_back({e.u, e.v});
      deletions["edges"] = std::move(arr);
    } else {
      deletions["vertices"] = r.solution.vertices;
    }
  } else {
    deletions = nlohmann::ordered_json::object();
  }
  j["deletions"] = std::move(deletions);
  nlohmann::ordered_json hist;
  for (int i = 0; i < kObstructionKindCount; ++i)
    hist[obstruction_name(static_cast<ObstructionKind>(i))] = r.stats.branch_histogram[i];
  j["stats"] = {{"nodes", r.stats.nodes},
                {"leaves", r.stats.leaves},
                {"max_depth", r.stats.max_depth},
                {"subroutine_calls", r.stats.subroutine_calls},
                {"branch_histogram", std::move(hist)}};
  if (r.elapsed_ms)
    j["elapsed_ms"] = *r.elapsed_ms;
  if (r.seed)
    j["seed"] = *r.seed;
  else
    j["seed"] = nullptr;
  return j;
}

}  // namespace p4tract
