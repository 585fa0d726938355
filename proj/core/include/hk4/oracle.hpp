#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hk4/graph.hpp"

namespace hk4 {

struct OracleResult {
  std::string kind;  // "factor" | "maxtile" | "connector"
  bool answer_bool = false;
  int answer_int = 0;
  std::optional<std::vector<std::array<Vertex, 4>>> witness;
  std::optional<std::vector<Vertex>> connector_witness;
  uint64_t visited_states = 0;
};

// Decides existence of a t-heavy K4-factor by subset DP anchored at the
// lowest set bit. Requires 4 | n and n <= cap (hard limit 20).
OracleResult exact_factor_exists(const WeightedCompleteGraph& g, int cap = 18);

// Maximum t-heavy K4-tiling size with witness. Requires n <= cap.
OracleResult exact_max_tiling(const WeightedCompleteGraph& g, int cap = 18);

// Exhaustive (K4,s)-connector decision for the pair (u,v) avoiding W:
// searches S of sizes 3, 7, ..., 4s-1 and checks both factor conditions.
// s <= 2 and n <= cap enforced.
OracleResult exact_connector_exists(const WeightedCompleteGraph& g, Vertex u,
                                    Vertex v, const std::vector<Vertex>& w,
                                    int s, int cap = 18);

// True iff `factor` is a list of disjoint t-heavy 4-sets covering V(G).
// Violations (if any) are appended to `why` when non-null.
bool validate_factor(const WeightedCompleteGraph& g,
                     const std::vector<std::array<Vertex, 4>>& factor,
                     std::vector<std::string>* why = nullptr);

// True iff `tiles` is a list of pairwise-disjoint t-heavy 4-sets (no cover
// requirement).
bool validate_tiling(const WeightedCompleteGraph& g,
                     const std::vector<std::array<Vertex, 4>>& tiles,
                     std::vector<std::string>* why = nullptr);

}  // namespace hk4
