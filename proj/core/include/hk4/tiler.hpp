#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hk4/geometry.hpp"
#include "hk4/graph.hpp"

namespace hk4 {

// The (R, T, M, I, rho) tuple the almost-cover search maximizes
// lexicographically: qualifying heavy K4s, heavy triangles, a heavy-edge
// matching, the leftover set, and the total R-weight on the 1/D grid.
struct TilingState {
  std::vector<std::array<Vertex, 4>> r;  // each member qualifies (profile)
  std::vector<std::array<Vertex, 3>> t;
  std::vector<std::array<Vertex, 2>> m;
  std::vector<Vertex> i;  // ascending
  long long rho_num = 0;

  std::tuple<size_t, size_t, size_t, long long> objective() const {
    return {r.size(), t.size(), m.size(), rho_num};
  }
};

enum class MoveKind {
  PromoteTrianglePlusVertex,
  PromoteTwoEdges,
  Claim1Swap,
  Claim2Swap,
  Claim3Swap,
  RepackT,
  RepackM,
  RhoImprove,
};

const char* move_kind_name(MoveKind k);

// An exchange against the current state. Applying a move to a valid state
// yields a valid state with a strictly larger objective; vertices of removed
// members that no added member consumes fall back to I.
struct Move {
  MoveKind kind;
  std::vector<std::array<Vertex, 4>> remove_r, add_r;
  std::vector<std::array<Vertex, 3>> remove_t, add_t;
  std::vector<std::array<Vertex, 2>> remove_m, add_m;
  std::vector<Vertex> touched() const;
};

struct MoveLogEntry {
  MoveKind kind;
  std::vector<Vertex> touched;
};

struct TilingReport {
  TilingState state;
  std::vector<MoveLogEntry> move_log;
  std::vector<Vertex> uncovered;  // V \ V(R)
  Rat mu;
  bool degree_condition_holds = false;
  bool t_bound_ok = false;         // |T| <= 3
  bool m_bound_ok = false;         // |M| <= ceil(1/mu)
  bool i_bound_ok = false;         // |I| <= ceil(1/mu)
  bool uncovered_within_lemma = false;   // <= 9 + 3/mu
  bool uncovered_within_applied = false; // <= 9 + 6/mu
};

// Greedy construction: qualifying K4s first (heavy triangle + extension probe,
// then merged heavy-edge pairs), then heavy triangles, then a heavy matching.
// Deterministic, lowest-index tie-breaks throughout.
TilingState greedy_init(const WeightedCompleteGraph& g);

// First applicable move in the fixed priority order (promotions, claim
// exchanges, repacks, rho improvement). Returns nullopt at a local maximum.
std::optional<Move> find_move(const WeightedCompleteGraph& g,
                              const TilingState& state);

// Applies and revalidates: added members are rechecked, the objective must
// strictly increase.
void apply_move(const WeightedCompleteGraph& g, TilingState& state,
                const Move& move);

// greedy_init + move loop until locally maximal; reports sizes against the
// bounds for the supplied mu.
TilingReport almost_cover(const WeightedCompleteGraph& g, Rat mu);

// Recomputes every state invariant exactly; empty result iff valid.
std::vector<std::string> validate_state(const WeightedCompleteGraph& g,
                                        const TilingState& state);

}  // namespace hk4
