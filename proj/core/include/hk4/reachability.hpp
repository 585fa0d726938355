#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hk4/graph.hpp"

namespace hk4 {

// Constructive procedures can fail at a named step (empty candidate set,
// disjointness exhaustion). That is a domain outcome, not an exception.
template <typename T>
struct Result {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }

  static Result success(T v) { return {std::move(v), {}}; }
  static Result failure(std::string why) { return {std::nullopt, std::move(why)}; }
};

struct ReachParams {
  int m = 0;  // forbidden-set budget: certificates beat any |W| <= m
  int s = 1;  // connector scale: |S| <= 4s-1
};

// Certificate that (u,v) are reachable through S: both G[S+{u}] and G[S+{v}]
// carry explicit heavy-K4 factors.
struct Connector {
  Vertex u = -1, v = -1;
  std::vector<Vertex> s;
  std::vector<std::array<Vertex, 4>> factor_u;  // partitions S + {u}
  std::vector<std::array<Vertex, 4>> factor_v;  // partitions S + {v}
  int scale = 1;                                // |S| <= 4*scale - 1
};

std::vector<std::string> validate_connector(const WeightedCompleteGraph& g,
                                            const Connector& c);

// Exhaustive s=1 search: lexicographically first 3-set S avoiding W with both
// S+{u} and S+{v} heavy.
std::optional<Connector> find_connector_s1(const WeightedCompleteGraph& g,
                                           Vertex u, Vertex v,
                                           const std::vector<Vertex>& w);

// The constructive two-from-three procedure: argmax attachment vertex v4,
// strong-extension vertices v5 and v6, returning a 1-scale connector for two
// of the three input vertices. Fails with the first empty step named.
struct TwoFromThree {
  std::array<Vertex, 2> pair;
  Connector connector;
  Vertex v4 = -1, v5 = -1, v6 = -1;
};
Result<TwoFromThree> two_from_three(const WeightedCompleteGraph& g, Vertex v1,
                                    Vertex v2, Vertex v3,
                                    const std::vector<Vertex>& w,
                                    std::optional<Rat> mu = std::nullopt);

// m+1 pairwise vertex-disjoint connectors certify (K4,m,s)-reachability:
// any W with |W| <= m misses at least one of them. nullopt = inconclusive.
std::optional<std::vector<Connector>> certify_reachable(
    const WeightedCompleteGraph& g, Vertex u, Vertex v,
    const ReachParams& params);

// Composes a (u,x)-connector and a disjoint (x,w)-connector into a
// (u,w)-connector of size <= 8s-1 through the common endpoint x.
Result<Connector> compose_connectors(const WeightedCompleteGraph& g, Vertex u,
                                     Vertex w, Vertex x,
                                     const ReachParams& params,
                                     const std::vector<Vertex>& forbidden = {});

// A_S = heavy K4 T plus one connector per (T_i, S_i) pair; both factors are
// assembled per the construction and validated. |A_S| <= 16s.
struct Absorber {
  std::array<Vertex, 4> target;
  std::vector<Vertex> a;
  std::array<Vertex, 4> core;                    // T
  std::array<std::vector<Vertex>, 4> connectors; // S_i for (core[i], target[i])
  std::vector<std::array<Vertex, 4>> factor_a;       // factors G[A]
  std::vector<std::array<Vertex, 4>> factor_a_plus;  // factors G[A + target]
};
std::vector<std::string> validate_absorber(const WeightedCompleteGraph& g,
                                           const Absorber& a, int s);
Result<Absorber> build_absorber(const WeightedCompleteGraph& g,
                                std::array<Vertex, 4> target,
                                const ReachParams& params,
                                const std::vector<Vertex>& forbidden = {});

// Disjoint union of absorbers built for sampled 4-sets, with the slot
// structure kept so leftovers are matched on demand: group vertex y fits
// slot i of a component iff swapping y into the slot's K4 keeps it heavy.
struct AbsorbingSet {
  std::vector<Absorber> components;
  std::vector<Vertex> a;  // union, ascending
  uint64_t samples_tried = 0;
  uint64_t failures = 0;
};
Result<AbsorbingSet> build_absorbing_set(const WeightedCompleteGraph& g,
                                         Rat gamma, Rat xi,
                                         const ReachParams& params,
                                         uint64_t seed);

// Factors G[A + r] by assigning each 4-group of r to an unused component;
// unused components contribute their own factors.
Result<std::vector<std::array<Vertex, 4>>> absorb_leftover(
    const WeightedCompleteGraph& g, const AbsorbingSet& set,
    std::vector<Vertex> r);

// Spot-verification of the absorbing property on random leftover sets.
struct AbsorbSpotCheck {
  int trials = 0;
  int successes = 0;
};
AbsorbSpotCheck spot_verify_absorbing_set(const WeightedCompleteGraph& g,
                                          const AbsorbingSet& set, Rat xi,
                                          int trials, uint64_t seed);

struct PartitionOptions {
  int sample_pairs = 64;        // pairs probed for a non-reachable witness
  int reassign_samples = 8;     // per-side probes when reassigning U0
  int reassign_threshold = 1;   // certificates required to join a side
  int nhood_samples = 32;       // per-vertex partners in the driver estimate
  uint64_t seed = 1;
};

// Verdict of the reachability partition / main-lemma driver. branch records
// which path produced it.
struct ReachabilityPartition {
  enum class Verdict { Closed, Partitioned } verdict = Verdict::Closed;
  std::vector<Vertex> v1, v2;
  std::array<Vertex, 2> witness_pair{-1, -1};
  std::vector<Vertex> unresolved;  // parked in the smaller side, flagged
  bool size_check_ok = true;       // |Vi| >= gamma*n/2
  std::vector<Vertex> b;           // small-neighborhood leftover (driver)
  std::string branch;  // "closed" | "partitioned" | "merged" | "small-neighborhood"
  int closure_scale = 0;
  int inner_check_trials = 0;
  int inner_check_successes = 0;
};

ReachabilityPartition reachability_partition(const WeightedCompleteGraph& g,
                                             const ReachParams& params,
                                             Rat gamma,
                                             const PartitionOptions& opts = {});

ReachabilityPartition main_lemma_driver(const WeightedCompleteGraph& g,
                                        Rat gamma, Rat beta,
                                        const ReachParams& params,
                                        const PartitionOptions& opts = {});

}  // namespace hk4
