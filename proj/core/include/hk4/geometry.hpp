#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hk4/graph.hpp"

namespace hk4 {

// Exact heavy-face inventory of a K4 viewed as a tetrahedron. The lists are
// computed with the strict predicate; the flags are pure functions of them.
struct HeavyProfile {
  std::array<Vertex, 4> vertices;  // ascending
  long long total_num = 0;
  std::vector<std::array<Vertex, 2>> heavy_edges;      // of the 6
  std::vector<std::array<Vertex, 3>> heavy_triangles;  // of the 4
  bool heavy = false;
  bool two_heavy_triangles = false;
  bool two_heavy_edges = false;

  // Membership constraint for the tiler's R collection.
  bool qualifies() const {
    return heavy && two_heavy_triangles && two_heavy_edges;
  }
};

HeavyProfile profile_k4(const WeightedCompleteGraph& g,
                        std::array<Vertex, 4> s);

// Heavy triangle T plus u with w(u,T) > 3t forms a heavy K4 with at least two
// heavy triangles and two heavy edges. Guard failure returns nullopt; a
// non-heavy input triangle is a precondition error.
std::optional<HeavyProfile> extend_triangle(const WeightedCompleteGraph& g,
                                            std::array<Vertex, 3> t,
                                            Vertex u);

// Disjoint heavy edges with crossing weight > 4t form a heavy K4 with the
// same face guarantees. Guard failure returns nullopt.
std::optional<HeavyProfile> merge_heavy_edges(const WeightedCompleteGraph& g,
                                              std::array<Vertex, 2> e1,
                                              std::array<Vertex, 2> e2);

// Evidence for the K_r extension: heavy (r-1)-clique K plus u with
// w(u,K) > (r-1)t yields a heavy r-clique with at least two heavy
// (r-1)-subcliques and two heavy edges. Supported for |K| in {2,3,4}.
struct CliqueExtension {
  std::vector<Vertex> clique;  // ascending, size r
  long long total_num = 0;
  std::vector<std::vector<Vertex>> heavy_subcliques;  // (r-1)-subsets
  std::vector<std::array<Vertex, 2>> heavy_edges;
};
std::optional<CliqueExtension> extend_heavy_clique(
    const WeightedCompleteGraph& g, std::span<const Vertex> k, Vertex u);

// X = { u outside K : w(K,u) > (r-1)t }. Every member extends K to a heavy
// r-clique. meets_quarter_bound reports |X| >= n/4 - |K| (the counting
// proposition's guarantee under the degree condition).
struct ExtensionSet {
  std::vector<Vertex> members;
  bool meets_quarter_bound = false;
};
ExtensionSet heavy_extension_set(const WeightedCompleteGraph& g,
                                 std::span<const Vertex> k);

// { u outside S : w(S,u) > 1 + 3t }. When mu is supplied, reports whether
// |X| >= mu*n - 4.
struct StrongExtensionSet {
  std::vector<Vertex> members;
  std::optional<bool> meets_mu_bound;
};
StrongExtensionSet strong_extension_set(const WeightedCompleteGraph& g,
                                        std::array<Vertex, 4> s,
                                        std::optional<Rat> mu = std::nullopt);

}  // namespace hk4
