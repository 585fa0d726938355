#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hk4/rational.hpp"

namespace hk4 {

using Vertex = int;

// Edge-weighted complete graph on vertices 0..n-1. Weights are fixed-point
// integers over a per-graph denominator D, so every heaviness predicate is an
// exact integer comparison; no floating point anywhere. The heaviness
// threshold t is part of the graph context and must be representable at D.
class WeightedCompleteGraph {
 public:
  WeightedCompleteGraph(int n, long long denom, long long t_num);

  int size() const { return n_; }
  long long denom() const { return denom_; }
  long long t_num() const { return t_num_; }
  Rat threshold() const { return Rat(t_num_, denom_); }

  // Weight numerator of the edge {u,v}. u == v or out-of-range vertices are
  // errors; the diagonal is undefined on a complete graph.
  long long weight_num(Vertex u, Vertex v) const {
    check_pair(u, v);
    return w_[pair_index(u, v)];
  }
  Rat weight(Vertex u, Vertex v) const { return Rat(weight_num(u, v), denom_); }

  void set_weight_num(Vertex u, Vertex v, long long w);

  size_t edge_count() const { return w_.size(); }
  long long weight_num_at(size_t edge_index) const { return w_[edge_index]; }

  // Upper-triangle index of the pair {u,v}, row-major: (0,1),(0,2),...,(1,2),...
  size_t pair_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return row_off_[u] + (size_t)(v - u - 1);
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_;
  long long denom_;
  long long t_num_;
  std::vector<uint32_t> w_;
  std::vector<size_t> row_off_;
};

struct DegreeSummary {
  std::vector<long long> degree_num;  // d^w(v) numerators over D
  long long min_num = 0;
  Vertex argmin = -1;
};

// d^w(v) = sum of w(uv) over u != v, as an exact numerator over D.
long long weighted_degree_num(const WeightedCompleteGraph& g, Vertex v);
Rat weighted_degree(const WeightedCompleteGraph& g, Vertex v);

// delta^w(G) with argmin; ties break to the lowest vertex index.
DegreeSummary min_weighted_degree(const WeightedCompleteGraph& g);

// Sum of w(uv) over all pairs in S. Throws on duplicates or bad vertices.
long long clique_weight_num(const WeightedCompleteGraph& g,
                            std::span<const Vertex> s);
Rat clique_weight(const WeightedCompleteGraph& g, std::span<const Vertex> s);

// Strict heaviness: clique weight > C(r,2) * t, exactly. |s| must equal r.
bool is_heavy(const WeightedCompleteGraph& g, std::span<const Vertex> s, int r);
bool is_heavy(const WeightedCompleteGraph& g, std::span<const Vertex> s);

// w(A,B) for disjoint vertex sets.
long long crossing_weight_num(const WeightedCompleteGraph& g,
                              std::span<const Vertex> a,
                              std::span<const Vertex> b);
Rat crossing_weight(const WeightedCompleteGraph& g, std::span<const Vertex> a,
                    std::span<const Vertex> b);

// Checks delta^w(G) >= (1/4 + 3t/4 + mu) * n exactly.
bool meets_degree_condition(const WeightedCompleteGraph& g, Rat mu);

// The tightness construction: U = first (r-1)n/r + 1 vertices with internal
// weight t, weight 1 elsewhere. Requires r | n, n > r and t representable
// at denom.
WeightedCompleteGraph make_extremal(int n, int r, Rat t, long long denom);
int extremal_u_size(int n, int r);

// Every edge set to `w` (w and t must be representable at denom).
WeightedCompleteGraph make_constant(int n, long long denom, Rat t, Rat w);

// Seed-reproducible random weights. distribution: "uniform" (numerators drawn
// uniformly from [0, D]).
WeightedCompleteGraph make_random(int n, long long denom, Rat t,
                                  const std::string& distribution,
                                  uint64_t seed);

// Random graph repaired to delta^w >= (1/4 + 3t/4 + mu) * n: weights incident
// to deficient vertices are raised (spread over a seed-shuffled edge order)
// until every vertex meets the bound. mu may be negative (weaker target).
WeightedCompleteGraph make_random_with_min_degree(int n, long long denom,
                                                  Rat t, Rat mu,
                                                  uint64_t seed);

// Text format: line 1 "HWG1 n D t_num", then n(n-1)/2 numerators row-major
// upper triangle. A JSON mirror with the same fields is accepted and emitted
// with json = true.
void save_graph(const WeightedCompleteGraph& g, const std::string& path,
                bool json = false);
WeightedCompleteGraph load_graph(const std::string& path);
WeightedCompleteGraph parse_graph_text(std::istream& in);

struct InducedSubgraph {
  WeightedCompleteGraph graph;
  std::vector<Vertex> to_parent;  // local index -> parent vertex
};
InducedSubgraph induced_subgraph(const WeightedCompleteGraph& g,
                                 std::vector<Vertex> vertices);

}  // namespace hk4
