#pragma once

#include <vector>

#include "hk4/graph.hpp"

namespace hk4 {

// Quantization c(w,p): color l in [1,p-1] iff w in [(l-1)/p, l/p), color p
// iff w in [(p-1)/p, 1]. p must divide D so interval endpoints are exact.
struct ColorClassView {
  int p = 0;
  std::vector<uint16_t> colors;  // per edge, graph pair indexing

  int edge_color(const WeightedCompleteGraph& g, Vertex u, Vertex v) const {
    return colors[g.pair_index(u, v)];
  }
};

ColorClassView quantize(const WeightedCompleteGraph& g, int p);

// Partition file: one line per part, vertex indices whitespace-separated.
// Parts must be disjoint and in range; they need not cover V(G) (reduced
// graphs ignore an exceptional set).
std::vector<std::vector<Vertex>> load_parts_file(const std::string& path,
                                                 int n);

// Cross densities per color and the reduced weights
// w_R = sum_l (l-1)/p * d_l for a user-supplied partition. w_r_upper is the
// optional upper surrogate sum_l l/p * d_l.
struct ReducedWeights {
  int p = 0;
  std::vector<std::vector<Vertex>> parts;
  struct PairData {
    int i = 0, j = 0;
    std::vector<long long> color_counts;  // index l-1
    Rat w_r;
    Rat w_r_upper;
  };
  std::vector<PairData> pairs;  // i < j, lexicographic

  const PairData& pair(int i, int j) const;
};

ReducedWeights reduced_weights(const WeightedCompleteGraph& g,
                               const ColorClassView& view,
                               const std::vector<std::vector<Vertex>>& parts);

// delta^w of the reduced graph against the inherited-degree lower bound
// (c + mu - sum d_l - 2p*eps - 1/p) * k. Purely informational: the bound's
// hypothesis (a regular partition of a pruned subgraph) is not certified.
struct ReducedDegreeReport {
  Rat min_reduced_degree;
  int argmin_part = -1;
  Rat lemma_bound;
  bool meets_bound = false;
  bool hypothesis_verified = false;  // this tool never certifies it
};

ReducedDegreeReport reduced_degree_report(const WeightedCompleteGraph& g,
                                          const ColorClassView& view,
                                          const std::vector<std::vector<Vertex>>& parts,
                                          Rat c, Rat mu,
                                          const std::vector<Rat>& d_vec,
                                          Rat eps);

}  // namespace hk4
