#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hk4/graph.hpp"
#include "hk4/reachability.hpp"

namespace hk4 {

// Ordered vertex partition, at most 8 parts.
struct PartitionContext {
  std::vector<std::vector<Vertex>> parts;

  // Throws unless parts are disjoint, in range and cover V(G).
  void validate(int n) const;
  int part_of(Vertex v) const;  // -1 if absent

  static PartitionContext load(const std::string& path, int n);
};

using IndexVector = std::vector<int>;

// Per-part intersection counts of S; coordinates sum to |S|.
IndexVector index_vector(const PartitionContext& p, std::span<const Vertex> s);

// ceil(beta*n) + 1 pairwise disjoint heavy K4s all realizing `index`; any W
// with |W| <= beta*n misses at least one, so the vector is robust.
struct RobustCertificate {
  IndexVector index;
  std::vector<std::array<Vertex, 4>> members;
};

std::vector<std::string> validate_robust_certificate(
    const WeightedCompleteGraph& g, const PartitionContext& p,
    const RobustCertificate& cert);

// Greedy part-constrained packing in lexicographic order. nullopt means
// inconclusive (packing not found within the candidate budget).
std::optional<RobustCertificate> certify_robust(
    const WeightedCompleteGraph& g, const PartitionContext& p,
    const IndexVector& index, Rat beta, uint64_t candidate_budget = 50000000);

// First pair of robust 4-vectors differing by a unit transferral u_i - u_j.
// For two parts the scan order is (4,0)/(3,1), (3,1)/(2,2), (2,2)/(1,3),
// (1,3)/(0,4).
struct Transferral {
  int i = 0, j = 0;  // s - t = u_i - u_j (0-indexed parts)
  RobustCertificate cert_s, cert_t;
};
std::optional<Transferral> find_transferral(const WeightedCompleteGraph& g,
                                            const PartitionContext& p,
                                            Rat beta);

// The merge construction: disjoint realizations S and T from the two
// certificates, pairwise connectors between leftover vertices matched part by
// part, plus connectors (x,x') and (y,y'). The result certifies (x,y) with
// |S_hat| <= 32s-1 and is validated before return.
Result<Connector> merge_parts(const WeightedCompleteGraph& g,
                              const PartitionContext& p, int i, int j,
                              const RobustCertificate& cert_s,
                              const RobustCertificate& cert_t, Vertex x,
                              Vertex y, const ReachParams& params);

}  // namespace hk4
