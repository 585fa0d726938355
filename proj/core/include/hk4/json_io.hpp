#pragma once

#include <string>
#include <vector>

#include "hk4/coloring.hpp"
#include "hk4/graph.hpp"
#include "hk4/lattice.hpp"
#include "hk4/oracle.hpp"
#include "hk4/pipeline.hpp"
#include "hk4/reachability.hpp"
#include "hk4/tiler.hpp"

namespace hk4 {

// Shared JSON report schema. Every emitted structure carries a "kind" field
// and enough members to be replayed against its graph by validate_artifact.
std::string connector_json(const WeightedCompleteGraph& g, const Connector& c);
std::string connector_list_json(const WeightedCompleteGraph& g,
                                const std::vector<Connector>& cs, int m);
std::string absorber_json(const WeightedCompleteGraph& g, const Absorber& a,
                          int s);
std::string absorbing_set_json(const WeightedCompleteGraph& g,
                               const AbsorbingSet& set, int s);
std::string tiling_json(const WeightedCompleteGraph& g,
                        const TilingReport& rep);
std::string oracle_json(const WeightedCompleteGraph& g, const OracleResult& r);
std::string degree_json(const WeightedCompleteGraph& g,
                        const DegreeSummary& d);
std::string two_from_three_json(const WeightedCompleteGraph& g,
                                const TwoFromThree& t);
std::string partition_json(const WeightedCompleteGraph& g,
                           const ReachabilityPartition& p);
std::string robust_json(const WeightedCompleteGraph& g,
                        const PartitionContext& ctx,
                        const RobustCertificate& cert, Rat beta);
std::string transferral_json(const WeightedCompleteGraph& g,
                             const PartitionContext& ctx, const Transferral& t,
                             Rat beta);
std::string reduced_json(const WeightedCompleteGraph& g,
                         const ReducedWeights& rw);
std::string quantize_json(const WeightedCompleteGraph& g,
                          const ColorClassView& view);
std::string reduced_degree_json(const WeightedCompleteGraph& g,
                                const ReducedDegreeReport& rep);
std::string pipeline_json(const WeightedCompleteGraph& g,
                          const PipelineReport& rep);

// Replays a JSON artifact against the graph, dispatching on "kind".
// Returns the violations; empty means the artifact validates.
std::vector<std::string> validate_artifact(const WeightedCompleteGraph& g,
                                           const std::string& json_text);

}  // namespace hk4
