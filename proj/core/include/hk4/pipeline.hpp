#pragma once

#include <array>
#include <string>
#include <vector>

#include "hk4/graph.hpp"
#include "hk4/reachability.hpp"
#include "hk4/tiler.hpp"

namespace hk4 {

struct PipelinePhase {
  std::string name;
  bool ok = false;
  std::string detail;
  double wall_ms = 0;
};

// Outcome of the three-phase composition: absorbing-set construction,
// almost-cover of the rest, absorption of the leftover. A claimed factor is
// always validated before it is reported.
struct PipelineReport {
  int n = 0;
  Rat mu, gamma, xi, beta;
  uint64_t seed = 0;
  std::vector<PipelinePhase> phases;
  bool factor_achieved = false;
  std::vector<std::array<Vertex, 4>> factor;
  int absorbing_size = 0;   // |A| + |F| (B-cover cliques)
  int tiling_size = 0;      // |R| from the almost-cover phase
  int leftover_size = 0;    // uncovered after phase 2
  std::string driver_branch;
};

PipelineReport run_pipeline(const WeightedCompleteGraph& g, Rat mu, Rat gamma,
                            Rat xi, Rat beta, uint64_t seed);

struct ScanRow {
  int n = 0;
  Rat t, mu;
  uint64_t seed = 0;
  std::string mode;  // "exact" | "pipeline"
  bool success = false;
  int uncovered = 0;
  double wall_ms = 0;
};

// Success-rate mapping around the conjectured threshold. family:
// "random-mindeg" | "extremal" | "allones". mode "auto" picks exact when
// 4 | n and n is within the oracle cap.
std::vector<ScanRow> threshold_scan(int n, Rat t, const std::vector<Rat>& mu_grid,
                                    const std::vector<uint64_t>& seeds,
                                    const std::string& family,
                                    const std::string& mode, long long denom,
                                    int jobs = 1);

std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace hk4
