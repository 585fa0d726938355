#include "hk4/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "hk4/oracle.hpp"

namespace hk4 {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Lexicographically first heavy K4 containing `b` among allowed vertices.
std::optional<std::array<Vertex, 4>> heavy_k4_through(
    const WeightedCompleteGraph& g, Vertex b, const std::vector<char>& blocked) {
  int n = g.size();
  for (Vertex x = 0; x < n; ++x) {
    if (blocked[x] || x == b) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (blocked[y] || y == b) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (blocked[z] || z == b) continue;
        std::array<Vertex, 4> k4{b, x, y, z};
        if (is_heavy(g, k4)) {
          std::sort(k4.begin(), k4.end());
          return k4;
        }
      }
    }
  }
  return std::nullopt;
}

AbsorbingSet remap_to_parent(const AbsorbingSet& local,
                             const std::vector<Vertex>& to_parent) {
  AbsorbingSet out;
  out.samples_tried = local.samples_tried;
  out.failures = local.failures;
  auto map_v = [&](Vertex v) { return to_parent[v]; };
  for (const Absorber& ab : local.components) {
    Absorber m;
    for (int i = 0; i < 4; ++i) m.target[i] = map_v(ab.target[i]);
    for (int i = 0; i < 4; ++i) m.core[i] = map_v(ab.core[i]);
    for (int i = 0; i < 4; ++i) {
      m.connectors[i].reserve(ab.connectors[i].size());
      for (Vertex v : ab.connectors[i]) m.connectors[i].push_back(map_v(v));
    }
    m.a.reserve(ab.a.size());
    for (Vertex v : ab.a) m.a.push_back(map_v(v));
    std::sort(m.a.begin(), m.a.end());
    auto map_factor = [&](const std::vector<std::array<Vertex, 4>>& f) {
      std::vector<std::array<Vertex, 4>> out_f;
      for (const auto& k4 : f) {
        std::array<Vertex, 4> mm{map_v(k4[0]), map_v(k4[1]), map_v(k4[2]),
                                 map_v(k4[3])};
        std::sort(mm.begin(), mm.end());
        out_f.push_back(mm);
      }
      return out_f;
    };
    m.factor_a = map_factor(ab.factor_a);
    m.factor_a_plus = map_factor(ab.factor_a_plus);
    std::sort(m.target.begin(), m.target.end());
    out.components.push_back(std::move(m));
  }
  for (Vertex v : local.a) out.a.push_back(map_v(v));
  std::sort(out.a.begin(), out.a.end());
  return out;
}

}  // namespace

PipelineReport run_pipeline(const WeightedCompleteGraph& g, Rat mu, Rat gamma,
                            Rat xi, Rat beta, uint64_t seed) {
  if (g.size() % 4 != 0)
    throw std::invalid_argument("run_pipeline: n must be divisible by 4");
  PipelineReport rep;
  rep.n = g.size();
  rep.mu = mu;
  rep.gamma = gamma;
  rep.xi = xi;
  rep.beta = beta;
  rep.seed = seed;

  ReachParams params;
  params.m = (int)(beta * Rat::of(g.size())).ceil_scaled(1);
  params.s = 1;
  PartitionOptions opts;
  opts.seed = seed;

  // Phase 1a: reachability structure (partition / merge / small B).
  auto t0 = std::chrono::steady_clock::now();
  ReachabilityPartition driver = main_lemma_driver(g, gamma, beta, params, opts);
  rep.driver_branch = driver.branch;
  rep.phases.push_back({"reachability-driver", true,
                        "branch=" + driver.branch +
                            " |B|=" + std::to_string(driver.b.size()),
                        ms_since(t0)});

  // Phase 1b: absorbing set inside U = V \ B.
  t0 = std::chrono::steady_clock::now();
  std::vector<char> in_b(g.size(), 0);
  for (Vertex v : driver.b) in_b[v] = 1;
  std::vector<Vertex> u_vertices;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!in_b[v]) u_vertices.push_back(v);

  AbsorbingSet set;
  bool have_set = false;
  {
    auto sub = induced_subgraph(g, u_vertices);
    // Budget is gamma*n of the full graph.
    Rat gamma_local = gamma * Rat::of(g.size()) / Rat::of((int)u_vertices.size());
    auto res = build_absorbing_set(sub.graph, gamma_local, xi, params, seed);
    if (res.ok()) {
      set = remap_to_parent(*res, sub.to_parent);
      have_set = true;
      rep.phases.push_back(
          {"absorbing-set", true,
           std::to_string(set.components.size()) + " components, |A|=" +
               std::to_string(set.a.size()),
           ms_since(t0)});
    } else {
      rep.phases.push_back({"absorbing-set", false, res.error, ms_since(t0)});
    }
  }

  // Phase 1c: cover B by disjoint heavy K4s avoiding A.
  t0 = std::chrono::steady_clock::now();
  std::vector<std::array<Vertex, 4>> b_cover;
  bool b_cover_ok = true;
  {
    std::vector<char> blocked(g.size(), 0);
    for (Vertex v : set.a) blocked[v] = 1;
    for (Vertex v : driver.b) blocked[v] = 1;
    for (Vertex b : driver.b) {
      auto k4 = heavy_k4_through(g, b, blocked);
      if (!k4) {
        b_cover_ok = false;
        rep.phases.push_back({"b-cover", false,
                              "no heavy K4 through vertex " + std::to_string(b),
                              ms_since(t0)});
        break;
      }
      b_cover.push_back(*k4);
      for (Vertex v : *k4) blocked[v] = 1;
    }
    if (b_cover_ok)
      rep.phases.push_back({"b-cover", true,
                            std::to_string(b_cover.size()) + " cliques",
                            ms_since(t0)});
  }

  // Phase 2: almost-cover the rest.
  t0 = std::chrono::steady_clock::now();
  std::vector<char> reserved(g.size(), 0);
  for (Vertex v : set.a) reserved[v] = 1;
  for (const auto& k4 : b_cover)
    for (Vertex v : k4) reserved[v] = 1;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!reserved[v]) rest.push_back(v);

  std::vector<std::array<Vertex, 4>> tiling;
  std::vector<Vertex> leftover;
  {
    auto sub = induced_subgraph(g, rest);
    TilingReport tile = almost_cover(sub.graph, mu);
    for (const auto& k4 : tile.state.r) {
      std::array<Vertex, 4> m{sub.to_parent[k4[0]], sub.to_parent[k4[1]],
                              sub.to_parent[k4[2]], sub.to_parent[k4[3]]};
      std::sort(m.begin(), m.end());
      tiling.push_back(m);
    }
    for (Vertex v : tile.uncovered) leftover.push_back(sub.to_parent[v]);
    std::sort(leftover.begin(), leftover.end());
  }
  rep.tiling_size = (int)tiling.size();
  rep.leftover_size = (int)leftover.size();
  rep.absorbing_size = (int)(set.a.size() + 4 * b_cover.size());
  rep.phases.push_back({"almost-cover", true,
                        "|R|=" + std::to_string(tiling.size()) +
                            " leftover=" + std::to_string(leftover.size()),
                        ms_since(t0)});

  // Phase 3: absorb the leftover. The absorbing property is only promised for
  // leftovers of size at most xi*n.
  t0 = std::chrono::steady_clock::now();
  if (Rat::of((long long)leftover.size()) > xi * Rat::of(g.size())) {
    rep.phases.push_back({"absorb", false,
                          "leftover " + std::to_string(leftover.size()) +
                              " exceeds xi*n; absorption not attempted",
                          ms_since(t0)});
    return rep;
  }
  auto absorbed = absorb_leftover(g, set, leftover);
  if (!absorbed.ok()) {
    rep.phases.push_back({"absorb", false, absorbed.error, ms_since(t0)});
    return rep;
  }
  std::vector<std::array<Vertex, 4>> factor = tiling;
  factor.insert(factor.end(), b_cover.begin(), b_cover.end());
  factor.insert(factor.end(), absorbed->begin(), absorbed->end());
  std::vector<std::string> why;
  if (!b_cover_ok || !validate_factor(g, factor, &why)) {
    rep.phases.push_back(
        {"absorb", false,
         why.empty() ? std::string("factor incomplete") : why[0],
         ms_since(t0)});
    return rep;
  }
  rep.factor_achieved = true;
  rep.factor = std::move(factor);
  rep.phases.push_back({"absorb", true, "factor validated", ms_since(t0)});
  return rep;
}

std::vector<ScanRow> threshold_scan(int n, Rat t,
                                    const std::vector<Rat>& mu_grid,
                                    const std::vector<uint64_t>& seeds,
                                    const std::string& family,
                                    const std::string& mode, long long denom,
                                    int jobs) {
  if (family != "random-mindeg" && family != "extremal" && family != "allones")
    throw std::invalid_argument("threshold_scan: unknown family " + family);
  if (mode != "auto" && mode != "exact" && mode != "pipeline")
    throw std::invalid_argument("threshold_scan: unknown mode " + mode);

  std::vector<ScanRow> rows(mu_grid.size() * seeds.size());
  auto run_row = [&](size_t idx) {
    const Rat& mu = mu_grid[idx / seeds.size()];
    uint64_t seed = seeds[idx % seeds.size()];
    ScanRow& row = rows[idx];
    row.n = n;
    row.t = t;
    row.mu = mu;
    row.seed = seed;
    auto t0 = std::chrono::steady_clock::now();

    WeightedCompleteGraph g = [&]() {
      if (family == "extremal") return make_extremal(n, 4, t, denom);
      if (family == "allones") return make_constant(n, denom, t, Rat::of(1));
      return make_random_with_min_degree(n, denom, t, mu, seed);
    }();

    bool exact = mode == "exact" ||
                 (mode == "auto" && n % 4 == 0 && n <= 18);
    if (exact) {
      row.mode = "exact";
      OracleResult fac = exact_factor_exists(g);
      row.success = fac.answer_bool;
      OracleResult max = exact_max_tiling(g);
      row.uncovered = n - 4 * max.answer_int;
    } else {
      row.mode = "pipeline";
      Rat mu_eff = mu.num() > 0 ? mu : Rat(1, 10);
      PipelineReport rep =
          run_pipeline(g, mu_eff, Rat(15, 100), Rat(1, 100), Rat(1, 100), seed);
      row.success = rep.factor_achieved;
      row.uncovered = rep.factor_achieved ? 0 : rep.leftover_size;
    }
    row.wall_ms = ms_since(t0);
  };

  if (jobs <= 1) {
    for (size_t i = 0; i < rows.size(); ++i) run_row(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= rows.size()) return;
          run_row(i);
        }
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "n,t,mu,seed,mode,success,uncovered,wall_ms\n";
  for (const auto& r : rows) {
    out << r.n << "," << r.t.str() << "," << r.mu.str() << "," << r.seed << ","
        << r.mode << "," << (r.success ? 1 : 0) << "," << r.uncovered << ","
        << (long long)r.wall_ms << "\n";
  }
  return out.str();
}

}  // namespace hk4
