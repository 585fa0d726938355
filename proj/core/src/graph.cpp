#include "hk4/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace hk4 {

WeightedCompleteGraph::WeightedCompleteGraph(int n, long long denom,
                                             long long t_num)
    : n_(n), denom_(denom), t_num_(t_num) {
  if (n < 1) throw std::invalid_argument("graph: n must be >= 1");
  if (n > 20000) throw std::invalid_argument("graph: n capped at 20000");
  if (denom < 1) throw std::invalid_argument("graph: denominator must be >= 1");
  if (denom > UINT32_MAX)
    throw std::invalid_argument("graph: denominator exceeds storage width");
  if (t_num < 0 || t_num > denom)
    throw std::invalid_argument("graph: t must lie in [0,1]");
  w_.assign((size_t)n * (n - 1) / 2, 0);
  row_off_.resize(n);
  size_t off = 0;
  for (int u = 0; u < n; ++u) {
    row_off_[u] = off;
    off += (size_t)(n - u - 1);
  }
}

void WeightedCompleteGraph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("graph: vertex out of range");
  if (u == v) throw std::invalid_argument("graph: weight(v,v) is undefined");
}

void WeightedCompleteGraph::set_weight_num(Vertex u, Vertex v, long long w) {
  check_pair(u, v);
  if (w < 0 || w > denom_)
    throw std::invalid_argument("graph: weight numerator outside [0, D]");
  w_[pair_index(u, v)] = (uint32_t)w;
}

long long weighted_degree_num(const WeightedCompleteGraph& g, Vertex v) {
  if (v < 0 || v >= g.size())
    throw std::out_of_range("weighted_degree: vertex out of range");
  long long sum = 0;
  for (Vertex u = 0; u < g.size(); ++u)
    if (u != v) sum += g.weight_num(u, v);
  return sum;
}

Rat weighted_degree(const WeightedCompleteGraph& g, Vertex v) {
  return Rat(weighted_degree_num(g, v), g.denom());
}

DegreeSummary min_weighted_degree(const WeightedCompleteGraph& g) {
  DegreeSummary out;
  out.degree_num.assign(g.size(), 0);
  for (Vertex v = 0; v < g.size(); ++v)
    out.degree_num[v] = weighted_degree_num(g, v);
  out.argmin = 0;
  out.min_num = out.degree_num[0];
  for (Vertex v = 1; v < g.size(); ++v) {
    if (out.degree_num[v] < out.min_num) {
      out.min_num = out.degree_num[v];
      out.argmin = v;
    }
  }
  return out;
}

long long clique_weight_num(const WeightedCompleteGraph& g,
                            std::span<const Vertex> s) {
  if (s.size() < 2)
    throw std::invalid_argument("clique_weight: need at least 2 vertices");
  long long sum = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j])
        throw std::invalid_argument("clique_weight: duplicate vertex");
      sum += g.weight_num(s[i], s[j]);
    }
  }
  return sum;
}

Rat clique_weight(const WeightedCompleteGraph& g, std::span<const Vertex> s) {
  return Rat(clique_weight_num(g, s), g.denom());
}

bool is_heavy(const WeightedCompleteGraph& g, std::span<const Vertex> s,
              int r) {
  if ((int)s.size() != r)
    throw std::invalid_argument("is_heavy: |S| must equal r");
  if (r < 2) throw std::invalid_argument("is_heavy: r must be >= 2");
  long long pairs = (long long)r * (r - 1) / 2;
  return clique_weight_num(g, s) > pairs * g.t_num();
}

bool is_heavy(const WeightedCompleteGraph& g, std::span<const Vertex> s) {
  return is_heavy(g, s, (int)s.size());
}

long long crossing_weight_num(const WeightedCompleteGraph& g,
                              std::span<const Vertex> a,
                              std::span<const Vertex> b) {
  for (Vertex x : a)
    for (Vertex y : b)
      if (x == y)
        throw std::invalid_argument("crossing_weight: sets overlap");
  long long sum = 0;
  for (Vertex x : a)
    for (Vertex y : b) sum += g.weight_num(x, y);
  return sum;
}

Rat crossing_weight(const WeightedCompleteGraph& g, std::span<const Vertex> a,
                    std::span<const Vertex> b) {
  return Rat(crossing_weight_num(g, a, b), g.denom());
}

bool meets_degree_condition(const WeightedCompleteGraph& g, Rat mu) {
  Rat t = g.threshold();
  Rat bound = (Rat(1, 4) + Rat(3, 4) * t + mu) * Rat::of(g.size());
  DegreeSummary d = min_weighted_degree(g);
  return Rat(d.min_num, g.denom()) >= bound;
}

int extremal_u_size(int n, int r) { return (r - 1) * n / r + 1; }

static long long require_representable(Rat t, long long denom,
                                       const char* what) {
  Rat scaled = t * Rat::of(denom);
  if (scaled.den() != 1)
    throw std::invalid_argument(std::string(what) +
                                ": t not representable at denominator D");
  return scaled.num();
}

WeightedCompleteGraph make_extremal(int n, int r, Rat t, long long denom) {
  if (r < 2) throw std::invalid_argument("make_extremal: r must be >= 2");
  if (n % r != 0)
    throw std::invalid_argument("make_extremal: r must divide n");
  if (n <= r) throw std::invalid_argument("make_extremal: n must exceed r");
  long long t_num = require_representable(t, denom, "make_extremal");
  WeightedCompleteGraph g(n, denom, t_num);
  int u_size = extremal_u_size(n, r);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool both_in_u = u < u_size && v < u_size;
      g.set_weight_num(u, v, both_in_u ? t_num : denom);
    }
  }
  return g;
}

WeightedCompleteGraph make_constant(int n, long long denom, Rat t, Rat w) {
  long long t_num = require_representable(t, denom, "make_constant");
  long long w_num = require_representable(w, denom, "make_constant");
  WeightedCompleteGraph g(n, denom, t_num);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_weight_num(u, v, w_num);
  return g;
}

// Deterministic across platforms: mt19937_64 output reduced by modulo. The
// modulo bias at our bounds (<= 2^32) is immaterial for test instances.
static long long draw_below(std::mt19937_64& rng, long long bound_inclusive) {
  return (long long)(rng() % (uint64_t)(bound_inclusive + 1));
}

WeightedCompleteGraph make_random(int n, long long denom, Rat t,
                                  const std::string& distribution,
                                  uint64_t seed) {
  if (distribution != "uniform")
    throw std::invalid_argument("make_random: unknown distribution '" +
                                distribution + "'");
  long long t_num = require_representable(t, denom, "make_random");
  WeightedCompleteGraph g(n, denom, t_num);
  std::mt19937_64 rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.set_weight_num(u, v, draw_below(rng, denom));
  return g;
}

WeightedCompleteGraph make_random_with_min_degree(int n, long long denom,
                                                  Rat t, Rat mu,
                                                  uint64_t seed) {
  Rat bound = (Rat(1, 4) + Rat(3, 4) * t + mu) * Rat::of(n);
  if (bound > Rat::of(n - 1))
    throw std::invalid_argument(
        "make_random_with_min_degree: required degree exceeds n-1");
  WeightedCompleteGraph g = make_random(n, denom, t, "uniform", seed);
  // Smallest degree numerator satisfying d/D >= bound.
  long long need = bound.ceil_scaled(denom);
  if (need < 0) need = 0;

  std::vector<long long> deg(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = weighted_degree_num(g, v);

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;

  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] >= need) continue;
    // Spread the deficit roughly evenly over raisable edges, in a seeded
    // shuffled order so repairs do not pile onto low-index vertices.
    std::vector<Vertex> targets;
    targets.reserve(n - 1);
    for (Vertex u = 0; u < n; ++u)
      if (u != v && g.weight_num(u, v) < denom) targets.push_back(u);
    for (size_t i = targets.size(); i > 1; --i)
      std::swap(targets[i - 1], targets[rng() % i]);
    long long deficit = deg[v] >= need ? 0 : need - deg[v];
    size_t left = targets.size();
    auto raise_edge = [&](Vertex u, long long amount) {
      g.set_weight_num(u, v, g.weight_num(u, v) + amount);
      deg[v] += amount;
      deg[u] += amount;
      deficit -= amount;
    };
    // Spread pass, then a top-off pass for capacity-poor targets. Capacity
    // always suffices: (n-1)D - deg[v] >= need - deg[v] by the feasibility
    // check above.
    for (Vertex u : targets) {
      if (deficit <= 0) break;
      long long cap = denom - g.weight_num(u, v);
      long long share = (deficit + (long long)left - 1) / (long long)left;
      raise_edge(u, std::min(cap, share));
      --left;
    }
    for (Vertex u : targets) {
      if (deficit <= 0) break;
      long long cap = denom - g.weight_num(u, v);
      raise_edge(u, std::min(cap, deficit));
    }
    if (deficit > 0)
      throw std::runtime_error(
          "make_random_with_min_degree: repair could not reach the bound");
  }
  return g;
}

void save_graph(const WeightedCompleteGraph& g, const std::string& path,
                bool json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_graph: cannot open " + path);
  if (json) {
    nlohmann::json j;
    j["format"] = "HWG1";
    j["n"] = g.size();
    j["D"] = g.denom();
    j["t_num"] = g.t_num();
    std::vector<long long> ws(g.edge_count());
    for (size_t i = 0; i < g.edge_count(); ++i) ws[i] = g.weight_num_at(i);
    j["weights"] = ws;
    out << j.dump(2) << "\n";
    return;
  }
  out << "HWG1 " << g.size() << " " << g.denom() << " " << g.t_num() << "\n";
  size_t i = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      out << g.weight_num(u, v);
      out << (++i % 16 == 0 ? '\n' : ' ');
    }
  }
  out << "\n";
}

static WeightedCompleteGraph graph_from_fields(long long n, long long denom,
                                               long long t_num,
                                               const std::vector<long long>& ws) {
  if (n < 1 || n > 20000) throw std::runtime_error("graph file: bad n");
  WeightedCompleteGraph g((int)n, denom, t_num);
  size_t expect = (size_t)n * (n - 1) / 2;
  if (ws.size() != expect)
    throw std::runtime_error("graph file: wrong edge count, expected " +
                             std::to_string(expect) + " got " +
                             std::to_string(ws.size()));
  size_t i = 0;
  for (Vertex u = 0; u < (int)n; ++u) {
    for (Vertex v = u + 1; v < (int)n; ++v, ++i) {
      if (ws[i] < 0 || ws[i] > denom)
        throw std::runtime_error("graph file: weight entry " +
                                 std::to_string(i) + " outside [0, D]");
      g.set_weight_num(u, v, ws[i]);
    }
  }
  return g;
}

WeightedCompleteGraph parse_graph_text(std::istream& in) {
  std::string magic;
  long long n = 0, denom = 0, t_num = 0;
  if (!(in >> magic >> n >> denom >> t_num) || magic != "HWG1")
    throw std::runtime_error("graph file: malformed header (expected 'HWG1 n D t_num')");
  if (t_num < 0 || t_num > denom)
    throw std::runtime_error("graph file: t_num outside [0, D]");
  size_t expect = (size_t)n * (n - 1) / 2;
  std::vector<long long> ws;
  ws.reserve(expect);
  long long w;
  while (ws.size() < expect && (in >> w)) ws.push_back(w);
  if (ws.size() < expect)
    throw std::runtime_error("graph file: truncated, missing weight entry " +
                             std::to_string(ws.size()) + " of " +
                             std::to_string(expect));
  if (in >> w)
    throw std::runtime_error("graph file: wrong edge count, trailing data");
  return graph_from_fields(n, denom, t_num, ws);
}

WeightedCompleteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_graph: cannot open " + path);
  // Sniff: JSON mirror starts with '{'.
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(std::string("graph file: bad JSON: ") + e.what());
    }
    if (!j.contains("format") || j["format"] != "HWG1")
      throw std::runtime_error("graph file: malformed header (JSON 'format' must be HWG1)");
    long long n = j.at("n").get<long long>();
    long long denom = j.at("D").get<long long>();
    long long t_num = j.at("t_num").get<long long>();
    if (t_num < 0 || t_num > denom)
      throw std::runtime_error("graph file: t_num outside [0, D]");
    std::vector<long long> ws = j.at("weights").get<std::vector<long long>>();
    return graph_from_fields(n, denom, t_num, ws);
  }
  return parse_graph_text(in);
}

InducedSubgraph induced_subgraph(const WeightedCompleteGraph& g,
                                 std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
  WeightedCompleteGraph sub((int)vertices.size(), g.denom(), g.t_num());
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      sub.set_weight_num((Vertex)i, (Vertex)j,
                         g.weight_num(vertices[i], vertices[j]));
  return {std::move(sub), std::move(vertices)};
}

}  // namespace hk4
