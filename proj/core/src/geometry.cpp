#include "hk4/geometry.hpp"

#include <algorithm>

namespace hk4 {

HeavyProfile profile_k4(const WeightedCompleteGraph& g,
                        std::array<Vertex, 4> s) {
  std::sort(s.begin(), s.end());
  HeavyProfile p;
  p.vertices = s;
  p.total_num = clique_weight_num(g, s);  // validates distinctness/range
  long long t = g.t_num();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.weight_num(s[i], s[j]) > t)
        p.heavy_edges.push_back({s[i], s[j]});
  for (int skip = 3; skip >= 0; --skip) {
    std::array<Vertex, 3> tri{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) tri[k++] = s[i];
    if (clique_weight_num(g, tri) > 3 * t) p.heavy_triangles.push_back(tri);
  }
  std::sort(p.heavy_triangles.begin(), p.heavy_triangles.end());
  p.heavy = p.total_num > 6 * t;
  p.two_heavy_triangles = p.heavy_triangles.size() >= 2;
  p.two_heavy_edges = p.heavy_edges.size() >= 2;
  return p;
}

std::optional<HeavyProfile> extend_triangle(const WeightedCompleteGraph& g,
                                            std::array<Vertex, 3> t,
                                            Vertex u) {
  if (!is_heavy(g, t))
    throw std::invalid_argument("extend_triangle: input triangle not heavy");
  for (Vertex x : t)
    if (x == u)
      throw std::invalid_argument("extend_triangle: u lies in the triangle");
  long long attach =
      g.weight_num(u, t[0]) + g.weight_num(u, t[1]) + g.weight_num(u, t[2]);
  if (attach <= 3 * g.t_num()) return std::nullopt;
  return profile_k4(g, {t[0], t[1], t[2], u});
}

std::optional<HeavyProfile> merge_heavy_edges(const WeightedCompleteGraph& g,
                                              std::array<Vertex, 2> e1,
                                              std::array<Vertex, 2> e2) {
  for (Vertex x : e1)
    for (Vertex y : e2)
      if (x == y)
        throw std::invalid_argument("merge_heavy_edges: edges share a vertex");
  if (g.weight_num(e1[0], e1[1]) <= g.t_num() ||
      g.weight_num(e2[0], e2[1]) <= g.t_num())
    throw std::invalid_argument("merge_heavy_edges: input edge not heavy");
  long long crossing = crossing_weight_num(g, e1, e2);
  if (crossing <= 4 * g.t_num()) return std::nullopt;
  return profile_k4(g, {e1[0], e1[1], e2[0], e2[1]});
}

std::optional<CliqueExtension> extend_heavy_clique(
    const WeightedCompleteGraph& g, std::span<const Vertex> k, Vertex u) {
  int r1 = (int)k.size();
  if (r1 < 2 || r1 > 4)
    throw std::invalid_argument("extend_heavy_clique: |K| must be 2, 3 or 4");
  if (!is_heavy(g, k))
    throw std::invalid_argument("extend_heavy_clique: input clique not heavy");
  long long attach = 0;
  for (Vertex x : k) {
    if (x == u)
      throw std::invalid_argument("extend_heavy_clique: u lies in the clique");
    attach += g.weight_num(u, x);
  }
  if (attach <= (long long)r1 * g.t_num()) return std::nullopt;

  CliqueExtension ext;
  ext.clique.assign(k.begin(), k.end());
  ext.clique.push_back(u);
  std::sort(ext.clique.begin(), ext.clique.end());
  ext.total_num = clique_weight_num(g, ext.clique);
  int r = r1 + 1;
  long long t = g.t_num();
  for (int skip = 0; skip < r; ++skip) {
    std::vector<Vertex> sub;
    sub.reserve(r1);
    for (int i = 0; i < r; ++i)
      if (i != skip) sub.push_back(ext.clique[i]);
    long long pairs = (long long)r1 * (r1 - 1) / 2;
    if (clique_weight_num(g, sub) > pairs * t)
      ext.heavy_subcliques.push_back(std::move(sub));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (g.weight_num(ext.clique[i], ext.clique[j]) > t)
        ext.heavy_edges.push_back({ext.clique[i], ext.clique[j]});
  return ext;
}

ExtensionSet heavy_extension_set(const WeightedCompleteGraph& g,
                                 std::span<const Vertex> k) {
  if (!is_heavy(g, k))
    throw std::invalid_argument("heavy_extension_set: input clique not heavy");
  ExtensionSet out;
  long long bar = (long long)k.size() * g.t_num();
  for (Vertex u = 0; u < g.size(); ++u) {
    bool inside = false;
    for (Vertex x : k) inside = inside || x == u;
    if (inside) continue;
    long long attach = 0;
    for (Vertex x : k) attach += g.weight_num(u, x);
    if (attach > bar) out.members.push_back(u);
  }
  // |X| >= n/4 - |K|  <=>  4(|X| + |K|) >= n.
  out.meets_quarter_bound =
      4 * ((long long)out.members.size() + (long long)k.size()) >= g.size();
  return out;
}

StrongExtensionSet strong_extension_set(const WeightedCompleteGraph& g,
                                        std::array<Vertex, 4> s,
                                        std::optional<Rat> mu) {
  clique_weight_num(g, s);  // validates distinctness/range
  StrongExtensionSet out;
  long long bar = g.denom() + 3 * g.t_num();  // 1 + 3t
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u == s[0] || u == s[1] || u == s[2] || u == s[3]) continue;
    long long attach = 0;
    for (Vertex x : s) attach += g.weight_num(u, x);
    if (attach > bar) out.members.push_back(u);
  }
  if (mu) {
    // |X| >= mu*n - 4  <=>  |X| + 4 >= mu*n.
    out.meets_mu_bound =
        Rat::of((long long)out.members.size() + 4) >= *mu * Rat::of(g.size());
  }
  return out;
}

}  // namespace hk4
