#include "hk4/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace hk4 {

void PartitionContext::validate(int n) const {
  if (parts.empty() || parts.size() > 8)
    throw std::invalid_argument("partition: need between 1 and 8 parts");
  std::vector<int> seen(n, 0);
  for (const auto& part : parts) {
    for (Vertex v : part) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition: vertex out of range");
      if (seen[v]++)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " appears twice");
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v])
      throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                  " not covered");
}

int PartitionContext::part_of(Vertex v) const {
  for (size_t i = 0; i < parts.size(); ++i)
    for (Vertex x : parts[i])
      if (x == v) return (int)i;
  return -1;
}

PartitionContext PartitionContext::load(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("partition: cannot open " + path);
  PartitionContext ctx;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Vertex> part;
    Vertex v;
    while (ls >> v) part.push_back(v);
    if (!part.empty()) ctx.parts.push_back(std::move(part));
  }
  ctx.validate(n);
  return ctx;
}

IndexVector index_vector(const PartitionContext& p, std::span<const Vertex> s) {
  IndexVector iv(p.parts.size(), 0);
  for (Vertex v : s) {
    int part = p.part_of(v);
    if (part < 0)
      throw std::invalid_argument("index_vector: vertex " + std::to_string(v) +
                                  " not in any part");
    ++iv[part];
  }
  return iv;
}

std::vector<std::string> validate_robust_certificate(
    const WeightedCompleteGraph& g, const PartitionContext& p,
    const RobustCertificate& cert) {
  std::vector<std::string> out;
  if (cert.members.empty()) out.push_back("certificate has no members");
  std::vector<int> seen(g.size(), 0);
  for (const auto& k4 : cert.members) {
    for (Vertex v : k4) {
      if (v < 0 || v >= g.size()) {
        out.push_back("member vertex out of range");
        return out;
      }
      if (seen[v]++)
        out.push_back("members overlap at vertex " + std::to_string(v));
    }
    if (!is_heavy(g, k4)) out.push_back("member K4 not heavy");
    if (index_vector(p, k4) != cert.index)
      out.push_back("member index vector differs from certificate index");
  }
  return out;
}

std::optional<RobustCertificate> certify_robust(
    const WeightedCompleteGraph& g, const PartitionContext& p,
    const IndexVector& index, Rat beta, uint64_t candidate_budget) {
  p.validate(g.size());
  if (index.size() != p.parts.size())
    throw std::invalid_argument("certify_robust: index arity mismatch");
  int total = 0;
  for (int c : index) {
    if (c < 0) throw std::invalid_argument("certify_robust: negative count");
    total += c;
  }
  if (total != 4)
    throw std::invalid_argument("certify_robust: coordinates must sum to 4");

  long long need = (beta * Rat::of(g.size())).ceil_scaled(1) + 1;
  // Pack a few spares beyond the minimum: downstream merges pick disjoint
  // realizations across two certificates while avoiding two more vertices.
  long long target = need + 4;
  std::vector<char> used(g.size(), 0);
  RobustCertificate cert;
  cert.index = index;

  // Slots: which parts contribute how many vertices, in part order.
  std::vector<std::pair<int, int>> slots;  // (part, count)
  for (size_t i = 0; i < index.size(); ++i)
    if (index[i] > 0) slots.push_back({(int)i, index[i]});
  std::vector<std::vector<Vertex>> sorted_parts = p.parts;
  for (auto& part : sorted_parts) std::sort(part.begin(), part.end());

  uint64_t visited = 0;
  std::vector<Vertex> cand;
  // One lexicographic pass over part-constrained candidates; stops at the
  // first heavy candidate (which is recorded) or at exhaustion.
  auto scan = [&](auto&& self, size_t slot) -> bool {
    if (visited > candidate_budget) return false;
    if (slot == slots.size()) {
      ++visited;
      std::array<Vertex, 4> k4{cand[0], cand[1], cand[2], cand[3]};
      if (!is_heavy(g, k4)) return false;
      std::sort(k4.begin(), k4.end());
      cert.members.push_back(k4);
      for (Vertex v : k4) used[v] = 1;
      return true;
    }
    auto [part, count] = slots[slot];
    const auto& pool = sorted_parts[part];
    // Choose `count` ascending vertices from this part, recursing per pick.
    auto pick = [&](auto&& pickself, size_t start, int left) -> bool {
      if (left == 0) return self(self, slot + 1);
      for (size_t idx = start; idx + left <= pool.size(); ++idx) {
        if (visited > candidate_budget) return false;
        if (used[pool[idx]]) continue;
        cand.push_back(pool[idx]);
        bool done = pickself(pickself, idx + 1, left - 1);
        cand.pop_back();
        if (done) return true;
      }
      return false;
    };
    return pick(pick, 0, count);
  };

  // First-fit packing: restart the pass after every take (used only grows,
  // so restarts never revisit a consumed candidate as viable).
  while ((long long)cert.members.size() < target &&
         visited <= candidate_budget) {
    cand.clear();
    if (!scan(scan, 0)) break;
  }
  if ((long long)cert.members.size() < need) return std::nullopt;
  return cert;
}

std::optional<Transferral> find_transferral(const WeightedCompleteGraph& g,
                                            const PartitionContext& p,
                                            Rat beta) {
  p.validate(g.size());
  int c = (int)p.parts.size();
  std::map<IndexVector, std::optional<RobustCertificate>> memo;
  auto certify = [&](const IndexVector& iv) -> const std::optional<RobustCertificate>& {
    auto it = memo.find(iv);
    if (it == memo.end())
      it = memo.emplace(iv, certify_robust(g, p, iv, beta)).first;
    return it->second;
  };

  std::vector<std::pair<IndexVector, IndexVector>> order;
  if (c == 2) {
    order = {{{4, 0}, {3, 1}},
             {{3, 1}, {2, 2}},
             {{2, 2}, {1, 3}},
             {{1, 3}, {0, 4}}};
  } else {
    // All ordered pairs of 4-compositions differing by a unit transferral,
    // lexicographic.
    std::vector<IndexVector> vecs;
    IndexVector cur(c, 0);
    auto gen = [&](auto&& self, int pos, int left) -> void {
      if (pos == c) {
        if (left == 0) vecs.push_back(cur);
        return;
      }
      for (int take = 0; take <= left; ++take) {
        cur[pos] = take;
        self(self, pos + 1, left - take);
      }
      cur[pos] = 0;
    };
    gen(gen, 0, 4);
    for (const auto& s : vecs)
      for (const auto& t : vecs) {
        int plus = -1, minus = -1, diffs = 0;
        for (int idx = 0; idx < c; ++idx) {
          int d = s[idx] - t[idx];
          if (d == 1 && plus < 0)
            plus = idx;
          else if (d == -1 && minus < 0)
            minus = idx;
          if (d != 0) diffs += std::abs(d);
        }
        if (diffs == 2 && plus >= 0 && minus >= 0) order.push_back({s, t});
      }
  }

  for (const auto& [s, t] : order) {
    const auto& cs = certify(s);
    if (!cs) continue;
    const auto& ct = certify(t);
    if (!ct) continue;
    Transferral tr;
    for (int idx = 0; idx < c; ++idx) {
      if (s[idx] - t[idx] == 1) tr.i = idx;
      if (s[idx] - t[idx] == -1) tr.j = idx;
    }
    tr.cert_s = *cs;
    tr.cert_t = *ct;
    return tr;
  }
  return std::nullopt;
}

namespace {

// Re-exported from reachability.cpp internals would be circular; a small
// local ladder suffices here (constructive then exhaustive, composed for
// s >= 2 via compose_connectors).
std::optional<Connector> pair_connector(const WeightedCompleteGraph& g,
                                        Vertex u, Vertex v,
                                        const std::vector<Vertex>& forbidden,
                                        const ReachParams& params) {
  std::vector<Vertex> w;
  for (Vertex x : forbidden)
    if (x != u && x != v) w.push_back(x);
  if (auto c = find_connector_s1(g, u, v, w)) return c;
  if (params.s >= 2) {
    std::vector<char> blocked(g.size(), 0);
    for (Vertex x : w) blocked[x] = 1;
    for (Vertex x = 0; x < g.size(); ++x) {
      if (blocked[x] || x == u || x == v) continue;
      auto r = compose_connectors(g, u, v, x, params, w);
      if (r.ok()) return *r;
    }
  }
  return std::nullopt;
}

}  // namespace

Result<Connector> merge_parts(const WeightedCompleteGraph& g,
                              const PartitionContext& p, int i, int j,
                              const RobustCertificate& cert_s,
                              const RobustCertificate& cert_t, Vertex x,
                              Vertex y, const ReachParams& params) {
  p.validate(g.size());
  int c = (int)p.parts.size();
  if (i < 0 || j < 0 || i >= c || j >= c || i == j)
    throw std::invalid_argument("merge_parts: bad part indices");
  if ((int)cert_s.index.size() != c || (int)cert_t.index.size() != c)
    throw std::invalid_argument("merge_parts: certificate arity mismatch");
  for (int idx = 0; idx < c; ++idx) {
    int want = (idx == i) ? 1 : (idx == j) ? -1 : 0;
    if (cert_s.index[idx] - cert_t.index[idx] != want)
      throw std::invalid_argument(
          "merge_parts: certificate vectors do not differ by u_i - u_j");
  }
  if (p.part_of(x) != i || p.part_of(y) != j)
    throw std::invalid_argument("merge_parts: x must lie in V_i, y in V_j");

  // Disjoint realizations avoiding x and y.
  auto contains = [](const std::array<Vertex, 4>& k4, Vertex v) {
    return std::find(k4.begin(), k4.end(), v) != k4.end();
  };
  std::optional<std::array<Vertex, 4>> real_s, real_t;
  for (const auto& s_k4 : cert_s.members) {
    if (contains(s_k4, x) || contains(s_k4, y)) continue;
    for (const auto& t_k4 : cert_t.members) {
      if (contains(t_k4, x) || contains(t_k4, y)) continue;
      bool overlap = false;
      for (Vertex v : s_k4) overlap = overlap || contains(t_k4, v);
      if (overlap) continue;
      real_s = s_k4;
      real_t = t_k4;
      break;
    }
    if (real_s) break;
  }
  if (!real_s)
    return Result<Connector>::failure(
        "no disjoint certificate realizations avoiding x and y");

  // x' in S inside V_i, y' in T inside V_j (lowest index each).
  Vertex xp = -1, yp = -1;
  for (Vertex v : *real_s)
    if (p.part_of(v) == i && (xp < 0 || v < xp)) xp = v;
  for (Vertex v : *real_t)
    if (p.part_of(v) == j && (yp < 0 || v < yp)) yp = v;
  if (xp < 0 || yp < 0)
    throw std::logic_error("merge_parts: realization misses its own part");

  // Remaining vertices matched part by part.
  auto rest_sorted = [&](const std::array<Vertex, 4>& k4, Vertex skip) {
    std::vector<std::pair<int, Vertex>> rest;
    for (Vertex v : k4)
      if (v != skip) rest.push_back({p.part_of(v), v});
    std::sort(rest.begin(), rest.end());
    return rest;
  };
  auto us = rest_sorted(*real_s, xp);
  auto vs = rest_sorted(*real_t, yp);
  for (int k = 0; k < 3; ++k)
    if (us[k].first != vs[k].first)
      throw std::logic_error("merge_parts: part-by-part pairing failed");

  std::vector<Vertex> forbidden;
  for (Vertex v : *real_s) forbidden.push_back(v);
  for (Vertex v : *real_t) forbidden.push_back(v);
  forbidden.push_back(x);
  forbidden.push_back(y);

  Connector out;
  out.u = x;
  out.v = y;
  std::vector<Vertex> s_hat(forbidden.begin(), forbidden.end() - 2);

  std::array<Vertex, 4> s_sorted = *real_s;
  std::array<Vertex, 4> t_sorted = *real_t;
  std::sort(s_sorted.begin(), s_sorted.end());
  std::sort(t_sorted.begin(), t_sorted.end());

  // x-side factor: S_x+{x}, S_y+{y'}, S_k+{v_k}, clique on S.
  out.factor_u.push_back(s_sorted);
  // y-side factor: S_y+{y}, S_x+{x'}, S_k+{u_k}, clique on T.
  out.factor_v.push_back(t_sorted);

  for (int k = 0; k < 3; ++k) {
    Vertex uk = us[k].second, vk = vs[k].second;
    auto ck = pair_connector(g, uk, vk, forbidden, params);
    if (!ck)
      return Result<Connector>::failure("no connector for paired vertices (" +
                                        std::to_string(uk) + "," +
                                        std::to_string(vk) + ")");
    for (Vertex v : ck->s) {
      forbidden.push_back(v);
      s_hat.push_back(v);
    }
    out.factor_u.insert(out.factor_u.end(), ck->factor_v.begin(),
                        ck->factor_v.end());
    out.factor_v.insert(out.factor_v.end(), ck->factor_u.begin(),
                        ck->factor_u.end());
  }
  auto cx = pair_connector(g, x, xp, forbidden, params);
  if (!cx)
    return Result<Connector>::failure("no connector for (x,x') = (" +
                                      std::to_string(x) + "," +
                                      std::to_string(xp) + ")");
  for (Vertex v : cx->s) {
    forbidden.push_back(v);
    s_hat.push_back(v);
  }
  out.factor_u.insert(out.factor_u.end(), cx->factor_u.begin(),
                      cx->factor_u.end());
  out.factor_v.insert(out.factor_v.end(), cx->factor_v.begin(),
                      cx->factor_v.end());

  auto cy = pair_connector(g, y, yp, forbidden, params);
  if (!cy)
    return Result<Connector>::failure("no connector for (y,y') = (" +
                                      std::to_string(y) + "," +
                                      std::to_string(yp) + ")");
  for (Vertex v : cy->s) s_hat.push_back(v);
  out.factor_u.insert(out.factor_u.end(), cy->factor_v.begin(),
                      cy->factor_v.end());
  out.factor_v.insert(out.factor_v.end(), cy->factor_u.begin(),
                      cy->factor_u.end());

  std::sort(s_hat.begin(), s_hat.end());
  out.s = std::move(s_hat);
  out.scale = 8 * params.s;  // |S_hat| <= 32s-1 = 4*(8s)-1
  if ((long long)out.s.size() > 32LL * params.s - 1)
    throw std::logic_error("merge_parts: size bound 32s-1 violated");
  auto bad = validate_connector(g, out);
  if (!bad.empty())
    throw std::logic_error("merge_parts: assembled connector invalid: " +
                           bad[0]);
  return Result<Connector>::success(std::move(out));
}

}  // namespace hk4
