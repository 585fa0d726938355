#include "hk4/tiler.hpp"

#include <algorithm>

namespace hk4 {

namespace {

std::array<Vertex, 4> sorted4(std::array<Vertex, 4> s) {
  std::sort(s.begin(), s.end());
  return s;
}
std::array<Vertex, 3> sorted3(std::array<Vertex, 3> s) {
  std::sort(s.begin(), s.end());
  return s;
}
std::array<Vertex, 2> sorted2(std::array<Vertex, 2> s) {
  if (s[0] > s[1]) std::swap(s[0], s[1]);
  return s;
}

long long attach_num(const WeightedCompleteGraph& g, Vertex u,
                     std::span<const Vertex> s) {
  long long sum = 0;
  for (Vertex x : s) sum += g.weight_num(u, x);
  return sum;
}

// Scan context: vertex homes and candidate pools for one find_move pass.
struct Ctx {
  const WeightedCompleteGraph& g;
  const TilingState& st;
  std::vector<int8_t> in_r;
  std::vector<int> t_home;  // index into st.t or -1
  std::vector<int> m_home;  // index into st.m or -1
  std::vector<Vertex> outside_r;
  std::vector<Vertex> w_pool;  // V(M) + I, ascending

  Ctx(const WeightedCompleteGraph& graph, const TilingState& state)
      : g(graph), st(state) {
    int n = g.size();
    in_r.assign(n, 0);
    t_home.assign(n, -1);
    m_home.assign(n, -1);
    for (const auto& s : st.r)
      for (Vertex x : s) in_r[x] = 1;
    for (size_t i = 0; i < st.t.size(); ++i)
      for (Vertex x : st.t[i]) t_home[x] = (int)i;
    for (size_t i = 0; i < st.m.size(); ++i)
      for (Vertex x : st.m[i]) m_home[x] = (int)i;
    for (Vertex v = 0; v < n; ++v)
      if (!in_r[v]) outside_r.push_back(v);
    for (Vertex v = 0; v < n; ++v)
      if (!in_r[v] && t_home[v] < 0) w_pool.push_back(v);
  }

  // Books the removal of v's current T/M member into `mv` (vertex consumed by
  // an added member elsewhere).
  void consume(Vertex v, Move& mv) const {
    if (t_home[v] >= 0) {
      const auto& tm = st.t[t_home[v]];
      if (std::find(mv.remove_t.begin(), mv.remove_t.end(), tm) ==
          mv.remove_t.end())
        mv.remove_t.push_back(tm);
    }
    if (m_home[v] >= 0) {
      const auto& mm = st.m[m_home[v]];
      if (std::find(mv.remove_m.begin(), mv.remove_m.end(), mm) ==
          mv.remove_m.end())
        mv.remove_m.push_back(mm);
    }
  }
};

std::optional<Move> find_promote_triangle(const Ctx& c) {
  const auto& g = c.g;
  long long bar3 = 3 * g.t_num();
  // T members first.
  for (const auto& tri : c.st.t) {
    for (Vertex u : c.outside_r) {
      if (u == tri[0] || u == tri[1] || u == tri[2]) continue;
      if (attach_num(g, u, tri) > bar3) {
        Move mv;
        mv.kind = MoveKind::PromoteTrianglePlusVertex;
        mv.remove_t.push_back(tri);
        c.consume(u, mv);
        mv.add_r.push_back(sorted4({tri[0], tri[1], tri[2], u}));
        return mv;
      }
    }
  }
  // Triangles formable from M + I.
  const auto& w = c.w_pool;
  long long t = g.t_num();
  for (size_t a = 0; a < w.size(); ++a) {
    for (size_t b = a + 1; b < w.size(); ++b) {
      long long wab = g.weight_num(w[a], w[b]);
      for (size_t d = b + 1; d < w.size(); ++d) {
        if (wab + g.weight_num(w[a], w[d]) + g.weight_num(w[b], w[d]) <=
            3 * t)
          continue;
        std::array<Vertex, 3> tri{w[a], w[b], w[d]};
        for (Vertex u : c.outside_r) {
          if (u == tri[0] || u == tri[1] || u == tri[2]) continue;
          if (attach_num(g, u, tri) > bar3) {
            Move mv;
            mv.kind = MoveKind::PromoteTrianglePlusVertex;
            for (Vertex x : tri) c.consume(x, mv);
            c.consume(u, mv);
            mv.add_r.push_back(sorted4({tri[0], tri[1], tri[2], u}));
            return mv;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_promote_two_edges(const Ctx& c) {
  const auto& g = c.g;
  long long t = g.t_num();
  std::vector<std::array<Vertex, 2>> heavy;
  const auto& w = c.w_pool;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (g.weight_num(w[a], w[b]) > t) heavy.push_back({w[a], w[b]});
  for (size_t i = 0; i < heavy.size(); ++i) {
    for (size_t j = i + 1; j < heavy.size(); ++j) {
      const auto& e1 = heavy[i];
      const auto& e2 = heavy[j];
      if (e1[0] == e2[0] || e1[0] == e2[1] || e1[1] == e2[0] ||
          e1[1] == e2[1])
        continue;
      if (crossing_weight_num(g, e1, e2) > 4 * t) {
        Move mv;
        mv.kind = MoveKind::PromoteTwoEdges;
        for (Vertex x : e1) c.consume(x, mv);
        for (Vertex x : e2) c.consume(x, mv);
        mv.add_r.push_back(sorted4({e1[0], e1[1], e2[0], e2[1]}));
        return mv;
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_claim1(const Ctx& c) {
  const auto& g = c.g;
  long long bar3 = 3 * g.t_num();
  for (const auto& rq : c.st.r) {
    for (size_t ti = 0; ti < c.st.t.size(); ++ti) {
      for (size_t tj = ti + 1; tj < c.st.t.size(); ++tj) {
        const auto& t1 = c.st.t[ti];
        const auto& t2 = c.st.t[tj];
        for (Vertex v : rq) {
          if (attach_num(g, v, t1) <= bar3) continue;
          for (Vertex vp : rq) {
            if (vp == v) continue;
            if (attach_num(g, vp, t2) <= bar3) continue;
            Move mv;
            mv.kind = MoveKind::Claim1Swap;
            mv.remove_r.push_back(rq);
            mv.remove_t.push_back(t1);
            mv.remove_t.push_back(t2);
            mv.add_r.push_back(sorted4({t1[0], t1[1], t1[2], v}));
            mv.add_r.push_back(sorted4({t2[0], t2[1], t2[2], vp}));
            return mv;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::array<Vertex, 1> fourth_of(const std::array<Vertex, 4>& r,
                                const std::array<Vertex, 3>& tri) {
  for (Vertex x : r)
    if (x != tri[0] && x != tri[1] && x != tri[2]) return {x};
  return {-1};
}

std::optional<Move> find_claim2(const Ctx& c) {
  const auto& g = c.g;
  long long t = g.t_num();
  for (const auto& rq : c.st.r) {
    HeavyProfile prof = profile_k4(g, rq);
    // First exchange shape: a matching edge e attaches (> 2t) to the fourth
    // vertex of a heavy triangle of R', an endpoint of another matching edge
    // f attaches (> 3t) to the triangle itself.
    for (size_t ei = 0; ei < c.st.m.size(); ++ei) {
      for (size_t fi = 0; fi < c.st.m.size(); ++fi) {
        if (fi == ei) continue;
        const auto& e = c.st.m[ei];
        const auto& f = c.st.m[fi];
        for (const auto& tri : prof.heavy_triangles) {
          Vertex v = fourth_of(rq, tri)[0];
          if (g.weight_num(v, e[0]) + g.weight_num(v, e[1]) <= 2 * t) continue;
          for (Vertex u : f) {
            if (attach_num(g, u, tri) <= 3 * t) continue;
            Move mv;
            mv.kind = MoveKind::Claim2Swap;
            mv.remove_r.push_back(rq);
            mv.remove_m.push_back(e);
            mv.remove_m.push_back(f);
            mv.add_r.push_back(sorted4({tri[0], tri[1], tri[2], u}));
            mv.add_t.push_back(sorted3({v, e[0], e[1]}));
            return mv;
          }
        }
      }
    }
    // Second exchange shape: a heavy edge {p,q} of R' merges with a matching
    // edge e (crossing > 4t), another matching edge f attaches (> 2t) to a
    // vertex z of R' outside {p,q}.
    for (const auto& pq : prof.heavy_edges) {
      for (size_t ei = 0; ei < c.st.m.size(); ++ei) {
        const auto& e = c.st.m[ei];
        if (crossing_weight_num(g, pq, e) <= 4 * t) continue;
        for (size_t fi = 0; fi < c.st.m.size(); ++fi) {
          if (fi == ei) continue;
          const auto& f = c.st.m[fi];
          for (Vertex z : rq) {
            if (z == pq[0] || z == pq[1]) continue;
            if (g.weight_num(z, f[0]) + g.weight_num(z, f[1]) <= 2 * t)
              continue;
            Move mv;
            mv.kind = MoveKind::Claim2Swap;
            mv.remove_r.push_back(rq);
            mv.remove_m.push_back(e);
            mv.remove_m.push_back(f);
            mv.add_r.push_back(sorted4({pq[0], pq[1], e[0], e[1]}));
            mv.add_t.push_back(sorted3({z, f[0], f[1]}));
            return mv;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_claim3(const Ctx& c) {
  const auto& g = c.g;
  long long t = g.t_num();
  for (const auto& rq : c.st.r) {
    HeavyProfile prof = profile_k4(g, rq);
    for (const auto& tri : prof.heavy_triangles) {
      Vertex v = fourth_of(rq, tri)[0];
      for (Vertex u1 : c.st.i) {
        if (attach_num(g, u1, tri) <= 3 * t) continue;
        for (Vertex u2 : c.st.i) {
          if (u2 == u1) continue;
          if (g.weight_num(u2, v) <= t) continue;
          Move mv;
          mv.kind = MoveKind::Claim3Swap;
          mv.remove_r.push_back(rq);
          mv.add_r.push_back(sorted4({tri[0], tri[1], tri[2], u1}));
          mv.add_m.push_back(sorted2({u2, v}));
          return mv;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_repack_t(const Ctx& c) {
  const auto& g = c.g;
  const auto& w = c.w_pool;
  long long t = g.t_num();
  for (size_t a = 0; a < w.size(); ++a) {
    for (size_t b = a + 1; b < w.size(); ++b) {
      long long wab = g.weight_num(w[a], w[b]);
      for (size_t d = b + 1; d < w.size(); ++d) {
        if (wab + g.weight_num(w[a], w[d]) + g.weight_num(w[b], w[d]) >
            3 * t) {
          Move mv;
          mv.kind = MoveKind::RepackT;
          for (Vertex x : {w[a], w[b], w[d]}) c.consume(x, mv);
          mv.add_t.push_back({w[a], w[b], w[d]});
          return mv;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_repack_m(const Ctx& c) {
  const auto& g = c.g;
  long long t = g.t_num();
  for (size_t a = 0; a < c.st.i.size(); ++a) {
    for (size_t b = a + 1; b < c.st.i.size(); ++b) {
      if (g.weight_num(c.st.i[a], c.st.i[b]) > t) {
        Move mv;
        mv.kind = MoveKind::RepackM;
        mv.add_m.push_back({c.st.i[a], c.st.i[b]});
        return mv;
      }
    }
  }
  return std::nullopt;
}

std::optional<Move> find_rho_improve(const Ctx& c) {
  const auto& g = c.g;
  long long t = g.t_num();
  for (const auto& rq : c.st.r) {
    long long base = clique_weight_num(g, rq);
    // Swap one member vertex for a leftover vertex.
    for (Vertex x : rq) {
      for (Vertex u : c.st.i) {
        std::array<Vertex, 4> cand = rq;
        *std::find(cand.begin(), cand.end(), x) = u;
        if (clique_weight_num(g, cand) <= base) continue;
        HeavyProfile prof = profile_k4(g, cand);
        if (!prof.qualifies()) continue;
        Move mv;
        mv.kind = MoveKind::RhoImprove;
        mv.remove_r.push_back(rq);
        mv.add_r.push_back(sorted4(cand));
        return mv;
      }
    }
    // Exchange a heavy edge of R' with a matching edge (the diagonal exchange
    // from the matching-size claim): the discarded pair must itself be a
    // heavy edge so |M| is preserved.
    HeavyProfile prof = profile_k4(g, rq);
    for (const auto& pq : prof.heavy_edges) {
      std::array<Vertex, 2> rest{};
      int k = 0;
      for (Vertex x : rq)
        if (x != pq[0] && x != pq[1]) rest[k++] = x;
      if (g.weight_num(rest[0], rest[1]) <= t) continue;
      for (const auto& e : c.st.m) {
        if (crossing_weight_num(g, pq, e) <= 4 * t) continue;
        std::array<Vertex, 4> cand = sorted4({pq[0], pq[1], e[0], e[1]});
        if (clique_weight_num(g, cand) <= base) continue;
        if (!profile_k4(g, cand).qualifies()) continue;
        Move mv;
        mv.kind = MoveKind::RhoImprove;
        mv.remove_r.push_back(rq);
        mv.remove_m.push_back(e);
        mv.add_r.push_back(cand);
        mv.add_m.push_back(sorted2(rest));
        return mv;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::PromoteTrianglePlusVertex: return "promote-triangle-plus-vertex";
    case MoveKind::PromoteTwoEdges: return "promote-two-edges";
    case MoveKind::Claim1Swap: return "claim1-swap";
    case MoveKind::Claim2Swap: return "claim2-swap";
    case MoveKind::Claim3Swap: return "claim3-swap";
    case MoveKind::RepackT: return "repack-T";
    case MoveKind::RepackM: return "repack-M";
    case MoveKind::RhoImprove: return "rho-improve";
  }
  return "?";
}

std::vector<Vertex> Move::touched() const {
  std::vector<Vertex> out;
  auto add = [&](auto const& members) {
    for (const auto& m : members)
      for (Vertex x : m) out.push_back(x);
  };
  add(remove_r);
  add(add_r);
  add(remove_t);
  add(add_t);
  add(remove_m);
  add(add_m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TilingState greedy_init(const WeightedCompleteGraph& g) {
  int n = g.size();
  long long t = g.t_num();
  std::vector<char> used(n, 0);
  TilingState st;

  auto avail = [&](Vertex v) { return !used[v]; };

  // Qualifying K4s: heavy triangle + attachment probe, then merged pairs of
  // a greedy heavy matching.
  for (;;) {
    std::optional<std::array<Vertex, 4>> found;
    for (Vertex a = 0; a < n && !found; ++a) {
      if (!avail(a)) continue;
      for (Vertex b = a + 1; b < n && !found; ++b) {
        if (!avail(b) || g.weight_num(a, b) <= t) continue;
        for (Vertex cvx = 0; cvx < n && !found; ++cvx) {
          if (!avail(cvx) || cvx == a || cvx == b) continue;
          long long tri = g.weight_num(a, b) + g.weight_num(a, cvx) +
                          g.weight_num(b, cvx);
          if (tri <= 3 * t) continue;
          std::array<Vertex, 3> triangle{a, b, cvx};
          for (Vertex d = 0; d < n; ++d) {
            if (!avail(d) || d == a || d == b || d == cvx) continue;
            if (attach_num(g, d, triangle) > 3 * t) {
              found = sorted4({a, b, cvx, d});
              break;
            }
          }
        }
      }
    }
    if (!found) {
      // Merge probe over a greedy heavy matching of the remainder.
      std::vector<std::array<Vertex, 2>> matching;
      std::vector<char> in_match(n, 0);
      for (Vertex a = 0; a < n; ++a) {
        if (!avail(a) || in_match[a]) continue;
        for (Vertex b = a + 1; b < n; ++b) {
          if (!avail(b) || in_match[b]) continue;
          if (g.weight_num(a, b) > t) {
            matching.push_back({a, b});
            in_match[a] = in_match[b] = 1;
            break;
          }
        }
      }
      for (size_t i = 0; i < matching.size() && !found; ++i)
        for (size_t j = i + 1; j < matching.size() && !found; ++j)
          if (crossing_weight_num(g, matching[i], matching[j]) > 4 * t)
            found = sorted4({matching[i][0], matching[i][1], matching[j][0],
                             matching[j][1]});
    }
    if (!found) break;
    st.r.push_back(*found);
    for (Vertex x : *found) used[x] = 1;
  }

  // Heavy triangles in the remainder.
  for (;;) {
    std::optional<std::array<Vertex, 3>> tri;
    for (Vertex a = 0; a < n && !tri; ++a) {
      if (!avail(a)) continue;
      for (Vertex b = a + 1; b < n && !tri; ++b) {
        if (!avail(b) || g.weight_num(a, b) <= t) continue;
        for (Vertex cvx = 0; cvx < n; ++cvx) {
          if (!avail(cvx) || cvx == a || cvx == b) continue;
          if (g.weight_num(a, b) + g.weight_num(a, cvx) +
                  g.weight_num(b, cvx) >
              3 * t) {
            tri = sorted3({a, b, cvx});
            break;
          }
        }
      }
    }
    if (!tri) break;
    st.t.push_back(*tri);
    for (Vertex x : *tri) used[x] = 1;
  }

  // Heavy matching in what remains.
  for (Vertex a = 0; a < n; ++a) {
    if (!avail(a)) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (!avail(b)) continue;
      if (g.weight_num(a, b) > t) {
        st.m.push_back({a, b});
        used[a] = used[b] = 1;
        break;
      }
    }
  }

  for (Vertex v = 0; v < n; ++v)
    if (!used[v]) st.i.push_back(v);
  st.rho_num = 0;
  for (const auto& rq : st.r) st.rho_num += clique_weight_num(g, rq);
  return st;
}

std::optional<Move> find_move(const WeightedCompleteGraph& g,
                              const TilingState& state) {
  Ctx c(g, state);
  if (auto mv = find_promote_triangle(c)) return mv;
  if (auto mv = find_promote_two_edges(c)) return mv;
  if (auto mv = find_claim1(c)) return mv;
  if (auto mv = find_claim2(c)) return mv;
  if (auto mv = find_claim3(c)) return mv;
  if (auto mv = find_repack_t(c)) return mv;
  if (auto mv = find_repack_m(c)) return mv;
  if (auto mv = find_rho_improve(c)) return mv;
  return std::nullopt;
}

void apply_move(const WeightedCompleteGraph& g, TilingState& state,
                const Move& move) {
  auto before = state.objective();

  auto erase_member = [](auto& list, const auto& member, const char* what) {
    auto it = std::find(list.begin(), list.end(), member);
    if (it == list.end())
      throw std::invalid_argument(std::string("apply_move: ") + what +
                                  " member to remove not present");
    list.erase(it);
  };
  for (const auto& m : move.remove_r) erase_member(state.r, m, "R");
  for (const auto& m : move.remove_t) erase_member(state.t, m, "T");
  for (const auto& m : move.remove_m) erase_member(state.m, m, "M");

  // Vertices freed by removals, vertices consumed by additions.
  std::vector<Vertex> freed, consumed;
  for (const auto& m : move.remove_r)
    for (Vertex x : m) freed.push_back(x);
  for (const auto& m : move.remove_t)
    for (Vertex x : m) freed.push_back(x);
  for (const auto& m : move.remove_m)
    for (Vertex x : m) freed.push_back(x);
  for (const auto& m : move.add_r)
    for (Vertex x : m) consumed.push_back(x);
  for (const auto& m : move.add_t)
    for (Vertex x : m) consumed.push_back(x);
  for (const auto& m : move.add_m)
    for (Vertex x : m) consumed.push_back(x);

  // New I = (I + freed) minus consumed.
  std::vector<Vertex> pool = state.i;
  pool.insert(pool.end(), freed.begin(), freed.end());
  std::sort(pool.begin(), pool.end());
  std::sort(consumed.begin(), consumed.end());
  for (size_t i = 1; i < consumed.size(); ++i)
    if (consumed[i] == consumed[i - 1])
      throw std::logic_error("apply_move: added members overlap");
  std::vector<Vertex> missing;
  std::set_difference(consumed.begin(), consumed.end(), pool.begin(),
                      pool.end(), std::back_inserter(missing));
  if (!missing.empty())
    throw std::logic_error("apply_move: added member uses vertex " +
                           std::to_string(missing[0]) + " that is not free");
  std::vector<Vertex> new_i;
  std::set_difference(pool.begin(), pool.end(), consumed.begin(),
                      consumed.end(), std::back_inserter(new_i));
  state.i = std::move(new_i);

  for (const auto& m : move.add_r) {
    if (!profile_k4(g, m).qualifies())
      throw std::logic_error("apply_move: added R member does not qualify");
    state.r.push_back(sorted4(m));
  }
  for (const auto& m : move.add_t) {
    if (!is_heavy(g, m))
      throw std::logic_error("apply_move: added triangle not heavy");
    state.t.push_back(sorted3(m));
  }
  for (const auto& m : move.add_m) {
    if (g.weight_num(m[0], m[1]) <= g.t_num())
      throw std::logic_error("apply_move: added matching edge not heavy");
    state.m.push_back(sorted2(m));
  }

  state.rho_num = 0;
  for (const auto& rq : state.r) state.rho_num += clique_weight_num(g, rq);

  if (!(state.objective() > before))
    throw std::logic_error("apply_move: objective did not increase");
}

TilingReport almost_cover(const WeightedCompleteGraph& g, Rat mu) {
  TilingReport rep;
  rep.mu = mu;
  rep.state = greedy_init(g);
  while (auto mv = find_move(g, rep.state)) {
    apply_move(g, rep.state, *mv);
    rep.move_log.push_back({mv->kind, mv->touched()});
  }
  std::vector<char> in_r(g.size(), 0);
  for (const auto& rq : rep.state.r)
    for (Vertex x : rq) in_r[x] = 1;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!in_r[v]) rep.uncovered.push_back(v);

  rep.degree_condition_holds = meets_degree_condition(g, mu);
  if (mu.num() > 0) {
    Rat inv = Rat::of(1) / mu;
    long long cap = inv.ceil_scaled(1);
    rep.t_bound_ok = (long long)rep.state.t.size() <= 3;
    rep.m_bound_ok = (long long)rep.state.m.size() <= cap;
    rep.i_bound_ok = (long long)rep.state.i.size() <= cap;
    Rat unc = Rat::of((long long)rep.uncovered.size());
    rep.uncovered_within_lemma = unc <= Rat::of(9) + Rat::of(3) / mu;
    rep.uncovered_within_applied = unc <= Rat::of(9) + Rat::of(6) / mu;
  }
  return rep;
}

std::vector<std::string> validate_state(const WeightedCompleteGraph& g,
                                        const TilingState& state) {
  std::vector<std::string> out;
  std::vector<int> cover(g.size(), 0);
  auto count = [&](Vertex x, const char* what) {
    if (x < 0 || x >= g.size()) {
      out.push_back(std::string(what) + ": vertex out of range");
      return;
    }
    if (cover[x]++)
      out.push_back(std::string(what) + ": vertex " + std::to_string(x) +
                    " covered more than once");
  };
  for (const auto& m : state.r)
    for (Vertex x : m) count(x, "R");
  for (const auto& m : state.t)
    for (Vertex x : m) count(x, "T");
  for (const auto& m : state.m)
    for (Vertex x : m) count(x, "M");
  for (Vertex x : state.i) count(x, "I");
  for (Vertex v = 0; v < g.size(); ++v)
    if (cover[v] == 0)
      out.push_back("vertex " + std::to_string(v) +
                    " not covered by any member or I");

  for (const auto& m : state.r) {
    HeavyProfile p = profile_k4(g, m);
    if (!p.qualifies())
      out.push_back("R member {" + std::to_string(m[0]) + "," +
                    std::to_string(m[1]) + "," + std::to_string(m[2]) + "," +
                    std::to_string(m[3]) +
                    "} fails the heavy/two-triangle/two-edge constraint");
  }
  for (const auto& m : state.t)
    if (!is_heavy(g, m))
      out.push_back("T member {" + std::to_string(m[0]) + "," +
                    std::to_string(m[1]) + "," + std::to_string(m[2]) +
                    "} is not heavy");
  for (const auto& m : state.m)
    if (g.weight_num(m[0], m[1]) <= g.t_num())
      out.push_back("M member {" + std::to_string(m[0]) + "," +
                    std::to_string(m[1]) + "} is not heavy");

  long long rho = 0;
  for (const auto& rq : state.r) rho += clique_weight_num(g, rq);
  if (rho != state.rho_num)
    out.push_back("rho mismatch: stored " + std::to_string(state.rho_num) +
                  ", recomputed " + std::to_string(rho));
  if (!std::is_sorted(state.i.begin(), state.i.end()))
    out.push_back("I is not sorted ascending");
  return out;
}

}  // namespace hk4
