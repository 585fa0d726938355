#include "hk4/oracle.hpp"

#include <algorithm>
#include <bit>

namespace hk4 {

namespace {

constexpr int kHardCap = 20;

void check_cap(const WeightedCompleteGraph& g, int cap, const char* what) {
  int limit = std::min(cap, kHardCap);
  if (g.size() > limit)
    throw std::invalid_argument(std::string(what) + ": n exceeds oracle cap " +
                                std::to_string(limit));
}

// Heavy 4-set masks grouped by their lowest vertex.
std::vector<std::vector<uint32_t>> heavy_sets_by_anchor(
    const WeightedCompleteGraph& g) {
  int n = g.size();
  std::vector<std::vector<uint32_t>> by(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          std::array<Vertex, 4> s{a, b, c, d};
          if (is_heavy(g, s))
            by[a].push_back((1u << a) | (1u << b) | (1u << c) | (1u << d));
        }
  return by;
}

std::array<Vertex, 4> unpack4(uint32_t mask) {
  std::array<Vertex, 4> s{};
  int k = 0;
  while (mask) {
    s[k++] = std::countr_zero(mask);
    mask &= mask - 1;
  }
  return s;
}

}  // namespace

OracleResult exact_factor_exists(const WeightedCompleteGraph& g, int cap) {
  check_cap(g, cap, "exact_factor_exists");
  if (g.size() % 4 != 0)
    throw std::invalid_argument("exact_factor_exists: n must be divisible by 4");
  int n = g.size();
  auto sets = heavy_sets_by_anchor(g);
  uint32_t full = (1u << n) - 1;
  std::vector<int8_t> memo(full + 1, 0);  // 0 unknown, 1 true, 2 false
  uint64_t visited = 0;

  auto solve = [&](auto&& self, uint32_t mask) -> bool {
    if (mask == 0) return true;
    int8_t& m = memo[mask];
    if (m) return m == 1;
    ++visited;
    Vertex anchor = std::countr_zero(mask);
    for (uint32_t sm : sets[anchor]) {
      if ((sm & mask) == sm && self(self, mask ^ sm)) {
        m = 1;
        return true;
      }
    }
    m = 2;
    return false;
  };

  OracleResult out;
  out.kind = "factor";
  out.answer_bool = solve(solve, full);
  out.visited_states = visited;
  if (out.answer_bool) {
    std::vector<std::array<Vertex, 4>> wit;
    uint32_t mask = full;
    while (mask) {
      Vertex anchor = std::countr_zero(mask);
      for (uint32_t sm : sets[anchor]) {
        if ((sm & mask) == sm && ((mask ^ sm) == 0 || memo[mask ^ sm] == 1)) {
          wit.push_back(unpack4(sm));
          mask ^= sm;
          break;
        }
      }
    }
    out.witness = std::move(wit);
  }
  return out;
}

OracleResult exact_max_tiling(const WeightedCompleteGraph& g, int cap) {
  check_cap(g, cap, "exact_max_tiling");
  int n = g.size();
  auto sets = heavy_sets_by_anchor(g);
  uint32_t full = (1u << n) - 1;
  std::vector<int8_t> memo(full + 1, -1);
  uint64_t visited = 0;

  auto solve = [&](auto&& self, uint32_t mask) -> int8_t {
    if (mask == 0) return 0;
    int8_t& m = memo[mask];
    if (m >= 0) return m;
    ++visited;
    Vertex anchor = std::countr_zero(mask);
    int8_t best = self(self, mask & (mask - 1));  // leave anchor uncovered
    for (uint32_t sm : sets[anchor]) {
      if ((sm & mask) == sm)
        best = std::max<int8_t>(best, (int8_t)(1 + self(self, mask ^ sm)));
    }
    m = best;
    return best;
  };

  OracleResult out;
  out.kind = "maxtile";
  out.answer_int = solve(solve, full);
  out.visited_states = visited;

  std::vector<std::array<Vertex, 4>> wit;
  uint32_t mask = full;
  while (mask) {
    Vertex anchor = std::countr_zero(mask);
    int8_t here = memo[mask] < 0 ? solve(solve, mask) : memo[mask];
    if (here == solve(solve, mask & (mask - 1))) {
      mask &= mask - 1;
      continue;
    }
    for (uint32_t sm : sets[anchor]) {
      if ((sm & mask) == sm && 1 + solve(solve, mask ^ sm) == here) {
        wit.push_back(unpack4(sm));
        mask ^= sm;
        break;
      }
    }
  }
  out.witness = std::move(wit);
  return out;
}

OracleResult exact_connector_exists(const WeightedCompleteGraph& g, Vertex u,
                                    Vertex v, const std::vector<Vertex>& w,
                                    int s, int cap) {
  check_cap(g, cap, "exact_connector_exists");
  if (s < 1 || s > 2)
    throw std::invalid_argument("exact_connector_exists: s must be 1 or 2");
  if (u == v || u < 0 || v < 0 || u >= g.size() || v >= g.size())
    throw std::invalid_argument("exact_connector_exists: bad pair");

  std::vector<char> blocked(g.size(), 0);
  for (Vertex x : w) blocked.at(x) = 1;
  blocked[u] = blocked[v] = 1;
  std::vector<Vertex> pool;
  for (Vertex x = 0; x < g.size(); ++x)
    if (!blocked[x]) pool.push_back(x);

  OracleResult out;
  out.kind = "connector";
  uint64_t visited = 0;

  // Both induced graphs on S+{u} / S+{v} must factor; for |S|=3 this is a
  // single heavy check, for |S|=7 a subset DP on 8 vertices.
  auto factors = [&](std::vector<Vertex> set) -> bool {
    if (set.size() == 4) {
      ++visited;
      std::array<Vertex, 4> a{set[0], set[1], set[2], set[3]};
      return is_heavy(g, a);
    }
    auto sub = induced_subgraph(g, set);
    OracleResult r = exact_factor_exists(sub.graph, cap);
    visited += r.visited_states;
    return r.answer_bool;
  };

  std::vector<Vertex> comb;
  auto search = [&](auto&& self, int size, size_t start) -> bool {
    if ((int)comb.size() == size) {
      std::vector<Vertex> su = comb, sv = comb;
      su.push_back(u);
      sv.push_back(v);
      return factors(su) && factors(sv);
    }
    for (size_t i = start; i < pool.size(); ++i) {
      comb.push_back(pool[i]);
      if (self(self, size, i + 1)) return true;
      comb.pop_back();
    }
    return false;
  };

  for (int size = 3; size <= 4 * s - 1; size += 4) {
    comb.clear();
    if (search(search, size, 0)) {
      out.answer_bool = true;
      out.connector_witness = comb;
      break;
    }
  }
  out.visited_states = visited;
  return out;
}

bool validate_tiling(const WeightedCompleteGraph& g,
                     const std::vector<std::array<Vertex, 4>>& tiles,
                     std::vector<std::string>* why) {
  bool ok = true;
  std::vector<int> seen(g.size(), 0);
  for (const auto& s : tiles) {
    for (Vertex x : s) {
      if (x < 0 || x >= g.size()) {
        if (why) why->push_back("tile vertex out of range");
        return false;
      }
      if (seen[x]++) {
        ok = false;
        if (why)
          why->push_back("vertex " + std::to_string(x) +
                         " appears in two tiles");
      }
    }
    if (!is_heavy(g, s)) {
      ok = false;
      if (why)
        why->push_back("tile {" + std::to_string(s[0]) + "," +
                       std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                       std::to_string(s[3]) + "} is not heavy");
    }
  }
  return ok;
}

bool validate_factor(const WeightedCompleteGraph& g,
                     const std::vector<std::array<Vertex, 4>>& factor,
                     std::vector<std::string>* why) {
  bool ok = validate_tiling(g, factor, why);
  if ((int)factor.size() * 4 != g.size()) {
    ok = false;
    if (why)
      why->push_back("factor covers " + std::to_string(factor.size() * 4) +
                     " of " + std::to_string(g.size()) + " vertices");
  }
  return ok;
}

}  // namespace hk4
