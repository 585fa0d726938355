#include <random>

#include "doctest.h"
#include "hk4/coloring.hpp"
#include "test_util.hpp"

using namespace hk4;
using namespace testutil;

TEST_CASE("quantize: interval endpoints are exact") {
  // D = 100, p = 4: class width 25, intervals [0,25), [25,50), [50,75), [75,100].
  auto g = graph_from_triples(6, 100, 50,
                              {{0, 1, 0}, {0, 2, 24}, {0, 3, 25},
                               {0, 4, 75}, {0, 5, 100}, {1, 2, 74}});
  auto view = quantize(g, 4);
  CHECK(view.edge_color(g, 0, 1) == 1);  // w = 0
  CHECK(view.edge_color(g, 0, 2) == 1);  // just below the breakpoint
  CHECK(view.edge_color(g, 0, 3) == 2);  // left-closed at (l-1)/p
  CHECK(view.edge_color(g, 0, 4) == 4);  // bottom of the closed top interval
  CHECK(view.edge_color(g, 0, 5) == 4);  // w = 1
  CHECK(view.edge_color(g, 1, 2) == 3);
}

TEST_CASE("quantize rejects p that does not divide D") {
  auto g = make_constant(4, 100, Rat(1, 2), Rat(1, 2));
  CHECK_THROWS_AS(quantize(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(quantize(g, 1), std::invalid_argument);
  CHECK_NOTHROW(quantize(g, 10));
}

TEST_CASE("color classes partition the edge set") {
  auto g = make_random(20, 1000, Rat(1, 2), "uniform", 77);
  auto view = quantize(g, 10);
  std::vector<long long> counts(10, 0);
  for (uint16_t c : view.colors) {
    REQUIRE(c >= 1);
    REQUIRE(c <= 10);
    ++counts[c - 1];
  }
  long long total = 0;
  for (long long c : counts) total += c;
  CHECK(total == (long long)g.edge_count());

  // Interval invariant per edge: (l-1)/p <= w, and w < l/p unless l = p.
  long long q = g.denom() / 10;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      int l = view.edge_color(g, u, v);
      long long w = g.weight_num(u, v);
      CHECK(w >= (long long)(l - 1) * q);
      if (l < 10) CHECK(w < (long long)l * q);
    }
}

TEST_CASE("reduced weights: all-ones and a single-color graph") {
  auto ones = make_constant(12, 100, Rat(1, 2), Rat(1, 1));
  std::vector<std::vector<Vertex>> parts{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}};
  auto rw = reduced_weights(ones, quantize(ones, 4), parts);
  for (const auto& pd : rw.pairs) {
    CHECK(pd.color_counts[3] == 16);  // every cross edge in the top class
    CHECK(pd.w_r == Rat(3, 4));
    CHECK(pd.w_r_upper == Rat(1, 1));
  }

  // w = 0.3 everywhere, p = 10: color 4, w_R = 3/10.
  auto flat = make_constant(10, 100, Rat(1, 2), Rat(3, 10));
  std::vector<std::vector<Vertex>> two{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
  auto rw2 = reduced_weights(flat, quantize(flat, 10), two);
  CHECK(rw2.pair(0, 1).w_r == Rat(3, 10));
  CHECK(rw2.pair(0, 1).w_r_upper == Rat(4, 10));
}

TEST_CASE("reduced weights match an independent recomputation") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = make_random(18, 100, Rat(1, 2), "uniform", rng());
    std::vector<std::vector<Vertex>> parts(3);
    for (Vertex v = 0; v < 18; ++v) parts[rng() % 3].push_back(v);
    bool any_empty = false;
    for (const auto& p : parts) any_empty = any_empty || p.empty();
    if (any_empty) continue;
    int p = 4;
    auto rw = reduced_weights(g, quantize(g, p), parts);
    long long q = g.denom() / p;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        long long acc = 0;
        for (Vertex a : parts[i])
          for (Vertex b : parts[j]) {
            long long w = g.weight_num(a, b);
            long long l = std::min<long long>(w / q + 1, p);
            acc += l - 1;
          }
        Rat expect(acc, (long long)p * parts[i].size() * parts[j].size());
        CHECK(rw.pair(i, j).w_r == expect);
        CHECK(rw.pair(i, j).w_r <= Rat(p - 1, p));
      }
    }
  }
}

TEST_CASE("reduced weights reject bad partitions") {
  auto g = make_constant(8, 100, Rat(1, 2), Rat(1, 1));
  auto view = quantize(g, 4);
  std::vector<std::vector<Vertex>> empty_part{{0, 1}, {}};
  CHECK_THROWS_AS(reduced_weights(g, view, empty_part), std::invalid_argument);
  std::vector<std::vector<Vertex>> overlap{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(reduced_weights(g, view, overlap), std::invalid_argument);
}

TEST_CASE("reduced degree report: balanced all-ones and the extremal split") {
  auto ones = make_constant(16, 100, Rat(1, 2), Rat(1, 1));
  std::vector<std::vector<Vertex>> parts(4);
  for (Vertex v = 0; v < 16; ++v) parts[v / 4].push_back(v);
  auto rep = reduced_degree_report(ones, quantize(ones, 4), parts, Rat(5, 8),
                                   Rat(1, 10), {Rat(1, 100), Rat(1, 100), Rat(1, 100), Rat(1, 100)},
                                   Rat(1, 1000));
  CHECK(rep.min_reduced_degree == Rat(9, 4));  // (k-1) * 3/4
  CHECK_FALSE(rep.hypothesis_verified);

  // Extremal graph split into {U, W}: the cross pair sits in the top class.
  auto ext = make_extremal(16, 4, Rat(1, 2), 100);
  std::vector<std::vector<Vertex>> uw(2);
  for (Vertex v = 0; v < 16; ++v) uw[v < 13 ? 0 : 1].push_back(v);
  auto rw = reduced_weights(ext, quantize(ext, 4), uw);
  CHECK(rw.pair(0, 1).color_counts[3] == 39);  // 13 * 3 weight-1 edges
  CHECK(rw.pair(0, 1).w_r == Rat(3, 4));
}
