#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "hk4/graph.hpp"
#include "test_util.hpp"

using namespace hk4;
using namespace testutil;

TEST_CASE("extremal construction: degrees match the closed form") {
  // r=4, n=8, t=1/2: |U|=7, |W|=1; inside U the degree is t*(|U|-1) + |W|.
  auto g = make_extremal(8, 4, Rat(1, 2), 10);
  CHECK(extremal_u_size(8, 4) == 7);
  CHECK(weighted_degree(g, 0) == Rat(4, 1));   // vertex in U
  CHECK(weighted_degree(g, 7) == Rat(7, 1));   // the W vertex sees weight 1
  auto d = min_weighted_degree(g);
  CHECK(Rat(d.min_num, g.denom()) == Rat(4, 1));
  CHECK(d.argmin == 0);  // lowest-index tie-break, argmin in U

  // r=3, n=12, t=1/4: delta = (1/3 + (2/3)(1/4))*12 - 1 = 5.
  auto g3 = make_extremal(12, 3, Rat(1, 4), 8);
  auto d3 = min_weighted_degree(g3);
  CHECK(Rat(d3.min_num, g3.denom()) == Rat(5, 1));
  CHECK(d3.argmin < extremal_u_size(12, 3));
}

TEST_CASE("extremal degree identity holds exactly over a grid") {
  for (int r : {3, 4}) {
    for (int n : {r * 2, r * 3, r * 4}) {
      for (Rat t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
        auto g = make_extremal(n, r, t, 1000000);
        auto d = min_weighted_degree(g);
        // delta^w = (1/r + (1-1/r)t) n - 1, cross-multiplied exactly.
        Rat expect = (Rat(1, r) + (Rat(1, 1) - Rat(1, r)) * t) * Rat::of(n) -
                     Rat(1, 1);
        CHECK(Rat(d.min_num, g.denom()) == expect);
        CHECK(d.argmin < extremal_u_size(n, r));
      }
    }
  }
}

TEST_CASE("extremal construction rejects bad parameters") {
  CHECK_THROWS_AS(make_extremal(9, 4, Rat(1, 2), 10), std::invalid_argument);
  CHECK_THROWS_AS(make_extremal(4, 4, Rat(1, 2), 10), std::invalid_argument);
  // t = 1/3 is not representable at D = 10.
  CHECK_THROWS_AS(make_extremal(8, 4, Rat(1, 3), 10), std::invalid_argument);
}

TEST_CASE("all-ones degrees") {
  auto g = make_constant(10, 4, Rat(1, 2), Rat(1, 1));
  for (Vertex v = 0; v < 10; ++v) CHECK(weighted_degree(g, v) == Rat(9, 1));
  auto g12 = make_constant(12, 4, Rat(1, 2), Rat(1, 1));
  CHECK(Rat(min_weighted_degree(g12).min_num, 4) == Rat(11, 1));
}

TEST_CASE("degrees of a random graph match independent summation") {
  auto g = make_random(10, 1000, Rat(1, 2), "uniform", 42);
  auto d = min_weighted_degree(g);
  long long best = -1;
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(weighted_degree_num(g, v) == brute_degree_num(g, v));
    CHECK(d.degree_num[v] == brute_degree_num(g, v));
    if (best < 0 || d.degree_num[v] < best) best = d.degree_num[v];
  }
  CHECK(d.min_num == best);
}

TEST_CASE("sum of degrees equals twice the edge weight total") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    auto g = make_random(14, 996, Rat(1, 2), "uniform", seed);
    long long deg_sum = 0;
    for (Vertex v = 0; v < g.size(); ++v) deg_sum += weighted_degree_num(g, v);
    long long edge_sum = 0;
    for (size_t e = 0; e < g.edge_count(); ++e) edge_sum += g.weight_num_at(e);
    CHECK(deg_sum == 2 * edge_sum);
  }
}

TEST_CASE("clique weight: frozen values and brute-force agreement") {
  auto ones = make_constant(8, 4, Rat(1, 2), Rat(1, 1));
  std::vector<Vertex> s{0, 2, 4, 6};
  CHECK(clique_weight(ones, s) == Rat(6, 1));

  auto allt = make_constant(8, 4, Rat(1, 2), Rat(1, 2));
  CHECK(clique_weight(allt, s) == Rat(3, 1));  // 6t at t=1/2

  auto g = make_random(8, 1000, Rat(1, 2), "uniform", 7);
  CHECK(clique_weight_num(g, s) == brute_set_weight_num(g, {0, 2, 4, 6}));

  std::vector<Vertex> dup{0, 0, 1, 2};
  CHECK_THROWS_AS(clique_weight_num(g, dup), std::invalid_argument);
}

TEST_CASE("heaviness is strict and monotone") {
  // A single edge at exactly t is not heavy; one grid step above is.
  auto g = graph_from_triples(4, 10, 5, {{0, 1, 5}});
  std::vector<Vertex> e{0, 1};
  CHECK_FALSE(is_heavy(g, e, 2));
  g.set_weight_num(0, 1, 6);
  CHECK(is_heavy(g, e, 2));

  // 4-set with every weight exactly t is not heavy; all-ones is.
  auto allt = make_constant(6, 10, Rat(1, 2), Rat(1, 2));
  std::vector<Vertex> s{0, 1, 2, 3};
  CHECK_FALSE(is_heavy(allt, s, 4));
  auto ones = make_constant(6, 10, Rat(1, 2), Rat(1, 1));
  CHECK(is_heavy(ones, s, 4));

  // Raising any single edge weight never flips heavy -> not heavy.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = make_random(6, 100, Rat(1, 2), "uniform", rng());
    bool before = is_heavy(r, s, 4);
    Vertex u = (Vertex)(rng() % 4);
    Vertex v = (Vertex)(rng() % 4);
    if (u == v) continue;
    long long w = r.weight_num(s[u], s[v]);
    r.set_weight_num(s[u], s[v], std::min<long long>(100, w + 1 + (long long)(rng() % 20)));
    if (before) CHECK(is_heavy(r, s, 4));
  }
}

TEST_CASE("crossing weight") {
  auto ones = make_constant(9, 4, Rat(1, 2), Rat(1, 1));
  std::vector<Vertex> a{0, 1, 2}, b{3, 4, 5, 6};
  CHECK(crossing_weight(ones, a, b) == Rat(12, 1));
  std::vector<Vertex> u{0}, v{5};
  CHECK(crossing_weight_num(ones, u, v) == ones.weight_num(0, 5));

  auto g = make_random(9, 50, Rat(1, 2), "uniform", 9);
  CHECK(crossing_weight_num(g, a, b) == brute_cross_num(g, {0, 1, 2}, {3, 4, 5, 6}));

  std::vector<Vertex> overlap{2, 3};
  CHECK_THROWS_AS(crossing_weight_num(g, a, overlap), std::invalid_argument);
}

TEST_CASE("random generator is reproducible and in range") {
  auto a = make_random(12, 1000000, Rat(1, 2), "uniform", 7);
  auto b = make_random(12, 1000000, Rat(1, 2), "uniform", 7);
  for (size_t e = 0; e < a.edge_count(); ++e) {
    CHECK(a.weight_num_at(e) == b.weight_num_at(e));
    CHECK(a.weight_num_at(e) >= 0);
    CHECK(a.weight_num_at(e) <= 1000000);
  }
  auto c = make_random(12, 1000000, Rat(1, 2), "uniform", 8);
  bool any_diff = false;
  for (size_t e = 0; e < a.edge_count(); ++e)
    any_diff = any_diff || a.weight_num_at(e) != c.weight_num_at(e);
  CHECK(any_diff);
  CHECK_THROWS_AS(make_random(12, 100, Rat(1, 2), "gaussian", 7),
                  std::invalid_argument);
}

TEST_CASE("min-degree generator meets the bound exactly") {
  for (uint64_t seed : {1u, 5u, 9u}) {
    auto g = make_random_with_min_degree(60, 1000, Rat(1, 2), Rat(1, 20), seed);
    CHECK(meets_degree_condition(g, Rat(1, 20)));
    auto d = min_weighted_degree(g);
    Rat bound = (Rat(1, 4) + Rat(3, 4) * Rat(1, 2) + Rat(1, 20)) * Rat::of(60);
    CHECK(Rat(d.min_num, g.denom()) >= bound);
  }
  // Required degree above n-1 is infeasible.
  CHECK_THROWS_AS(make_random_with_min_degree(8, 100, Rat(1, 2), Rat(1, 1), 1),
                  std::invalid_argument);
  // Negative mu weakens the target; generation must still succeed.
  auto weak = make_random_with_min_degree(20, 1000, Rat(1, 2), Rat(-1, 4), 3);
  CHECK(weak.size() == 20);
}

TEST_CASE("graph file round trip, text and json") {
  auto g = make_random(9, 512, Rat(1, 4), "uniform", 3);
  for (bool json : {false, true}) {
    std::string path = json ? "/tmp/hk4_test_graph.json" : "/tmp/hk4_test_graph.hwg";
    save_graph(g, path, json);
    auto h = load_graph(path);
    CHECK(h.size() == g.size());
    CHECK(h.denom() == g.denom());
    CHECK(h.t_num() == g.t_num());
    for (size_t e = 0; e < g.edge_count(); ++e)
      CHECK(h.weight_num_at(e) == g.weight_num_at(e));
    std::remove(path.c_str());
  }
}

TEST_CASE("graph file errors name the problem") {
  {
    std::ofstream out("/tmp/hk4_trunc.hwg");
    out << "HWG1 4 10 5\n1 2 3\n";  // needs 6 entries
  }
  CHECK_THROWS_WITH_AS(load_graph("/tmp/hk4_trunc.hwg"),
                       doctest::Contains("missing weight entry 3"),
                       std::runtime_error);
  {
    std::ofstream out("/tmp/hk4_bad.hwg");
    out << "HWG1 4 10 5\n1 2 3 11 4 5\n";  // 11 > D
  }
  CHECK_THROWS_WITH_AS(load_graph("/tmp/hk4_bad.hwg"),
                       doctest::Contains("outside [0, D]"), std::runtime_error);
  {
    std::ofstream out("/tmp/hk4_hdr.hwg");
    out << "XWG9 4 10 5\n";
  }
  CHECK_THROWS_WITH_AS(load_graph("/tmp/hk4_hdr.hwg"),
                       doctest::Contains("malformed header"), std::runtime_error);
  {
    std::ofstream out("/tmp/hk4_extra.hwg");
    out << "HWG1 4 10 5\n1 2 3 4 5 6 7\n";  // one too many
  }
  CHECK_THROWS_WITH_AS(load_graph("/tmp/hk4_extra.hwg"),
                       doctest::Contains("wrong edge count"), std::runtime_error);
  std::remove("/tmp/hk4_trunc.hwg");
  std::remove("/tmp/hk4_bad.hwg");
  std::remove("/tmp/hk4_hdr.hwg");
  std::remove("/tmp/hk4_extra.hwg");
}

TEST_CASE("vertex access errors") {
  auto g = make_constant(5, 10, Rat(1, 2), Rat(1, 1));
  CHECK_THROWS_AS(g.weight_num(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.weight_num(0, 5), std::out_of_range);
  CHECK_THROWS_AS(weighted_degree_num(g, -1), std::out_of_range);
}

TEST_CASE("induced subgraph preserves weights and threshold") {
  auto g = make_random(10, 100, Rat(1, 2), "uniform", 11);
  auto sub = induced_subgraph(g, {7, 2, 5});
  CHECK(sub.graph.size() == 3);
  CHECK(sub.to_parent == std::vector<Vertex>{2, 5, 7});
  CHECK(sub.graph.t_num() == g.t_num());
  CHECK(sub.graph.weight_num(0, 1) == g.weight_num(2, 5));
  CHECK(sub.graph.weight_num(1, 2) == g.weight_num(5, 7));
}
