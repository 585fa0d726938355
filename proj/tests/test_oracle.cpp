#include <random>

#include "doctest.h"
#include "hk4/oracle.hpp"
#include "hk4/reachability.hpp"
#include "test_util.hpp"

using namespace hk4;
using namespace testutil;

TEST_CASE("factor oracle: all-ones, all-t, extremal") {
  auto ones = make_constant(8, 10, Rat(1, 2), Rat(1, 1));
  auto r = exact_factor_exists(ones);
  CHECK(r.answer_bool);
  REQUIRE(r.witness.has_value());
  CHECK(validate_factor(ones, *r.witness));
  CHECK((*r.witness)[0] == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK((*r.witness)[1] == std::array<Vertex, 4>{4, 5, 6, 7});

  auto allt = make_constant(8, 10, Rat(1, 2), Rat(1, 2));
  CHECK_FALSE(exact_factor_exists(allt).answer_bool);

  auto ext = make_extremal(8, 4, Rat(1, 2), 10);
  CHECK_FALSE(exact_factor_exists(ext).answer_bool);
}

TEST_CASE("factor oracle caps and preconditions") {
  auto g10 = make_constant(10, 10, Rat(1, 2), Rat(1, 1));
  CHECK_THROWS_AS(exact_factor_exists(g10), std::invalid_argument);  // 4 ∤ n
  auto g24 = make_constant(24, 10, Rat(1, 2), Rat(1, 1));
  CHECK_THROWS_AS(exact_factor_exists(g24), std::invalid_argument);  // over cap
  auto g16 = make_constant(16, 10, Rat(1, 2), Rat(1, 1));
  auto r = exact_factor_exists(g16);
  CHECK(r.answer_bool);
  CHECK(r.visited_states <= (1u << 16));
}

TEST_CASE("max tiling oracle: frozen values") {
  auto ones = make_constant(10, 10, Rat(1, 2), Rat(1, 1));
  auto r = exact_max_tiling(ones);
  CHECK(r.answer_int == 2);
  REQUIRE(r.witness.has_value());
  CHECK(validate_tiling(ones, *r.witness));
  CHECK((int)r.witness->size() == 2);

  // Extremal n=16: every heavy K4 intersects W, |W| = 3.
  auto ext = make_extremal(16, 4, Rat(1, 2), 10);
  auto re = exact_max_tiling(ext);
  CHECK(re.answer_int == 3);
  CHECK(validate_tiling(ext, *re.witness));

  auto allt = make_constant(8, 10, Rat(1, 2), Rat(1, 2));
  CHECK(exact_max_tiling(allt).answer_int == 0);
}

TEST_CASE("max tiling monotone under single-edge raises") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = make_random(10, 50, Rat(1, 2), "uniform", rng());
    int before = exact_max_tiling(g).answer_int;
    Vertex u = (Vertex)(rng() % 10);
    Vertex v = (Vertex)(rng() % 10);
    if (u == v) continue;
    g.set_weight_num(u, v, 50);
    CHECK(exact_max_tiling(g).answer_int >= before);
  }
}

TEST_CASE("connector oracle: trivial cases") {
  auto ones = make_constant(10, 10, Rat(1, 2), Rat(1, 1));
  auto r = exact_connector_exists(ones, 0, 1, {}, 1);
  CHECK(r.answer_bool);
  REQUIRE(r.connector_witness.has_value());
  CHECK(r.connector_witness->size() == 3);

  auto allt = make_constant(10, 10, Rat(1, 2), Rat(1, 2));
  CHECK_FALSE(exact_connector_exists(allt, 0, 1, {}, 1).answer_bool);
  CHECK_THROWS_AS(exact_connector_exists(ones, 0, 1, {}, 3),
                  std::invalid_argument);
}

TEST_CASE("connector oracle agrees with the library search on random graphs") {
  std::mt19937_64 rng(23);
  int trials = 0;
  while (trials < 200) {
    auto g = make_random(14, 20, Rat(1, 2), "uniform", rng());
    Vertex u = (Vertex)(rng() % 14);
    Vertex v = (Vertex)(rng() % 14);
    if (u == v) continue;
    std::vector<Vertex> w;
    for (Vertex x = 0; x < 14 && w.size() < 2; ++x)
      if (x != u && x != v && (rng() & 1)) w.push_back(x);
    ++trials;
    bool oracle_says = exact_connector_exists(g, u, v, w, 1).answer_bool;
    bool search_says = find_connector_s1(g, u, v, w).has_value();
    CHECK(oracle_says == search_says);
  }
}
