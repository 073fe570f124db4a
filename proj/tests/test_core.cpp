#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gaptk/brute_force.hpp"
#include "gaptk/core.hpp"
#include "gaptk/polygon.hpp"
#include "helpers.hpp"

using namespace gaptk;
using testing::random_instance;
using testing::random_order;
using testing::unit_square;

TEST_SUITE_BEGIN("core");

TEST_CASE("build_instance on the unit square") {
  const GapInstance euc = unit_square();
  CHECK(euc.size() == 4);
  CHECK(euc.cost(0, 1) == doctest::Approx(1.0));
  CHECK(euc.cost(0, 2) == doctest::Approx(std::sqrt(2.0)));

  const GapInstance cheb = unit_square(Metric::Max);
  CHECK(cheb.cost(0, 2) == doctest::Approx(1.0));

  const GapInstance l1 = unit_square(Metric::Abs);
  CHECK(l1.cost(0, 2) == doctest::Approx(2.0));

  for (int i = 0; i < 4; ++i) CHECK(euc.cost(i, i) == kInfiniteCost);
}

TEST_CASE("3D points price correctly for cost construction") {
  const std::vector<Point> corner{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  const GapInstance inst = build_instance(corner, Metric::Euclidean, 3);
  CHECK(inst.cost(0, 3) == doctest::Approx(2.0));
  CHECK(inst.cost(1, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(build_instance(corner, Metric::Max, 3).cost(1, 3) == doctest::Approx(2.0));
  CHECK(build_instance(corner, Metric::Abs, 3).cost(1, 3) == doctest::Approx(3.0));
}

TEST_CASE("build_instance rejects bad input") {
  CHECK_THROWS_AS(build_instance({Point{0, 0}, Point{1, 1}}, Metric::Euclidean),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      build_instance({Point{0, 0}, Point{1, 0},
                      Point{std::numeric_limits<double>::quiet_NaN(), 0}},
                     Metric::Euclidean),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_instance(
          {Point{0, 0}, Point{1, 0}, Point{kInfiniteCost, 0}}, Metric::Euclidean),
      std::invalid_argument);
}

TEST_CASE("tour_cost of square tours") {
  const GapInstance inst = unit_square();
  const std::vector<int> perimeter{0, 1, 2, 3};
  CHECK(tour_cost(perimeter, inst) == doctest::Approx(4.0));

  // two sides plus two diagonals, summed by hand
  const std::vector<int> crossed{0, 2, 1, 3};
  CHECK(tour_cost(crossed, inst) == doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)));

  CHECK_THROWS_AS(tour_cost(std::vector<int>{0, 1, 1, 3}, inst),
                  std::invalid_argument);
  CHECK_THROWS_AS(tour_cost(std::vector<int>{0, 1, 2}, inst),
                  std::invalid_argument);
}

TEST_CASE("tour_cost is +inf when an edge is +inf") {
  std::vector<double> cost(16, 1.0);
  for (int i = 0; i < 4; ++i) cost[i * 4 + i] = kInfiniteCost;
  cost[0 * 4 + 1] = kInfiniteCost;
  cost[1 * 4 + 0] = kInfiniteCost;
  const GapInstance inst(4, std::move(cost));
  CHECK(tour_cost(std::vector<int>{0, 1, 2, 3}, inst) == kInfiniteCost);
  CHECK(tour_cost(std::vector<int>{0, 2, 1, 3}, inst) == doctest::Approx(4.0));
}

TEST_CASE("brute force finds the square perimeter") {
  const Tour best = brute_force_optimum(unit_square());
  CHECK(best.cost == doctest::Approx(4.0));
  CHECK(best.order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("brute force matches exhaustive enumeration") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    for (int n : {5, 6}) {
      const GapInstance inst = random_instance(n, seed * 100 + n);
      CHECK(brute_force_optimum(inst).cost ==
            doctest::Approx(testing::exhaustive_optimum_cost(inst, false)));
      CHECK(brute_force_optimum(inst, true).cost ==
            doctest::Approx(testing::exhaustive_optimum_cost(inst, true)));
    }
  }
}

TEST_CASE("brute force on the regular pentagon") {
  const auto points = polygon::regular_polygon({5, 1.0});
  const GapInstance inst = build_instance(points, Metric::Euclidean);
  const Tour best = brute_force_optimum(inst);
  CHECK(best.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(best.cost == doctest::Approx(10.0 * std::sin(std::numbers::pi / 5)));

  const Tour widest = brute_force_optimum(inst, true);
  CHECK(widest.cost ==
        doctest::Approx(testing::exhaustive_optimum_cost(inst, true)));
  CHECK(widest.cost > best.cost);
}

TEST_CASE("brute force enforces its size limit") {
  const GapInstance inst = random_instance(12, 7);
  CHECK_THROWS_AS(brute_force_optimum(inst), std::invalid_argument);
  CHECK_NOTHROW(brute_force_optimum(inst, false, 12));
}

TEST_CASE("canonicalize") {
  const GapInstance inst = unit_square();
  const Tour t = make_tour({2, 0, 1, 3}, inst);
  const Tour canon = canonicalize(t);
  CHECK(canon.order == std::vector<int>{0, 1, 3, 2});
  CHECK(canon.cost == t.cost);

  CHECK(canonicalize(canon).order == canon.order);

  Tour reversed = t;
  std::reverse(reversed.order.begin(), reversed.order.end());
  CHECK(canonicalize(reversed).order == canon.order);
}

TEST_CASE("canonicalize is idempotent and cost-preserving on random tours") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GapInstance inst = random_instance(8, 500 + seed);
    const Tour t = make_tour(random_order(8, seed), inst);
    const Tour c1 = canonicalize(t);
    CHECK(c1.order[0] == 0);
    CHECK(c1.order[1] < c1.order.back());
    CHECK(c1.cost == t.cost);
    CHECK(canonicalize(c1).order == c1.order);
    CHECK(tour_cost(c1.order, inst) == doctest::Approx(t.cost));
  }
}

TEST_CASE("edge ranks on the square") {
  const GapInstance inst = unit_square();
  const auto perimeter = edge_rank_profile(make_tour({0, 1, 2, 3}, inst), inst);
  for (const auto& ranks : perimeter) {
    CHECK(ranks[0] == 1);
    CHECK(ranks[1] == 2);
  }

  // both diagonal edges rank last in their rows
  const auto crossed = edge_rank_profile(make_tour({0, 2, 1, 3}, inst), inst);
  bool has_rank3 = false;
  for (const auto& ranks : crossed) has_rank3 |= ranks[1] == 3;
  CHECK(has_rank3);
}

TEST_CASE("nearest-neighbor edges rank first") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GapInstance inst = random_instance(9, 900 + seed);
    // tour that walks to the overall nearest neighbor of vertex 0 first
    const int nearest = inst.neighbors_by_cost(0)[0];
    std::vector<int> order{0, nearest};
    for (int v = 0; v < 9; ++v)
      if (v != 0 && v != nearest) order.push_back(v);
    const auto profile = edge_rank_profile(make_tour(order, inst), inst);
    CHECK(profile[0][0] == 1);
  }
}

TEST_CASE("tour_cost is rotation and reversal invariant") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const GapInstance inst = random_instance(7, 40 + seed);
    std::vector<int> order = random_order(7, seed);
    const double reference = tour_cost(order, inst);

    std::rotate(order.begin(), order.begin() + 1 + int(seed % 6), order.end());
    CHECK(tour_cost(order, inst) == doctest::Approx(reference));

    std::reverse(order.begin(), order.end());
    CHECK(tour_cost(order, inst) == doctest::Approx(reference));
  }
}

TEST_CASE("constructed matrices are symmetric and metric-consistent") {
  for (Metric metric : {Metric::Euclidean, Metric::Max, Metric::Abs}) {
    const GapInstance inst = random_instance(10, 77, metric);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) {
        if (i == j) continue;
        CHECK(inst.cost(i, j) == inst.cost(j, i));
        CHECK(inst.cost(i, j) ==
              doctest::Approx(metric_distance(inst.point(i), inst.point(j), metric))
                  .epsilon(1e-12));
      }
    // triangle inequality on sampled triples
    Rng rng(5);
    std::uniform_int_distribution<int> pick(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == b || b == c || a == c) continue;
      CHECK(inst.cost(a, c) <= inst.cost(a, b) + inst.cost(b, c) + 1e-12);
    }
  }
}

TEST_SUITE_END();
