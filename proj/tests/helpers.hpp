#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "gaptk/core.hpp"
#include "gaptk/rng.hpp"

namespace gaptk::testing {

inline std::vector<Point> random_points(int n, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x7074ULL));
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point> points(n);
  for (Point& p : points) p = Point{coord(rng), coord(rng)};
  return points;
}

inline GapInstance random_instance(int n, std::uint64_t seed,
                                   Metric metric = Metric::Euclidean) {
  return build_instance(random_points(n, seed), metric);
}

inline std::vector<int> random_order(int n, std::uint64_t seed) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(mix_seed(seed, 0x6f72ULL));
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

inline GapInstance unit_square(Metric metric = Metric::Euclidean) {
  return build_instance(
      {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}, metric);
}

/// Independent optimum oracle: evaluates every one of the n! vertex
/// permutations, no symmetry shortcuts. Only for tiny n.
inline double exhaustive_optimum_cost(const GapInstance& inst, bool maximize) {
  const int n = inst.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = maximize ? -kInfiniteCost : kInfiniteCost;
  do {
    double c = inst.cost(order[n - 1], order[0]);
    for (int i = 0; i + 1 < n; ++i) c += inst.cost(order[i], order[i + 1]);
    best = maximize ? std::max(best, c) : std::min(best, c);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace gaptk::testing
