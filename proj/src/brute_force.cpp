#include "gaptk/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gaptk {

Tour brute_force_optimum(const GapInstance& instance, bool maximize, int limit) {
  const int n = instance.size();
  if (n > limit)
    throw std::invalid_argument("brute_force_optimum: n = " + std::to_string(n) +
                                " exceeds limit " + std::to_string(limit));

  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<int> best_order;
  double best_cost = maximize ? -kInfiniteCost : kInfiniteCost;
  std::vector<int> order(n);
  order[0] = 0;
  do {
    // Each undirected cycle appears twice; keep the direction whose first
    // step is the smaller vertex.
    if (n > 2 && perm.front() > perm.back()) continue;
    std::copy(perm.begin(), perm.end(), order.begin() + 1);
    double c = instance.cost(order[n - 1], 0);
    for (int i = 0; i + 1 < n; ++i) c += instance.cost(order[i], order[i + 1]);
    const bool better = maximize ? c > best_cost : c < best_cost;
    if (better) {
      best_cost = c;
      best_order = order;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return Tour{std::move(best_order), best_cost};
}

}  // namespace gaptk
