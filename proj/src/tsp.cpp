#include "gaptk/tsp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gaptk/geometry.hpp"
#include "gaptk/rng.hpp"

namespace gaptk::tsp {

std::optional<StepPolicy> step_policy_from_name(std::string_view name) {
  if (name == "greedy") return StepPolicy::Greedy;
  if (name == "random") return StepPolicy::Random;
  if (name == "mixed") return StepPolicy::Mixed;
  return std::nullopt;
}

std::string_view step_policy_name(StepPolicy policy) {
  switch (policy) {
    case StepPolicy::Greedy: return "greedy";
    case StepPolicy::Random: return "random";
    case StepPolicy::Mixed: return "mixed";
  }
  return "?";
}

namespace {

void validate_config(const GreedyConfig& config) {
  if (config.restarts < 1)
    throw std::invalid_argument("greedy_tour: restarts must be >= 1");
  if (!(config.mixed_greedy_probability >= 0.0 &&
        config.mixed_greedy_probability <= 1.0))
    throw std::invalid_argument("greedy_tour: mixed probability outside [0,1]");
}

/// One restart: random start vertex, then n-1 policy steps. Tracks the
/// running cost including the closing edge.
Tour run_restart(const GapInstance& inst, const GreedyConfig& cfg, Rng& rng) {
  const int n = inst.size();
  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> visited(n, false);
  // swap-removal pool for uniform picks over unvisited vertices
  std::vector<int> pool(n);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pool[i] = pos[i] = i;

  auto take = [&](int v) {
    visited[v] = true;
    const int p = pos[v];
    const int last = pool.back();
    pool[p] = last;
    pos[last] = p;
    pool.pop_back();
    order.push_back(v);
  };

  std::uniform_int_distribution<int> start_dist(0, n - 1);
  take(start_dist(rng));

  double cost = 0.0;
  std::vector<int> ties;
  for (int step = 1; step < n; ++step) {
    const int from = order.back();
    bool greedy_step;
    switch (cfg.policy) {
      case StepPolicy::Greedy: greedy_step = true; break;
      case StepPolicy::Random: greedy_step = false; break;
      default: {
        std::bernoulli_distribution coin(cfg.mixed_greedy_probability);
        greedy_step = coin(rng);
      }
    }
    int next;
    if (greedy_step) {
      // Sorted row scan: the first unvisited entry holds the minimum cost;
      // equal-cost entries are contiguous, pick uniformly among them.
      ties.clear();
      double best = kInfiniteCost;
      for (int v : inst.neighbors_by_cost(from)) {
        if (visited[v]) continue;
        if (ties.empty()) {
          best = inst.cost(from, v);
          ties.push_back(v);
        } else if (inst.cost(from, v) == best) {
          ties.push_back(v);
        } else {
          break;
        }
      }
      if (ties.size() == 1) {
        next = ties[0];
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
        next = ties[pick(rng)];
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      next = pool[pick(rng)];
    }
    cost += inst.cost(from, next);
    take(next);
  }
  cost += inst.cost(order.back(), order.front());
  return Tour{std::move(order), cost};
}

}  // namespace

Tour greedy_tour(const GapInstance& instance, const GreedyConfig& config,
                 const std::optional<Tour>& incumbent) {
  validate_config(config);
  if (incumbent && !is_permutation(incumbent->order, instance.size()))
    throw std::invalid_argument("greedy_tour: incumbent is not a valid tour");

  std::optional<Tour> best;
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng(mix_seed(config.rng_seed, static_cast<std::uint64_t>(r)));
    Tour t = run_restart(instance, config, rng);
    if (!best || t.cost < best->cost) best = std::move(t);
  }
  if (incumbent && incumbent->cost <= best->cost) return *incumbent;
  return *best;
}

namespace {

void require_planar(const GapInstance& instance, const char* who) {
  if (!instance.has_coords() || instance.coord_dim() != 2)
    throw std::invalid_argument(std::string(who) +
                                ": instance needs 2D coordinates");
}

bool edges_adjacent(int i, int j, int n) {
  return j == i + 1 || (i == 0 && j == n - 1);
}

}  // namespace

std::optional<Crossing> find_crossing(const Tour& tour,
                                      const GapInstance& instance) {
  require_planar(instance, "find_crossing");
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("find_crossing: invalid tour");
  for (int i = 0; i + 2 < n; ++i) {
    const Point& a1 = instance.point(tour.order[i]);
    const Point& a2 = instance.point(tour.order[i + 1]);
    for (int j = i + 2; j < n; ++j) {
      if (edges_adjacent(i, j, n)) continue;
      const Point& b1 = instance.point(tour.order[j]);
      const Point& b2 = instance.point(tour.order[(j + 1) % n]);
      if (geom::segments_intersect(a1, a2, b1, b2)) return Crossing{i, j};
    }
  }
  return std::nullopt;
}

int count_crossings(const Tour& tour, const GapInstance& instance) {
  require_planar(instance, "count_crossings");
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("count_crossings: invalid tour");
  int count = 0;
  for (int i = 0; i + 2 < n; ++i) {
    const Point& a1 = instance.point(tour.order[i]);
    const Point& a2 = instance.point(tour.order[i + 1]);
    for (int j = i + 2; j < n; ++j) {
      if (edges_adjacent(i, j, n)) continue;
      const Point& b1 = instance.point(tour.order[j]);
      const Point& b2 = instance.point(tour.order[(j + 1) % n]);
      if (geom::segments_intersect(a1, a2, b1, b2)) ++count;
    }
  }
  return count;
}

Tour uncross(const Tour& tour, const Crossing& crossing,
             const GapInstance& instance) {
  const int n = instance.size();
  const int i = crossing.i;
  const int j = crossing.j;
  if (i < 0 || j >= n || j < i + 2 || (i == 0 && j == n - 1))
    throw std::invalid_argument("uncross: invalid crossing positions");
  std::vector<int> order = tour.order;
  std::reverse(order.begin() + i + 1, order.begin() + j + 1);
  return make_tour(std::move(order), instance);
}

SolveResult solve_tsp(const GapInstance& instance, const GreedyConfig& config,
                      int max_rounds) {
  require_planar(instance, "solve_tsp");
  if (instance.metric() != Metric::Euclidean)
    throw std::invalid_argument(
        "solve_tsp: stop condition requires a euclidean instance");
  validate_config(config);
  if (max_rounds <= 0) max_rounds = 10 * instance.size();

  SolveResult result;
  std::optional<Tour> incumbent;
  for (int round = 0; round < max_rounds; ++round) {
    GreedyConfig round_config = config;
    round_config.rng_seed = mix_seed(config.rng_seed, 0x726f756e64ULL + round);
    Tour t = greedy_tour(instance, round_config, incumbent);
    t = canonicalize(t);
    result.round_costs.push_back(t.cost);
    result.rounds = round + 1;
    const auto crossing = find_crossing(t, instance);
    if (!crossing) {
      result.tour = std::move(t);
      result.crossing_free = true;
      return result;
    }
    incumbent = uncross(t, *crossing, instance);
  }
  result.tour = *incumbent;
  result.crossing_free = !find_crossing(*incumbent, instance).has_value();
  return result;
}

}  // namespace gaptk::tsp
