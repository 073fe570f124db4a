#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaptk/core.hpp"

namespace gaptk::tsp {

/// Two tour positions i < j whose edges (order[i], order[i+1]) and
/// (order[j], order[j+1 mod n]) intersect. The edges share no endpoint, so
/// j >= i+2 and (i, j) is never the wrap-adjacent pair (0, n-1).
struct Crossing {
  int i = 0;
  int j = 0;
};

enum class StepPolicy { Greedy, Random, Mixed };

std::optional<StepPolicy> step_policy_from_name(std::string_view name);
std::string_view step_policy_name(StepPolicy policy);

struct GreedyConfig {
  int restarts = 200;
  StepPolicy policy = StepPolicy::Greedy;
  /// Probability of taking the greedy branch per step under Mixed.
  double mixed_greedy_probability = 0.5;
  std::uint64_t rng_seed = 0;
};

/// Random-restart tour construction. Each restart starts from a uniformly
/// random vertex and extends with the configured step policy: the greedy
/// branch picks a minimum-cost unvisited vertex from the current endpoint
/// (ties broken uniformly at random), the random branch a uniformly random
/// unvisited vertex. Returns the best tour seen; never worse than the
/// incumbent when one is supplied. Restart r draws from the stream
/// mix_seed(rng_seed, r), so results are reproducible and order-independent.
Tour greedy_tour(const GapInstance& instance, const GreedyConfig& config,
                 const std::optional<Tour>& incumbent = std::nullopt);

/// First pair (lexicographic by (i, j)) of non-adjacent tour edges whose
/// closed segments intersect, or nullopt when the cycle is a Jordan simple
/// curve. Requires 2D coordinates.
std::optional<Crossing> find_crossing(const Tour& tour,
                                      const GapInstance& instance);

/// Number of intersecting non-adjacent edge pairs over the whole cycle.
int count_crossings(const Tour& tour, const GapInstance& instance);

/// Reverses tour positions i+1..j, reconnecting order[i]->order[j] and
/// order[i+1]->order[j+1]. Under a euclidean instance this strictly lowers
/// the cost for a proper crossing. Involution: applying it twice with the
/// same positions restores the tour. O(n).
Tour uncross(const Tour& tour, const Crossing& crossing,
             const GapInstance& instance);

struct SolveResult {
  Tour tour;
  std::vector<double> round_costs;
  int rounds = 0;
  bool crossing_free = false;
};

/// Driver loop: greedy_tour seeded with the incumbent, canonicalize, detect a
/// crossing; uncross and continue while one exists. Stops when the tour is a
/// Jordan simple curve or max_rounds is hit (0 means 10*n). Cost never
/// increases across rounds. Only euclidean 2D instances are accepted: under
/// other metrics a diagonal need not be longer than the sides, so uncrossing
/// carries no descent guarantee.
SolveResult solve_tsp(const GapInstance& instance, const GreedyConfig& config,
                      int max_rounds = 0);

}  // namespace gaptk::tsp
