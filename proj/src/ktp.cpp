#include "gaptk/ktp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gaptk/rng.hpp"

namespace gaptk::ktp {

Square square_of(const Board& board, int vertex) {
  return Square{vertex / board.cols + 1, vertex % board.cols + 1};
}

int vertex_of(const Board& board, Square square) {
  return (square.row - 1) * board.cols + (square.col - 1);
}

bool is_knight_move(Square a, Square b) {
  const int di = a.row - b.row;
  const int dj = a.col - b.col;
  return di * di + dj * dj == 5;
}

double EulerScheme::max_constant() const {
  if (mode == Mode::Uniform) return uniform_c1;
  return std::max({quadrant_main_rhombus, quadrant_anti_rhombus,
                   quadrant_square, quadrant_default});
}

namespace {

// Knight moves inside one 4x4 block form four vertex-disjoint 4-cycles: a
// rhombus along the main diagonal, a rhombus along the anti-diagonal, and two
// squares. Cell -> cycle id for local coordinates 0..3.
constexpr int kCycleId[4][4] = {
    // col:  0  1  2  3          (row index downward)
    {0, 2, 3, 1},
    {3, 1, 0, 2},
    {2, 0, 1, 3},
    {1, 3, 2, 0},
};

int quadrant_cycle(Square s) {
  return kCycleId[(s.row - 1) % 4][(s.col - 1) % 4];
}

bool same_quadrant(Square a, Square b) {
  return (a.row - 1) / 4 == (b.row - 1) / 4 && (a.col - 1) / 4 == (b.col - 1) / 4;
}

}  // namespace

double knight_move_cost(const EulerScheme& scheme, Square a, Square b) {
  if (scheme.mode == EulerScheme::Mode::Uniform) return scheme.uniform_c1;
  if (same_quadrant(a, b) && quadrant_cycle(a) == quadrant_cycle(b)) {
    switch (quadrant_cycle(a)) {
      case 0: return scheme.quadrant_main_rhombus;
      case 1: return scheme.quadrant_anti_rhombus;
      default: return scheme.quadrant_square;
    }
  }
  return scheme.quadrant_default;
}

double euler_distance(Square a, Square b, const EulerScheme& scheme) {
  if (a.row == b.row && a.col == b.col) return kInfiniteCost;
  if (is_knight_move(a, b)) return knight_move_cost(scheme, a, b);
  const double di = a.row - b.row;
  const double dj = a.col - b.col;
  return std::sqrt(di * di + dj * dj) + 4.0;
}

GapInstance build_board_instance(const Board& board, const EulerScheme& scheme) {
  const int n = board.squares();
  if (board.rows < 1 || board.cols < 1 || n < 4)
    throw std::invalid_argument("build_board_instance: board too small");
  const double bound = 4.0 / n;
  if (!(scheme.max_constant() > 0.0) || scheme.max_constant() >= bound)
    throw std::invalid_argument(
        "build_board_instance: scheme constants must lie in (0, 4/(rows*cols)) "
        "so an all-knight cycle prices below 4");

  std::vector<double> cost(static_cast<std::size_t>(n) * n, kInfiniteCost);
  std::vector<Point> centers(n);
  for (int v = 0; v < n; ++v) {
    const Square s = square_of(board, v);
    centers[v] = Point{static_cast<double>(s.col), static_cast<double>(s.row)};
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v)
        cost[static_cast<std::size_t>(u) * n + v] =
            euler_distance(square_of(board, u), square_of(board, v), scheme);
  return GapInstance(n, std::move(cost), std::move(centers), 2, std::nullopt);
}

bool closed_tour_feasible(const Board& board) {
  return board.squares() % 2 == 0;
}

KnightReport verify_knight_cycle(const Tour& tour, const Board& board) {
  const int n = board.squares();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("verify_knight_cycle: invalid tour");
  KnightReport report;
  std::vector<Point> centers(n);
  for (int v = 0; v < n; ++v) {
    const Square s = square_of(board, v);
    centers[v] = Point{static_cast<double>(s.col), static_cast<double>(s.row)};
  }
  for (int i = 0; i < n; ++i) {
    const int u = tour.order[i];
    const int v = tour.order[(i + 1) % n];
    if (is_knight_move(square_of(board, u), square_of(board, v)))
      ++report.knight_edges;
    else
      report.non_knight_edges.emplace_back(u, v);
  }
  GapInstance geo = build_instance(centers, Metric::Euclidean);
  Tour t{tour.order, tour_cost(tour.order, geo)};
  report.crossing_count = tsp::count_crossings(t, geo);
  return report;
}

KtpResult solve_ktp(const Board& board, const EulerScheme& scheme,
                    const tsp::GreedyConfig& config, long long restart_budget) {
  if (restart_budget < 1)
    throw std::invalid_argument("solve_ktp: restart budget must be >= 1");
  const GapInstance instance = build_board_instance(board, scheme);

  KtpResult result;
  result.parity_feasible = closed_tour_feasible(board);

  std::optional<Tour> best;
  const long long batch_size = std::max(1, config.restarts);
  long long used = 0;
  std::uint64_t batch = 0;
  while (used < restart_budget) {
    tsp::GreedyConfig batch_config = config;
    batch_config.restarts =
        static_cast<int>(std::min<long long>(batch_size, restart_budget - used));
    batch_config.rng_seed = mix_seed(config.rng_seed, 0x6261746368ULL + batch);
    best = tsp::greedy_tour(instance, batch_config, best);
    used += batch_config.restarts;
    ++batch;
    if (best->cost < 4.0) break;
  }
  result.tour = *best;
  result.restarts_used = used;
  result.proved = result.tour.cost < 4.0;
  result.report = verify_knight_cycle(result.tour, board);
  return result;
}

}  // namespace gaptk::ktp
