#pragma once

#include <utility>
#include <vector>

#include "gaptk/core.hpp"
#include "gaptk/tsp.hpp"

namespace gaptk::ktp {

/// Chessboard of rows x cols squares. Squares carry 1-based integer
/// coordinates (row, col) and linearize row-major to vertices 0..rows*cols-1.
struct Board {
  int rows = 0;
  int cols = 0;
  int squares() const { return rows * cols; }
};

struct Square {
  int row = 0;
  int col = 0;
};

Square square_of(const Board& board, int vertex);
int vertex_of(const Board& board, Square square);

/// True iff the squared coordinate distance between the squares equals 5.
bool is_knight_move(Square a, Square b);

/// Pricing of knight moves. The uniform mode charges every knight move the
/// same constant. The quadrant mode follows the three per-quadrant behaviors
/// of the knight inside each 4x4 block: the block's sixteen squares split
/// into two diagonal rhombi and two squares, each a 4-cycle of knight moves;
/// a move between two squares of the same 4-cycle gets that cycle's constant
/// and everything else the default. Which behavior maps to which constant is
/// a tuning choice, so the classifier is a policy behind knight_move_cost and
/// uniform pricing stays the default.
struct EulerScheme {
  enum class Mode { Uniform, Quadrant };
  Mode mode = Mode::Uniform;
  double uniform_c1 = 0.04;
  double quadrant_main_rhombus = 0.01;  // direction (-1,-1) to (1,1)
  double quadrant_anti_rhombus = 0.03;  // direction (-1,1) to (1,-1)
  double quadrant_square = 0.02;
  double quadrant_default = 0.04;

  /// Largest constant a knight move can be charged under this scheme.
  double max_constant() const;
};

double knight_move_cost(const EulerScheme& scheme, Square a, Square b);

/// The knight-biased cost: the scheme constant for knight moves, +inf on the
/// diagonal, true distance plus 4 otherwise. Any single non-knight edge
/// already costs more than 4, so a cycle cheaper than 4 is all knight moves.
double euler_distance(Square a, Square b, const EulerScheme& scheme);

/// (rows*cols)^2 matrix of euler distances with square centers as
/// coordinates. Throws when the board has fewer than 4 squares or when a
/// scheme constant is not below 4/(rows*cols), which would break the
/// cost-below-4 stop condition.
GapInstance build_board_instance(const Board& board, const EulerScheme& scheme);

/// Parity screen: false when rows*cols is odd (a knight alternates square
/// colors, so a closed tour needs equally many of each). A true result is
/// only the necessary-condition pass; even area does not guarantee a tour
/// (4x4 has none).
bool closed_tour_feasible(const Board& board);

struct KnightReport {
  int knight_edges = 0;
  std::vector<std::pair<int, int>> non_knight_edges;  // vertex pairs
  int crossing_count = 0;
};

/// Flags every non-knight edge of the cycle and counts geometric
/// self-intersections of the drawn tour.
KnightReport verify_knight_cycle(const Tour& tour, const Board& board);

struct KtpResult {
  Tour tour;
  KnightReport report;
  /// True when the returned cost is below 4, i.e. a closed knight tour.
  bool proved = false;
  bool parity_feasible = false;
  long long restarts_used = 0;
};

/// Repeats greedy restarts until the tour costs less than 4 or the restart
/// budget runs out. Budget exhaustion returns the best tour found with
/// proved=false rather than an error; odd boards always end that way.
KtpResult solve_ktp(const Board& board, const EulerScheme& scheme,
                    const tsp::GreedyConfig& config, long long restart_budget);

}  // namespace gaptk::ktp
