#pragma once

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gaptk {

/// Extended-real sentinel used on cost-matrix diagonals. IEEE infinity
/// propagates through sums, so any tour touching the diagonal prices at +inf.
inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Distance functions supported by instance constructors: euclidean (L2),
/// max (Chebyshev) and abs (L1, coordinate-wise absolute-difference sum).
enum class Metric { Euclidean, Max, Abs };

double metric_distance(const Point& a, const Point& b, Metric metric, int dim = 2);

std::string_view metric_name(Metric metric);
std::optional<Metric> metric_from_name(std::string_view name);

/// Complete-graph instance with an extended-real cost matrix. The diagonal is
/// always +inf; off-diagonal entries are finite and non-negative for
/// instances produced by this toolkit's constructors. Immutable after
/// construction and safe to share across threads.
class GapInstance {
public:
  /// Builds from a row-major n*n matrix. Coordinates are optional; when
  /// present, coord_dim must be 2 or 3 and there must be exactly n points.
  GapInstance(int n, std::vector<double> cost_row_major,
              std::vector<Point> coords = {}, int coord_dim = 0,
              std::optional<Metric> metric = std::nullopt);

  int size() const { return n_; }
  double cost(int i, int j) const {
    return cost_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& cost_matrix() const { return cost_; }

  bool has_coords() const { return coord_dim_ != 0; }
  int coord_dim() const { return coord_dim_; }
  const Point& point(int i) const { return coords_[i]; }
  std::span<const Point> points() const { return coords_; }

  /// Metric declared at construction; empty for hand-built matrices (board
  /// instances, rounded TSPLIB costs).
  std::optional<Metric> metric() const { return metric_; }

  /// Neighbors of vertex i in ascending (cost, index) order, diagonal
  /// excluded. Precomputed once; greedy steps and rank profiles scan this.
  std::span<const int> neighbors_by_cost(int i) const {
    return {sorted_.data() + static_cast<std::size_t>(i) * (n_ - 1),
            static_cast<std::size_t>(n_ - 1)};
  }

private:
  int n_ = 0;
  std::vector<double> cost_;
  std::vector<Point> coords_;
  int coord_dim_ = 0;
  std::optional<Metric> metric_;
  std::vector<int> sorted_;
};

/// Hamiltonian cycle as a vertex permutation; the closing edge from the last
/// vertex back to the first is implicit. Cost is cached at construction.
struct Tour {
  std::vector<int> order;
  double cost = kInfiniteCost;
};

/// Metric instance over 2D or 3D points: symmetric matrix, +inf diagonal.
/// Throws on fewer than 3 points or non-finite coordinates.
GapInstance build_instance(const std::vector<Point>& points, Metric metric,
                           int dim = 2);

bool is_permutation(std::span<const int> order, int n);

/// Sum of the n consecutive edge costs including the closing edge.
/// Throws if order is not a permutation of 0..n-1.
double tour_cost(std::span<const int> order, const GapInstance& instance);

Tour make_tour(std::vector<int> order, const GapInstance& instance);

/// Rotates so vertex 0 comes first and orients so the second entry is
/// smaller than the last. Idempotent; cost unchanged.
Tour canonicalize(const Tour& tour);

/// For each vertex, the 1-based ranks of its two tour edges within that
/// vertex's ascending-sorted cost row. Rank 1 means the nearest neighbor.
/// The pair is sorted ascending. Feeds the sorted-cost-matrix diagnostic.
std::vector<std::array<int, 2>> edge_rank_profile(const Tour& tour,
                                                  const GapInstance& instance);

}  // namespace gaptk
