#include "gaptk/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gaptk {

double metric_distance(const Point& a, const Point& b, Metric metric, int dim) {
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  const double dz = dim == 3 ? std::abs(a.z - b.z) : 0.0;
  switch (metric) {
    case Metric::Euclidean:
      return std::sqrt(dx * dx + dy * dy + dz * dz);
    case Metric::Max:
      return std::max({dx, dy, dz});
    case Metric::Abs:
      return dx + dy + dz;
  }
  throw std::logic_error("unknown metric");
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::Euclidean: return "euclidean";
    case Metric::Max: return "max";
    case Metric::Abs: return "abs";
  }
  return "?";
}

std::optional<Metric> metric_from_name(std::string_view name) {
  if (name == "euclidean" || name == "euc") return Metric::Euclidean;
  if (name == "max") return Metric::Max;
  if (name == "abs") return Metric::Abs;
  return std::nullopt;
}

GapInstance::GapInstance(int n, std::vector<double> cost_row_major,
                         std::vector<Point> coords, int coord_dim,
                         std::optional<Metric> metric)
    : n_(n),
      cost_(std::move(cost_row_major)),
      coords_(std::move(coords)),
      coord_dim_(coord_dim),
      metric_(metric) {
  if (n_ < 3) throw std::invalid_argument("GapInstance: need at least 3 vertices");
  if (cost_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("GapInstance: cost matrix is not n*n");
  if (!coords_.empty()) {
    if (static_cast<int>(coords_.size()) != n_)
      throw std::invalid_argument("GapInstance: coordinate count != n");
    if (coord_dim_ != 2 && coord_dim_ != 3)
      throw std::invalid_argument("GapInstance: coord_dim must be 2 or 3");
  } else {
    coord_dim_ = 0;
  }
  for (int i = 0; i < n_; ++i) {
    if (cost(i, i) != kInfiniteCost)
      throw std::invalid_argument("GapInstance: diagonal must be +inf");
    for (int j = 0; j < n_; ++j) {
      if (std::isnan(cost(i, j)))
        throw std::invalid_argument("GapInstance: NaN cost entry");
    }
  }

  sorted_.resize(static_cast<std::size_t>(n_) * (n_ - 1));
  std::vector<int> row(n_ - 1);
  for (int i = 0; i < n_; ++i) {
    int k = 0;
    for (int j = 0; j < n_; ++j)
      if (j != i) row[k++] = j;
    std::sort(row.begin(), row.end(), [&](int a, int b) {
      const double ca = cost(i, a);
      const double cb = cost(i, b);
      if (ca != cb) return ca < cb;
      return a < b;
    });
    std::copy(row.begin(), row.end(),
              sorted_.begin() + static_cast<std::size_t>(i) * (n_ - 1));
  }
}

GapInstance build_instance(const std::vector<Point>& points, Metric metric,
                           int dim) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw std::invalid_argument("build_instance: need at least 3 points");
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("build_instance: dim must be 2 or 3");
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) ||
        (dim == 3 && !std::isfinite(p.z)))
      throw std::invalid_argument("build_instance: non-finite coordinate");
  }
  std::vector<double> cost(static_cast<std::size_t>(n) * n, kInfiniteCost);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = metric_distance(points[i], points[j], metric, dim);
      cost[static_cast<std::size_t>(i) * n + j] = d;
      cost[static_cast<std::size_t>(j) * n + i] = d;
    }
  return GapInstance(n, std::move(cost), points, dim, metric);
}

bool is_permutation(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

double tour_cost(std::span<const int> order, const GapInstance& instance) {
  const int n = instance.size();
  if (!is_permutation(order, n))
    throw std::invalid_argument("tour_cost: order is not a permutation of 0..n-1");
  double total = 0.0;
  for (int i = 0; i + 1 < n; ++i) total += instance.cost(order[i], order[i + 1]);
  total += instance.cost(order[n - 1], order[0]);
  return total;
}

Tour make_tour(std::vector<int> order, const GapInstance& instance) {
  const double c = tour_cost(order, instance);
  return Tour{std::move(order), c};
}

Tour canonicalize(const Tour& tour) {
  const int n = static_cast<int>(tour.order.size());
  const auto zero = std::find(tour.order.begin(), tour.order.end(), 0);
  if (zero == tour.order.end())
    throw std::invalid_argument("canonicalize: vertex 0 missing from tour");
  std::vector<int> rotated(n);
  const int offset = static_cast<int>(zero - tour.order.begin());
  for (int i = 0; i < n; ++i) rotated[i] = tour.order[(offset + i) % n];
  if (n > 2 && rotated[1] > rotated[n - 1])
    std::reverse(rotated.begin() + 1, rotated.end());
  return Tour{std::move(rotated), tour.cost};
}

std::vector<std::array<int, 2>> edge_rank_profile(const Tour& tour,
                                                  const GapInstance& instance) {
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("edge_rank_profile: invalid tour");
  // position of each neighbor within the sorted row, 1-based
  std::vector<int> rank_of(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const auto row = instance.neighbors_by_cost(i);
    for (int r = 0; r < n - 1; ++r)
      rank_of[static_cast<std::size_t>(i) * n + row[r]] = r + 1;
  }
  std::vector<std::array<int, 2>> profile(n);
  for (int i = 0; i < n; ++i) {
    const int v = tour.order[i];
    const int prev = tour.order[(i + n - 1) % n];
    const int next = tour.order[(i + 1) % n];
    int a = rank_of[static_cast<std::size_t>(v) * n + prev];
    int b = rank_of[static_cast<std::size_t>(v) * n + next];
    if (a > b) std::swap(a, b);
    profile[v] = {a, b};
  }
  return profile;
}

}  // namespace gaptk
