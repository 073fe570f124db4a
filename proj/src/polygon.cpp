#include "gaptk/polygon.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gaptk::polygon {

namespace {

void validate(const PolygonSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("polygon: need n >= 3");
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius))
    throw std::invalid_argument("polygon: radius must be positive and finite");
}

}  // namespace

std::vector<Point> regular_polygon(const PolygonSpec& spec) {
  validate(spec);
  std::vector<Point> points(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / spec.n;
    points[i] = Point{spec.radius * std::cos(angle), spec.radius * std::sin(angle)};
  }
  return points;
}

Tour min_polygon_tour(const PolygonSpec& spec, Metric metric) {
  const std::vector<Point> points = regular_polygon(spec);
  std::vector<int> order(spec.n);
  std::iota(order.begin(), order.end(), 0);
  double cost = 0.0;
  for (int i = 0; i < spec.n; ++i)
    cost += metric_distance(points[i], points[(i + 1) % spec.n], metric);
  return Tour{std::move(order), cost};
}

Tour star_tour(const PolygonSpec& spec) {
  validate(spec);
  if (spec.n % 2 == 0 || spec.n < 5)
    throw std::invalid_argument("star_tour: requires odd n >= 5");
  const std::vector<Point> points = regular_polygon(spec);
  const int k = (spec.n - 1) / 2;
  std::vector<int> order(spec.n);
  for (int i = 0; i < spec.n; ++i)
    order[i] = static_cast<int>((1LL + static_cast<long long>(i) * k) % spec.n);
  double cost = 0.0;
  for (int i = 0; i < spec.n; ++i)
    cost += metric_distance(points[order[i]], points[order[(i + 1) % spec.n]],
                            Metric::Euclidean);
  return Tour{std::move(order), cost};
}

std::vector<int> star_labels(const PolygonSpec& spec) {
  const Tour star = star_tour(spec);
  std::vector<int> labels;
  labels.reserve(spec.n + 1);
  for (int idx : star.order) labels.push_back(idx == 0 ? spec.n : idx);
  labels.push_back(labels.front());
  return labels;
}

Tour max_tour_bruteforce(const std::vector<Point>& points, Metric metric,
                         int limit) {
  return brute_force_optimum(build_instance(points, metric), true, limit);
}

}  // namespace gaptk::polygon
