#pragma once

#include <vector>

#include "gaptk/brute_force.hpp"
#include "gaptk/core.hpp"

namespace gaptk::polygon {

struct PolygonSpec {
  int n = 0;
  double radius = 1.0;
};

/// Vertices of the regular n-gon of the given radius: point i at angle
/// 2*pi*i/n, i = 0..n-1.
std::vector<Point> regular_polygon(const PolygonSpec& spec);

/// Minimum tour over a regular polygon: the identity order 0,1,...,n-1,
/// which is minimal under the euclidean, max and abs metrics alike. O(n).
Tour min_polygon_tour(const PolygonSpec& spec, Metric metric = Metric::Euclidean);

/// Maximum tour over a regular odd polygon: the star that visits index
/// (1 + i*(n-1)/2) mod n at step i. Every step advances by the same residue,
/// so each class mod n is hit exactly once. Requires odd n >= 5; no star
/// exists for even n. Cost is euclidean. O(n).
Tour star_tour(const PolygonSpec& spec);

/// 1-based vertex labels of the star sequence, with index 0 printed as n and
/// the closing return to the first label appended.
std::vector<int> star_labels(const PolygonSpec& spec);

/// Exact maximum-cost Hamiltonian cycle by enumeration; the oracle behind
/// the star claims at desk scale.
Tour max_tour_bruteforce(const std::vector<Point>& points, Metric metric,
                         int limit = kBruteForceLimit);

}  // namespace gaptk::polygon
