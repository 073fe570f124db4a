#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaptk/core.hpp"

namespace gaptk::tsp {

enum class Shade : std::uint8_t { White = 0, Black = 1, Green = 2, Red = 3 };

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> px;

  Shade at(int x, int y) const {
    return static_cast<Shade>(px[static_cast<std::size_t>(y) * width + x]);
  }
  void set(int x, int y, Shade s) {
    px[static_cast<std::size_t>(y) * width + x] = static_cast<std::uint8_t>(s);
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

struct RasterVerdict {
  bool simple = false;
  /// Vertices whose vicinity missed one of red/green/black.
  std::vector<int> marked_vertices;
  /// Red pixel count, the interior-area diagnostic.
  std::int64_t interior_pixels = 0;
  RasterImage image;
};

/// Draws the cycle as 1-pixel black segments on a white canvas, floods the
/// outside green from a corner seed and the inside red from a seed just off
/// the edge leaving vertex 0, then checks that every vertex's neighborhood
/// touches red, green and black. resolution_factor is the pixel span of the
/// larger bounding-box extent; the minimum inter-vertex distance must span at
/// least 3 pixels or the call throws. vicinity_radius 1 checks the literal
/// 8-neighborhood; larger radii widen the checked box, which sharp vertex
/// angles need (the interior wedge opens fewer than one pixel per step).
/// vicinity_radius 0 picks a radius per vertex: wide enough for that vertex's
/// wedge angle yet within half the distance to any non-incident feature, so
/// the box sees exactly the two faces flanking the vertex; if those bounds
/// conflict the resolution is too coarse and the call throws.
RasterVerdict two_color_raster(const Tour& tour, const GapInstance& instance,
                               int resolution_factor, int vicinity_radius = 1);

/// Smallest resolution_factor that gives the minimum inter-vertex distance
/// and the minimum non-crossing edge clearance at least min_feature_px
/// pixels. Degenerate instances (coincident points) throw.
int suggest_resolution(const Tour& tour, const GapInstance& instance,
                       int min_feature_px = 8);

/// Binary PPM (P6) encoding of a raster image.
std::string encode_ppm(const RasterImage& image);

}  // namespace gaptk::tsp
