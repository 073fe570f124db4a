#pragma once

#include <array>
#include <string>
#include <vector>

#include "gaptk/core.hpp"
#include "gaptk/ktp.hpp"

namespace gaptk::io {

/// SVG 1.1 drawing of a planar tour: edges, vertex markers and labels.
/// Byte-deterministic for fixed input (coordinates printed with 6 decimals).
std::string tour_svg(const GapInstance& instance, const Tour& tour,
                     int canvas = 800);

/// The sorted-cost-matrix diagnostic: one red dot per tour edge at
/// (rank, vertex). Dots near the left edge mean the tour uses each vertex's
/// cheapest edges.
std::string rank_profile_svg(const std::vector<std::array<int, 2>>& profile,
                             int canvas = 800);

/// Board grid plus the tour's move segments.
std::string board_tour_svg(const ktp::Board& board, const Tour& tour,
                           int cell_px = 60);

}  // namespace gaptk::io
