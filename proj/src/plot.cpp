#include "gaptk/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace gaptk::io {

namespace {

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6f", v);
  return buffer;
}

std::string svg_open(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) +
         "\" xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\">\n";
}

std::string svg_line(double x1, double y1, double x2, double y2,
                     const std::string& stroke, double width) {
  return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
         "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
         fmt(width) + "\"/>\n";
}

std::string svg_circle(double cx, double cy, double r, const std::string& fill) {
  return "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r) +
         "\" fill=\"" + fill + "\"/>\n";
}

std::string svg_text(double x, double y, const std::string& body) {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-size=\"10\" font-family=\"monospace\">" + body + "</text>\n";
}

}  // namespace

std::string tour_svg(const GapInstance& instance, const Tour& tour,
                     int canvas) {
  if (!instance.has_coords() || instance.coord_dim() != 2)
    throw std::invalid_argument("tour_svg: instance needs 2D coordinates");
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("tour_svg: invalid tour");

  double min_x = instance.point(0).x, max_x = min_x;
  double min_y = instance.point(0).y, max_y = min_y;
  for (int i = 1; i < n; ++i) {
    min_x = std::min(min_x, instance.point(i).x);
    max_x = std::max(max_x, instance.point(i).x);
    min_y = std::min(min_y, instance.point(i).y);
    max_y = std::max(max_y, instance.point(i).y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double margin = 24.0;
  const double scale = (canvas - 2 * margin) / extent;
  auto sx = [&](double x) { return margin + (x - min_x) * scale; };
  // svg y grows downward; flip so the plot reads like the plane
  auto sy = [&](double y) { return canvas - margin - (y - min_y) * scale; };

  std::string svg = svg_open(canvas, canvas);
  for (int i = 0; i < n; ++i) {
    const Point& a = instance.point(tour.order[i]);
    const Point& b = instance.point(tour.order[(i + 1) % n]);
    svg += svg_line(sx(a.x), sy(a.y), sx(b.x), sy(b.y), "black", 1.0);
  }
  for (int v = 0; v < n; ++v) {
    const Point& p = instance.point(v);
    svg += svg_circle(sx(p.x), sy(p.y), 3.0, "red");
    svg += svg_text(sx(p.x) + 4.0, sy(p.y) - 4.0, std::to_string(v + 1));
  }
  svg += "</svg>\n";
  return svg;
}

std::string rank_profile_svg(const std::vector<std::array<int, 2>>& profile,
                             int canvas) {
  const int n = static_cast<int>(profile.size());
  if (n == 0) throw std::invalid_argument("rank_profile_svg: empty profile");
  const double margin = 24.0;
  const double cell_x = (canvas - 2 * margin) / std::max(1, n - 1);
  const double cell_y = (canvas - 2 * margin) / n;

  std::string svg = svg_open(canvas, canvas);
  svg += svg_line(margin, margin, margin, canvas - margin, "gray", 1.0);
  svg += svg_line(margin, canvas - margin, canvas - margin, canvas - margin,
                  "gray", 1.0);
  for (int v = 0; v < n; ++v)
    for (int rank : profile[v]) {
      const double x = margin + (rank - 1) * cell_x;
      const double y = canvas - margin - (v + 0.5) * cell_y;
      svg += svg_circle(x, y, 2.0, "red");
    }
  svg += "</svg>\n";
  return svg;
}

std::string board_tour_svg(const ktp::Board& board, const Tour& tour,
                           int cell_px) {
  const int n = board.squares();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("board_tour_svg: invalid tour");
  const double margin = 12.0;
  const double width = margin * 2 + board.cols * cell_px;
  const double height = margin * 2 + board.rows * cell_px;
  auto cx = [&](int col) { return margin + (col - 0.5) * cell_px; };
  auto cy = [&](int row) { return height - margin - (row - 0.5) * cell_px; };

  std::string svg = svg_open(width, height);
  for (int r = 0; r <= board.rows; ++r)
    svg += svg_line(margin, margin + r * cell_px, width - margin,
                    margin + r * cell_px, "gray", 0.5);
  for (int c = 0; c <= board.cols; ++c)
    svg += svg_line(margin + c * cell_px, margin, margin + c * cell_px,
                    height - margin, "gray", 0.5);
  for (int i = 0; i < n; ++i) {
    const ktp::Square a = ktp::square_of(board, tour.order[i]);
    const ktp::Square b = ktp::square_of(board, tour.order[(i + 1) % n]);
    svg += svg_line(cx(a.col), cy(a.row), cx(b.col), cy(b.row), "black", 1.5);
  }
  for (int v = 0; v < n; ++v) {
    const ktp::Square s = ktp::square_of(board, v);
    svg += svg_circle(cx(s.col), cy(s.row), 3.0, "red");
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gaptk::io
