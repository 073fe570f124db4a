#include "gaptk/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaptk/geometry.hpp"

namespace gaptk::tsp {

namespace {

constexpr int kMargin = 8;

struct Pixel {
  int x = 0;
  int y = 0;
};

void draw_segment(RasterImage& img, Pixel a, Pixel b) {
  // Bresenham, endpoints inclusive
  const int dx = std::abs(b.x - a.x);
  const int dy = -std::abs(b.y - a.y);
  const int sx = a.x < b.x ? 1 : -1;
  const int sy = a.y < b.y ? 1 : -1;
  int err = dx + dy;
  int x = a.x;
  int y = a.y;
  while (true) {
    img.set(x, y, Shade::Black);
    if (x == b.x && y == b.y) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

/// 4-connected fill of white pixels starting at seed.
std::int64_t flood(RasterImage& img, Pixel seed, Shade color) {
  if (img.at(seed.x, seed.y) != Shade::White) return 0;
  std::int64_t filled = 0;
  std::vector<Pixel> stack{seed};
  img.set(seed.x, seed.y, color);
  while (!stack.empty()) {
    const Pixel p = stack.back();
    stack.pop_back();
    ++filled;
    const Pixel around[4] = {
        {p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
    for (const Pixel& q : around) {
      if (img.in_bounds(q.x, q.y) && img.at(q.x, q.y) == Shade::White) {
        img.set(q.x, q.y, color);
        stack.push_back(q);
      }
    }
  }
  return filled;
}

}  // namespace

RasterVerdict two_color_raster(const Tour& tour, const GapInstance& instance,
                               int resolution_factor, int vicinity_radius) {
  if (!instance.has_coords() || instance.coord_dim() != 2)
    throw std::invalid_argument("two_color_raster: instance needs 2D coordinates");
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("two_color_raster: invalid tour");
  if (resolution_factor < 2)
    throw std::invalid_argument("two_color_raster: resolution_factor too small");
  if (vicinity_radius < 0)
    throw std::invalid_argument("two_color_raster: vicinity_radius must be >= 0");

  double min_x = instance.point(0).x, max_x = min_x;
  double min_y = instance.point(0).y, max_y = min_y;
  for (int i = 1; i < n; ++i) {
    const Point& p = instance.point(i);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  if (extent <= 0.0)
    throw std::invalid_argument("two_color_raster: degenerate point set");
  const double scale = (resolution_factor - 1) / extent;

  auto to_pixel = [&](const Point& p) {
    return Pixel{kMargin + static_cast<int>(std::lround((p.x - min_x) * scale)),
                 kMargin + static_cast<int>(std::lround((p.y - min_y) * scale))};
  };

  std::vector<Pixel> vpx(n);
  for (int i = 0; i < n; ++i) vpx[i] = to_pixel(instance.point(i));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::hypot(double(vpx[i].x - vpx[j].x),
                                  double(vpx[i].y - vpx[j].y));
      if (d < 3.0)
        throw std::invalid_argument(
            "two_color_raster: resolution too coarse, vertices closer than 3 px");
    }
  for (int i = 0; i < n; ++i) {
    const Point& a = instance.point(tour.order[i]);
    const Point& b = instance.point(tour.order[(i + 1) % n]);
    if (a.x == b.x && a.y == b.y)
      throw std::invalid_argument("two_color_raster: zero-length edge");
  }

  RasterVerdict out;
  RasterImage& img = out.image;
  img.width = static_cast<int>(std::lround((max_x - min_x) * scale)) + 2 * kMargin + 1;
  img.height = static_cast<int>(std::lround((max_y - min_y) * scale)) + 2 * kMargin + 1;
  img.px.assign(static_cast<std::size_t>(img.width) * img.height,
                static_cast<std::uint8_t>(Shade::White));

  for (int i = 0; i < n; ++i)
    draw_segment(img, vpx[tour.order[i]], vpx[tour.order[(i + 1) % n]]);

  // outside seed at the canvas corner, always white thanks to the margin
  flood(img, Pixel{0, 0}, Shade::Green);

  // inside seed: midpoint of the edge leaving vertex 0, offset along the
  // normal; if the first probe lands on black (or already-green outside),
  // try the opposite side
  const Pixel e0 = vpx[tour.order[0]];
  const Pixel e1 = vpx[tour.order[1]];
  const double ex = double(e1.x - e0.x);
  const double ey = double(e1.y - e0.y);
  const double elen = std::hypot(ex, ey);
  const double nx = -ey / elen;
  const double ny = ex / elen;

  // probe the midpoint first, then the quarter points: the midpoint can
  // coincide with a crossing whose other edge runs along the normal
  Pixel seed{-1, -1};
  for (double t : {0.5, 0.25, 0.75}) {
    const double px = e0.x + t * ex;
    const double py = e0.y + t * ey;
    for (int side : {1, -1})
      for (int step = 1; step <= 3 && seed.x < 0; ++step) {
        const Pixel c{static_cast<int>(std::lround(px + side * step * nx)),
                      static_cast<int>(std::lround(py + side * step * ny))};
        if (img.in_bounds(c.x, c.y) && img.at(c.x, c.y) == Shade::White) seed = c;
      }
    if (seed.x >= 0) break;
  }
  if (seed.x < 0)
    throw std::invalid_argument(
        "two_color_raster: no interior seed found, resolution too coarse");
  out.interior_pixels = flood(img, seed, Shade::Red);

  // per-vertex radius for the adaptive mode: wide enough for the wedge
  // angle between the vertex's two tour edges, but clear of every
  // non-incident vertex and edge so only the two flanking faces are seen
  std::vector<int> radius(n, vicinity_radius);
  if (vicinity_radius == 0) {
    for (int i = 0; i < n; ++i) {
      const int v = tour.order[i];
      const Point& p = instance.point(v);
      const Point& prev = instance.point(tour.order[(i + n - 1) % n]);
      const Point& next = instance.point(tour.order[(i + 1) % n]);
      const double a1 = std::atan2(prev.y - p.y, prev.x - p.x);
      const double a2 = std::atan2(next.y - p.y, next.x - p.x);
      double wedge = std::abs(a1 - a2);
      wedge = std::min(wedge, 2 * std::numbers::pi - wedge);
      const double opening = std::max(std::sin(wedge / 2.0), 1e-6);
      const int needed = static_cast<int>(std::ceil(2.5 / opening));

      double clear_px = kInfiniteCost;
      for (int u = 0; u < n; ++u)
        if (u != v)
          clear_px = std::min(
              clear_px, std::hypot(double(vpx[u].x - vpx[v].x),
                                   double(vpx[u].y - vpx[v].y)));
      for (int e = 0; e < n; ++e) {
        const int eu = tour.order[e];
        const int ev = tour.order[(e + 1) % n];
        if (eu == v || ev == v) continue;
        const double d = geom::point_segment_distance(
                             instance.point(v), instance.point(eu),
                             instance.point(ev)) *
                         scale;
        clear_px = std::min(clear_px, d);
      }
      const int safe = static_cast<int>(clear_px * 0.4);
      if (needed > safe)
        throw std::invalid_argument(
            "two_color_raster: resolution too coarse for the wedge at vertex " +
            std::to_string(v));
      radius[i] = std::max(1, needed);
    }
  }

  for (int i = 0; i < n; ++i) {
    const int v = tour.order[i];
    const int r = radius[i];
    bool red = false, green = false, black = false;
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int x = vpx[v].x + dx;
        const int y = vpx[v].y + dy;
        if (!img.in_bounds(x, y)) continue;
        switch (img.at(x, y)) {
          case Shade::Red: red = true; break;
          case Shade::Green: green = true; break;
          case Shade::Black: black = true; break;
          default: break;
        }
      }
    if (!(red && green && black)) out.marked_vertices.push_back(v);
  }
  std::sort(out.marked_vertices.begin(), out.marked_vertices.end());
  out.simple = out.marked_vertices.empty();
  return out;
}

int suggest_resolution(const Tour& tour, const GapInstance& instance,
                       int min_feature_px) {
  if (!instance.has_coords() || instance.coord_dim() != 2)
    throw std::invalid_argument("suggest_resolution: instance needs 2D coordinates");
  const int n = instance.size();
  if (!is_permutation(tour.order, n))
    throw std::invalid_argument("suggest_resolution: invalid tour");

  double min_x = instance.point(0).x, max_x = min_x;
  double min_y = instance.point(0).y, max_y = min_y;
  for (int i = 1; i < n; ++i) {
    const Point& p = instance.point(i);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);

  double min_feature = kInfiniteCost;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      min_feature = std::min(
          min_feature, geom::point_distance(instance.point(i), instance.point(j)));

  // clearance between non-adjacent, non-crossing edges
  for (int i = 0; i + 2 < n; ++i) {
    const Point& a1 = instance.point(tour.order[i]);
    const Point& a2 = instance.point(tour.order[i + 1]);
    for (int j = i + 2; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Point& b1 = instance.point(tour.order[j]);
      const Point& b2 = instance.point(tour.order[(j + 1) % n]);
      const double d = geom::segment_distance(a1, a2, b1, b2);
      if (d > 0.0) min_feature = std::min(min_feature, d);
    }
  }
  if (!(min_feature > 0.0) || !(extent > 0.0))
    throw std::invalid_argument("suggest_resolution: degenerate geometry");
  double scale = min_feature_px / min_feature;

  // sharp wedges need room: the adaptive vertex check wants a box that both
  // reaches the first wedge-interior pixel (about 2.5/sin(theta/2) away) and
  // stays within 0.4 of the distance to any non-incident feature
  for (int i = 0; i < n; ++i) {
    const int v = tour.order[i];
    const Point& p = instance.point(v);
    const Point& prev = instance.point(tour.order[(i + n - 1) % n]);
    const Point& next = instance.point(tour.order[(i + 1) % n]);
    const double a1 = std::atan2(prev.y - p.y, prev.x - p.x);
    const double a2 = std::atan2(next.y - p.y, next.x - p.x);
    double wedge = std::abs(a1 - a2);
    wedge = std::min(wedge, 2 * std::numbers::pi - wedge);
    const double opening = std::max(std::sin(wedge / 2.0), 1e-6);
    const double needed_px = 2.5 / opening + 4.0;

    double clearance = kInfiniteCost;
    for (int u = 0; u < n; ++u)
      if (u != v)
        clearance =
            std::min(clearance, geom::point_distance(p, instance.point(u)));
    for (int e = 0; e < n; ++e) {
      const int eu = tour.order[e];
      const int ev = tour.order[(e + 1) % n];
      if (eu == v || ev == v) continue;
      clearance = std::min(clearance, geom::point_segment_distance(
                                          p, instance.point(eu),
                                          instance.point(ev)));
    }
    scale = std::max(scale, needed_px / (0.4 * clearance));
  }
  return static_cast<int>(std::ceil(extent * scale)) + 2;
}

std::string encode_ppm(const RasterImage& image) {
  static constexpr unsigned char palette[4][3] = {
      {255, 255, 255}, {0, 0, 0}, {0, 160, 0}, {220, 0, 0}};
  std::string out = "P6\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  out.reserve(out.size() + image.px.size() * 3);
  // rows written top-down: flip y so the image appears in the usual
  // orientation for y-up coordinates
  for (int y = image.height - 1; y >= 0; --y)
    for (int x = 0; x < image.width; ++x) {
      const auto& rgb = palette[image.px[static_cast<std::size_t>(y) * image.width + x]];
      out.append(reinterpret_cast<const char*>(rgb), 3);
    }
  return out;
}

}  // namespace gaptk::tsp
