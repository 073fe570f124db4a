#include "gaptk/tsplib.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gaptk::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

/// Splits "KEY : value" or "KEY: value"; returns false for non-keyword lines.
bool split_keyword(const std::string& line, std::string& key, std::string& value) {
  const auto colon = line.find(':');
  if (colon == std::string::npos) return false;
  key = trim(line.substr(0, colon));
  value = trim(line.substr(colon + 1));
  return !key.empty() && key.find(' ') == std::string::npos;
}

}  // namespace

TsplibFile parse_tsplib_file(std::string_view text,
                             std::vector<std::string>* warnings) {
  TsplibFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  bool in_coords = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "EOF") break;
    if (!in_coords) {
      if (line == "NODE_COORD_SECTION") {
        in_coords = true;
        continue;
      }
      std::string key, value;
      if (!split_keyword(line, key, value))
        throw ParseError("tsplib: unexpected header line: " + line);
      if (key == "NAME") {
        file.name = value;
      } else if (key == "COMMENT") {
        file.comment = value;
      } else if (key == "TYPE") {
        if (value != "TSP")
          throw ParseError("tsplib: unsupported TYPE " + value);
      } else if (key == "DIMENSION") {
        try {
          file.dimension = std::stoi(value);
        } catch (const std::exception&) {
          throw ParseError("tsplib: bad DIMENSION value: " + value);
        }
      } else if (key == "EDGE_WEIGHT_TYPE") {
        file.edge_weight_type = value;
      } else {
        if (warnings)
          warnings->push_back("tsplib: ignoring unknown keyword " + key);
      }
      continue;
    }
    std::istringstream fields(line);
    int index = 0;
    double x = 0.0, y = 0.0;
    if (!(fields >> index >> x >> y))
      throw ParseError("tsplib: malformed coordinate line: " + line);
    if (!std::isfinite(x) || !std::isfinite(y))
      throw ParseError("tsplib: non-finite coordinate: " + line);
    file.coords.push_back(Point{x, y});
  }
  if (file.dimension <= 0) throw ParseError("tsplib: missing DIMENSION");
  if (file.edge_weight_type.empty())
    throw ParseError("tsplib: missing EDGE_WEIGHT_TYPE");
  if (file.edge_weight_type != "EUC_2D")
    throw ParseError("tsplib: unsupported EDGE_WEIGHT_TYPE " +
                     file.edge_weight_type + " (only EUC_2D)");
  if (static_cast<int>(file.coords.size()) != file.dimension)
    throw ParseError("tsplib: DIMENSION is " + std::to_string(file.dimension) +
                     " but " + std::to_string(file.coords.size()) +
                     " coordinate lines were read");
  return file;
}

GapInstance tsplib_instance(const TsplibFile& file, bool rounded) {
  if (!rounded) return build_instance(file.coords, Metric::Euclidean);
  const int n = static_cast<int>(file.coords.size());
  if (n < 3) throw ParseError("tsplib: need at least 3 cities");
  std::vector<double> cost(static_cast<std::size_t>(n) * n, kInfiniteCost);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = std::round(
          metric_distance(file.coords[i], file.coords[j], Metric::Euclidean));
      cost[static_cast<std::size_t>(i) * n + j] = d;
      cost[static_cast<std::size_t>(j) * n + i] = d;
    }
  return GapInstance(n, std::move(cost), file.coords, 2, std::nullopt);
}

GapInstance parse_tsplib(std::string_view text,
                         std::vector<std::string>* warnings, bool rounded) {
  return tsplib_instance(parse_tsplib_file(text, warnings), rounded);
}

std::string emit_tsplib(const GapInstance& instance, std::string_view name) {
  if (!instance.has_coords() || instance.coord_dim() != 2)
    throw ParseError("emit_tsplib: instance needs 2D coordinates");
  std::string out;
  out += "NAME : " + std::string(name) + "\n";
  out += "TYPE : TSP\n";
  out += "DIMENSION : " + std::to_string(instance.size()) + "\n";
  out += "EDGE_WEIGHT_TYPE : EUC_2D\n";
  out += "NODE_COORD_SECTION\n";
  char buffer[96];
  for (int i = 0; i < instance.size(); ++i) {
    // 17 significant digits round-trip doubles exactly
    std::snprintf(buffer, sizeof buffer, "%d %.17g %.17g\n", i + 1,
                  instance.point(i).x, instance.point(i).y);
    out += buffer;
  }
  out += "EOF\n";
  return out;
}

std::vector<int> parse_tour_file(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::vector<int> order;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    int value = 0;
    try {
      value = std::stoi(token);
    } catch (const std::exception&) {
      throw ParseError("tour file: bad token " + token);
    }
    if (value < 1 || value > n)
      throw ParseError("tour file: vertex " + token + " outside 1.." +
                       std::to_string(n));
    order.push_back(value - 1);
  }
  if (static_cast<int>(order.size()) == n + 1 && order.front() == order.back())
    order.pop_back();
  if (!is_permutation(order, n))
    throw ParseError("tour file: not a permutation of 1.." + std::to_string(n));
  return order;
}

}  // namespace gaptk::io
