#include "gaptk/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace gaptk::io {

namespace {

std::string fmt_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", v);
  return buffer;
}

}  // namespace

std::string RunReport::to_text() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += key;
    out += ": ";
    std::visit(
        [&out](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string>) {
            out += v;
          } else if constexpr (std::is_same_v<T, long long>) {
            out += std::to_string(v);
          } else if constexpr (std::is_same_v<T, double>) {
            out += fmt_double(v);
          } else if constexpr (std::is_same_v<T, bool>) {
            out += v ? "true" : "false";
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i) out += ' ';
              out += fmt_double(v[i]);
            }
          } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i) out += ' ';
              out += std::to_string(v[i]);
            }
          }
        },
        value);
    out += '\n';
  }
  return out;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [key, value] : entries_)
    std::visit([&](const auto& v) { j[key] = v; }, value);
  return j.dump(2) + "\n";
}

}  // namespace gaptk::io
