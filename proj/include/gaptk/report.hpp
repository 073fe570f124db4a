#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gaptk::io {

/// Ordered key/value run summary printed by every CLI subcommand: plain
/// "key: value" lines by default, a JSON object behind --json. Keys appear
/// in insertion order in both renderings.
class RunReport {
public:
  using Value = std::variant<std::string, long long, double, bool,
                             std::vector<double>, std::vector<long long>>;

  void add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), Value(std::move(value)));
  }
  void add(std::string key, const char* value) {
    entries_.emplace_back(std::move(key), Value(std::string(value)));
  }
  void add(std::string key, long long value) {
    entries_.emplace_back(std::move(key), Value(value));
  }
  void add(std::string key, int value) { add(std::move(key), (long long)value); }
  void add(std::string key, std::uint64_t value) {
    add(std::move(key), static_cast<long long>(value));
  }
  void add(std::string key, double value) {
    entries_.emplace_back(std::move(key), Value(value));
  }
  void add(std::string key, bool value) {
    entries_.emplace_back(std::move(key), Value(value));
  }
  void add(std::string key, std::vector<double> value) {
    entries_.emplace_back(std::move(key), Value(std::move(value)));
  }
  void add(std::string key, std::vector<long long> value) {
    entries_.emplace_back(std::move(key), Value(std::move(value)));
  }

  std::string to_text() const;
  std::string to_json() const;

private:
  std::vector<std::pair<std::string, Value>> entries_;
};

}  // namespace gaptk::io
