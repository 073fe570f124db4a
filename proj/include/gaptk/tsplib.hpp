#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaptk/core.hpp"

namespace gaptk::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TsplibFile {
  std::string name;
  std::string comment;
  int dimension = 0;
  std::string edge_weight_type;
  std::vector<Point> coords;
};

/// Keyword/value header followed by NODE_COORD_SECTION. Unknown keywords are
/// skipped with a warning; the EOF token is optional. Only EUC_2D files are
/// accepted.
TsplibFile parse_tsplib_file(std::string_view text,
                             std::vector<std::string>* warnings = nullptr);

/// EUC_2D euclidean instance from the parsed coordinates. Costs are exact
/// real distances by default; rounded=true applies the TSPLIB
/// nearest-integer convention instead (for cross-tool cost comparisons; the
/// instance then carries no metric declaration).
GapInstance tsplib_instance(const TsplibFile& file, bool rounded = false);

GapInstance parse_tsplib(std::string_view text,
                         std::vector<std::string>* warnings = nullptr,
                         bool rounded = false);

/// TSPLIB text whose coordinates re-parse bit-exactly.
std::string emit_tsplib(const GapInstance& instance, std::string_view name);

/// Whitespace-separated 1-based vertex indices; '#' starts a comment. An
/// optional trailing repeat of the first vertex (closed-cycle style) is
/// dropped.
std::vector<int> parse_tour_file(std::string_view text, int n);

}  // namespace gaptk::io
