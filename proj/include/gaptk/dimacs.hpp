#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gaptk/sat.hpp"
#include "gaptk/tsplib.hpp"

namespace gaptk::io {

struct DimacsResult {
  sat::SatInstance instance;
  /// Clauses holding a variable and its negation cannot be expressed in one
  /// ternary digit; they are always satisfied, so they are dropped.
  int dropped_tautologies = 0;
  std::vector<std::string> warnings;
};

/// "p cnf n m" header, 'c' comment lines, clauses as 0-terminated literal
/// lists (line breaks within a clause allowed). DIMACS variable 1 maps to
/// digit position 0, the least significant.
DimacsResult parse_dimacs(std::string_view text);

}  // namespace gaptk::io
