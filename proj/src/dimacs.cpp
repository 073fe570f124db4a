#include "gaptk/dimacs.hpp"

#include <sstream>

namespace gaptk::io {

DimacsResult parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int num_vars = -1;
  int declared_clauses = -1;
  std::vector<std::string> clauses;
  std::vector<int> literals;
  int dropped = 0;
  std::vector<std::string> warnings;

  auto flush_clause = [&]() {
    std::string digits(static_cast<std::size_t>(num_vars), '2');
    bool tautology = false;
    for (int lit : literals) {
      const int pos = std::abs(lit) - 1;
      const char sign = lit > 0 ? '1' : '0';
      char& digit = digits[static_cast<std::size_t>(num_vars - 1 - pos)];
      if (digit != '2' && digit != sign) tautology = true;
      digit = sign;
    }
    if (tautology)
      ++dropped;
    else
      clauses.push_back(std::move(digits));
    literals.clear();
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    if (line[0] == 'p') {
      std::istringstream header(line);
      std::string p, cnf;
      if (!(header >> p >> cnf >> num_vars >> declared_clauses) || cnf != "cnf")
        throw ParseError("dimacs: malformed problem line: " + line);
      if (num_vars < 1) throw ParseError("dimacs: variable count must be >= 1");
      continue;
    }
    if (num_vars < 0)
      throw ParseError("dimacs: clause before the 'p cnf' header");
    std::istringstream fields(line);
    int lit = 0;
    while (fields >> lit) {
      if (lit == 0) {
        if (!literals.empty()) flush_clause();
        continue;
      }
      if (std::abs(lit) > num_vars)
        throw ParseError("dimacs: literal " + std::to_string(lit) +
                         " outside declared range");
      literals.push_back(lit);
    }
  }
  if (num_vars < 0) throw ParseError("dimacs: missing 'p cnf' header");
  if (!literals.empty()) flush_clause();
  if (clauses.empty())
    throw ParseError("dimacs: no clauses left after parsing");
  if (declared_clauses >= 0 &&
      static_cast<int>(clauses.size()) + dropped != declared_clauses)
    warnings.push_back("dimacs: header declares " +
                       std::to_string(declared_clauses) + " clauses, read " +
                       std::to_string(clauses.size() + dropped));
  if (dropped > 0)
    warnings.push_back("dimacs: dropped " + std::to_string(dropped) +
                       " tautological clause(s)");
  return DimacsResult{sat::SatInstance(num_vars, std::move(clauses)), dropped,
                      std::move(warnings)};
}

}  // namespace gaptk::io
