#include "gaptk/sat.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaptk/rng.hpp"

namespace gaptk::sat {

SatInstance::SatInstance(int num_vars, std::vector<std::string> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1) throw std::invalid_argument("SatInstance: need >= 1 variable");
  if (clauses_.empty()) throw std::invalid_argument("SatInstance: no clauses");
  simple_ = true;
  for (const std::string& c : clauses_) {
    if (static_cast<int>(c.size()) != num_vars_)
      throw std::invalid_argument("SatInstance: clause length != variable count");
    bool has_literal = false;
    for (char d : c) {
      if (d != '0' && d != '1' && d != '2')
        throw std::invalid_argument("SatInstance: clause digit must be 0, 1 or 2");
      if (d != '2') has_literal = true;
      if (d == '2') simple_ = false;
    }
    if (!has_literal)
      throw std::invalid_argument("SatInstance: clause mentions no variable");
  }
}

std::uint64_t clause_to_number(const std::string& clause) {
  bool simple = true;
  for (char d : clause) {
    if (d != '0' && d != '1' && d != '2')
      throw std::invalid_argument("clause_to_number: bad digit");
    if (d == '2') simple = false;
  }
  const std::uint64_t radix = simple ? 2 : 3;
  std::uint64_t value = 0;
  for (char d : clause) value = value * radix + static_cast<std::uint64_t>(d - '0');
  return value;
}

std::uint64_t clause_binary_value(const std::string& clause) {
  std::uint64_t value = 0;
  for (char d : clause) {
    if (d != '0' && d != '1')
      throw std::invalid_argument("clause_binary_value: clause is not simple");
    value = value * 2 + static_cast<std::uint64_t>(d - '0');
  }
  return value;
}

std::string assignment_string(std::uint64_t y, int n) {
  std::string digits(static_cast<std::size_t>(n), '0');
  for (int p = 0; p < n; ++p)
    if (y >> p & 1) digits[static_cast<std::size_t>(n - 1 - p)] = '1';
  return digits;
}

std::uint64_t complement(std::uint64_t y, int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("complement: bad bit count");
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  if (y > mask) throw std::invalid_argument("complement: value out of range");
  return ~y & mask;
}

int evaluate(const SatInstance& instance, std::uint64_t y) {
  const int n = instance.vars();
  if (n > 63)
    throw std::invalid_argument("evaluate: binary form limited to 63 variables");
  if (y >= (std::uint64_t{1} << n))
    throw std::invalid_argument("evaluate: assignment out of range");
  for (const std::string& clause : instance.clauses()) {
    bool matched = false;
    for (int p = 0; p < n && !matched; ++p) {
      const char d = digit_at(clause, p);
      if (d == '2') continue;
      matched = (d - '0') == static_cast<int>(y >> p & 1);
    }
    if (!matched) return 0;
  }
  return 1;
}

int evaluate(const SatInstance& instance, const std::string& assignment) {
  const int n = instance.vars();
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("evaluate: assignment length != variable count");
  for (char d : assignment)
    if (d != '0' && d != '1' && d != '2')
      throw std::invalid_argument("evaluate: bad assignment digit");
  for (const std::string& clause : instance.clauses()) {
    bool matched = false;
    for (int p = 0; p < n && !matched; ++p) {
      const char d = digit_at(clause, p);
      const char a = digit_at(assignment, p);
      if (d == '2' || a == '2') continue;
      matched = d == a;
    }
    if (!matched) return 0;
  }
  return 1;
}

std::vector<std::vector<int>> usage_matrix(const SatInstance& instance) {
  const int n = instance.vars();
  std::vector<std::vector<int>> u(instance.num_clauses(),
                                  std::vector<int>(2 * n, 0));
  for (int j = 0; j < instance.num_clauses(); ++j)
    for (int p = 0; p < n; ++p) {
      const char d = digit_at(instance.clause(j), p);
      if (d == '1') u[j][p] = 1;
      if (d == '0') u[j][n + p] = 1;
    }
  return u;
}

namespace {

void require_simple_table(const SatInstance& instance, int table_bits_limit,
                          const char* who) {
  if (!instance.simple())
    throw std::invalid_argument(std::string(who) + ": instance is not simple");
  if (instance.vars() > table_bits_limit)
    throw std::invalid_argument(std::string(who) +
                                ": variable count exceeds the 2^n table limit");
}

}  // namespace

bool is_unsatisfiable_by_coverage(const SatInstance& instance) {
  require_simple_table(instance, kTableBitsLimit, "is_unsatisfiable_by_coverage");
  const std::uint64_t universe = std::uint64_t{1} << instance.vars();
  std::vector<bool> seen(universe, false);
  std::uint64_t distinct = 0;
  for (const std::string& clause : instance.clauses()) {
    const std::uint64_t k = clause_binary_value(clause);
    if (!seen[k]) {
      seen[k] = true;
      ++distinct;
    }
  }
  return distinct == universe;
}

SolveResult solve_deterministic(const SatInstance& instance,
                                int table_bits_limit) {
  require_simple_table(instance, table_bits_limit, "solve_deterministic");
  const int n = instance.vars();
  const std::uint64_t universe = std::uint64_t{1} << n;

  std::vector<bool> marked(universe, false);
  std::uint64_t mi = universe;
  std::uint64_t mx = 0;
  bool any = false;
  std::uint64_t ct = 0;

  for (const std::string& clause : instance.clauses()) {
    const std::uint64_t k = clause_binary_value(clause);
    if (marked[k]) continue;
    if (evaluate(instance, k) == 1)
      return SolveResult{SatOutcome::Solution, k, ct};
    marked[k] = true;
    ++ct;
    mi = std::min(mi, k);
    mx = any ? std::max(mx, k) : k;
    any = true;
  }

  if (ct == universe)
    return SolveResult{SatOutcome::Unsatisfiable, 0, ct};

  if (mi > 1 && evaluate(instance, mi - 1) == 1)
    return SolveResult{SatOutcome::AugmentedSolution, mi - 1, ct};
  if (mx < universe - 1 && evaluate(instance, mx + 1) == 1)
    return SolveResult{SatOutcome::AugmentedSolution, mx + 1, ct};

  for (std::uint64_t i = 0; i < universe; ++i)
    if (!marked[i]) return SolveResult{SatOutcome::AugmentedSolution, i, ct};

  return SolveResult{SatOutcome::Unsatisfiable, 0, ct};
}

SolveResult solve_probabilistic(const SatInstance& instance, std::uint64_t seed,
                                int table_bits_limit) {
  require_simple_table(instance, table_bits_limit, "solve_probabilistic");
  const int n = instance.vars();
  const std::uint64_t universe = std::uint64_t{1} << n;

  // the unmarked set, kept contiguous for uniform rejection-free draws
  std::vector<std::uint64_t> pool(universe);
  for (std::uint64_t i = 0; i < universe; ++i) pool[i] = i;

  Rng rng(mix_seed(seed, 0x736174ULL));
  std::uint64_t ct = 0;
  while (!pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t idx = pick(rng);
    const std::uint64_t k = pool[idx];
    if (evaluate(instance, k) == 1)
      return SolveResult{SatOutcome::Solution, k, ct};
    pool[idx] = pool.back();
    pool.pop_back();
    ++ct;
  }
  return SolveResult{SatOutcome::Unsatisfiable, 0, ct};
}

}  // namespace gaptk::sat
