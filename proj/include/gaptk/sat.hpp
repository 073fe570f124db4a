#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaptk::sat {

/// Largest variable count for which the 2^n table-based operations run;
/// evaluation and clause translation work beyond it.
inline constexpr int kTableBitsLimit = 24;

/// n boolean variables and m clauses, each clause a ternary digit string of
/// length n: digit 0 a negated literal, 1 a positive literal, 2 an absent
/// variable. The most significant (leftmost) digit belongs to variable
/// position n-1. An instance is "simple" when no digit 2 appears, i.e.
/// every clause mentions every variable.
class SatInstance {
public:
  SatInstance(int num_vars, std::vector<std::string> clauses);

  int vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::string& clause(int j) const { return clauses_[j]; }
  const std::vector<std::string>& clauses() const { return clauses_; }
  bool simple() const { return simple_; }

private:
  int num_vars_ = 0;
  std::vector<std::string> clauses_;
  bool simple_ = false;
};

/// Digit of a clause (or assignment string) at variable position p; position
/// 0 is the least significant, rightmost character.
inline char digit_at(const std::string& digits, int position) {
  return digits[digits.size() - 1 - static_cast<std::size_t>(position)];
}

/// Positional value of the clause string: radix 3 for general clauses,
/// radix 2 once no digit 2 appears.
std::uint64_t clause_to_number(const std::string& clause);

/// Radix-2 value of a simple clause; throws when a digit 2 is present.
std::uint64_t clause_binary_value(const std::string& clause);

/// Binary digit string of y over n bits, most significant first.
std::string assignment_string(std::uint64_t y, int n);

/// Bitwise complement within n bits. Involution.
std::uint64_t complement(std::uint64_t y, int n);

/// 1 iff for every clause some position holds a 0/1 digit equal to the
/// assignment's digit there. Binary-assignment form, for simple instances
/// and full assignments.
int evaluate(const SatInstance& instance, std::uint64_t y);

/// Ternary-assignment form: digit 2 marks an unassigned variable and never
/// matches, so partial assignments of general instances can be tested.
int evaluate(const SatInstance& instance, const std::string& assignment);

/// m x 2n 0/1 matrix: column p flags the positive literal of variable p,
/// column n+p the negated one. Row sums are clause widths, column sums
/// per-literal usage counts.
std::vector<std::vector<int>> usage_matrix(const SatInstance& instance);

/// True iff the distinct clause values of a simple instance cover all of
/// [0, 2^n): then every assignment is blocked by its complementary clause.
bool is_unsatisfiable_by_coverage(const SatInstance& instance);

enum class SatOutcome {
  Solution,            ///< witness satisfies the instance
  AugmentedSolution,   ///< witness found by probing beyond the clause values;
                       ///< satisfies the instance extended with its own formula
                       ///< (and, for simple instances, the instance itself)
  Unsatisfiable,
};

struct SolveResult {
  SatOutcome outcome = SatOutcome::Unsatisfiable;
  std::uint64_t witness = 0;
  /// Distinct values marked before the run ended.
  std::uint64_t marked = 0;
};

/// Mark-table solver: walks the clause values first, then probes min-1 and
/// max+1, then scans for the first unmarked value. Declares unsatisfiable
/// exactly when all 2^n values were marked.
SolveResult solve_deterministic(const SatInstance& instance,
                                int table_bits_limit = kTableBitsLimit);

/// Samples uniformly from the not-yet-marked values (rejection-free, so at
/// most 2^n evaluations) until a satisfying one appears or everything is
/// marked.
SolveResult solve_probabilistic(const SatInstance& instance, std::uint64_t seed,
                                int table_bits_limit = kTableBitsLimit);

}  // namespace gaptk::sat
