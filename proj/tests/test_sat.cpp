#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gaptk/rng.hpp"
#include "gaptk/sat.hpp"

using namespace gaptk;
using sat::SatInstance;
using sat::SatOutcome;

namespace {

/// The six-variable, four-clause worked example.
SatInstance worked_instance() {
  return SatInstance(6, {"000000", "000001", "111110", "011011"});
}

SatInstance full_coverage_2() {
  return SatInstance(2, {"00", "01", "10", "11"});
}

/// Uniformly random simple instance with m clauses (duplicates allowed).
SatInstance random_simple(int n, int m, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x726eULL));
  std::uniform_int_distribution<std::uint64_t> value(0, (1ULL << n) - 1);
  std::vector<std::string> clauses(m);
  for (std::string& c : clauses) c = sat::assignment_string(value(rng), n);
  return SatInstance(n, std::move(clauses));
}

/// Exhaustive satisfiability oracle over all 2^n assignments.
std::set<std::uint64_t> exhaustive_solutions(const SatInstance& inst) {
  std::set<std::uint64_t> good;
  for (std::uint64_t y = 0; y < (1ULL << inst.vars()); ++y)
    if (sat::evaluate(inst, y) == 1) good.insert(y);
  return good;
}

}  // namespace

TEST_SUITE_BEGIN("sat");

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(SatInstance(3, {"22"}), std::invalid_argument);   // wrong length
  CHECK_THROWS_AS(SatInstance(3, {"222"}), std::invalid_argument);  // no literal
  CHECK_THROWS_AS(SatInstance(3, {"013"}), std::invalid_argument);  // bad digit
  CHECK(SatInstance(3, {"012"}).simple() == false);
  CHECK(worked_instance().simple());
}

TEST_CASE("clause translation") {
  // (x5 v ~x4 v x1) over five variables
  CHECK(sat::clause_to_number("10221") == 106);  // radix 3
  CHECK(sat::clause_to_number("000000") == 0);   // radix 2, simple
  CHECK(sat::clause_to_number("11111") == 31);
  CHECK(sat::clause_binary_value("011011") == 27);
  CHECK_THROWS_AS(sat::clause_binary_value("10221"), std::invalid_argument);
  CHECK_THROWS_AS(sat::clause_to_number("013"), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(sat::complement(0, 6) == 63);
  CHECK(sat::complement(27, 6) == 36);  // 011011 -> 100100
  for (std::uint64_t y = 0; y < 64; ++y)
    CHECK(sat::complement(sat::complement(y, 6), 6) == y);
  CHECK_THROWS_AS(sat::complement(64, 6), std::invalid_argument);
}

TEST_CASE("assignment strings") {
  CHECK(sat::assignment_string(27, 6) == "011011");
  CHECK(sat::assignment_string(0, 3) == "000");
  CHECK(sat::clause_binary_value(sat::assignment_string(45, 7)) == 45);
}

TEST_CASE("evaluate on the worked examples") {
  CHECK(sat::evaluate(worked_instance(), 0) == 1);
  // complement(111111) = 000000 is a clause, so 111111 is blocked
  CHECK(sat::evaluate(worked_instance(), 63) == 0);

  const SatInstance general(5, {"10221", "22112", "20101"});
  CHECK(sat::evaluate(general, std::string("22211")) == 1);
  CHECK_THROWS_AS(sat::evaluate(general, std::string("2221")), std::invalid_argument);
}

TEST_CASE("blocking equivalence on random simple instances") {
  for (std::uint64_t seed = 0; seed < 27; ++seed) {
    const int n = 4 + int(seed % 9);  // up to 12
    const SatInstance inst = random_simple(n, 3 + int(seed % 17), seed);
    std::set<std::uint64_t> clause_values;
    for (const auto& c : inst.clauses())
      clause_values.insert(sat::clause_binary_value(c));
    for (std::uint64_t y = 0; y < (1ULL << n); ++y) {
      const bool blocked = clause_values.count(sat::complement(y, n)) > 0;
      CHECK(sat::evaluate(inst, y) == (blocked ? 0 : 1));
    }
  }
}

TEST_CASE("usage matrix") {
  const SatInstance general(5, {"10221", "22112", "20101"});
  const auto u = sat::usage_matrix(general);
  REQUIRE(u.size() == 3);
  REQUIRE(u[0].size() == 10);

  auto row_sum = [&](int j) {
    int s = 0;
    for (int x : u[j]) s += x;
    return s;
  };
  CHECK(row_sum(0) == 3);  // three literals in (x5 v ~x4 v x1)
  CHECK(row_sum(1) == 2);  // (x3 v x2)
  CHECK(row_sum(2) == 4);

  // clause 10221: positive x at positions 4 and 0, negated at position 3
  CHECK(u[0][4] == 1);
  CHECK(u[0][0] == 1);
  CHECK(u[0][5 + 3] == 1);
  CHECK(u[0][2] == 0);
  CHECK(u[0][5 + 2] == 0);

  const SatInstance simple = worked_instance();
  for (const auto& row : sat::usage_matrix(simple)) {
    int s = 0;
    for (int x : row) s += x;
    CHECK(s == 6);
  }

  // a variable no clause mentions has empty columns: position 1 here
  const SatInstance sparse(3, {"122", "120"});
  const auto usage = sat::usage_matrix(sparse);
  CHECK(usage[0][1] + usage[1][1] == 0);
  CHECK(usage[0][3 + 1] + usage[1][3 + 1] == 0);
}

TEST_CASE("unsatisfiable boards by coverage") {
  CHECK(sat::is_unsatisfiable_by_coverage(SatInstance(1, {"0", "1"})));
  CHECK(sat::is_unsatisfiable_by_coverage(full_coverage_2()));
  CHECK_FALSE(sat::is_unsatisfiable_by_coverage(SatInstance(2, {"00", "01", "10"})));
  // duplicates do not fake coverage
  CHECK_FALSE(sat::is_unsatisfiable_by_coverage(
      SatInstance(2, {"00", "01", "10", "10"})));
  CHECK_THROWS_AS(sat::is_unsatisfiable_by_coverage(SatInstance(2, {"02"})),
                  std::invalid_argument);
}

TEST_CASE("deterministic solver on the worked example") {
  const auto result = sat::solve_deterministic(worked_instance());
  CHECK(result.outcome == SatOutcome::Solution);
  CHECK(result.witness == 0);  // found on the first clause
  CHECK(result.marked == 0);
}

TEST_CASE("deterministic solver declares full coverage unsatisfiable") {
  const auto result = sat::solve_deterministic(full_coverage_2());
  CHECK(result.outcome == SatOutcome::Unsatisfiable);
  CHECK(result.marked == 4);
}

TEST_CASE("deterministic solver on the seven-clause ladder") {
  // clause values 7..1; the only satisfying assignment is 111 = 7, whose
  // complement 000 is no clause, so the very first clause probe succeeds
  const SatInstance inst(3, {"111", "110", "101", "100", "011", "010", "001"});
  const auto oracle = exhaustive_solutions(inst);
  CHECK(oracle == std::set<std::uint64_t>{7});
  const auto result = sat::solve_deterministic(inst);
  CHECK(result.outcome == SatOutcome::Solution);
  CHECK(result.witness == 7);
  CHECK(sat::evaluate(inst, result.witness) == 1);
}

TEST_CASE("deterministic solver probes above the marked maximum") {
  // both clauses blocked (complement-closed pair), mi = 1 skips the low
  // probe, mx+1 = 3 satisfies
  const SatInstance inst(2, {"01", "10"});
  const auto result = sat::solve_deterministic(inst);
  CHECK(result.outcome == SatOutcome::AugmentedSolution);
  CHECK(result.witness == 3);
  CHECK(sat::evaluate(inst, result.witness) == 1);
}

TEST_CASE("deterministic solver probes below the marked minimum") {
  const SatInstance inst(3, {"010", "101"});
  const auto result = sat::solve_deterministic(inst);
  CHECK(result.outcome == SatOutcome::AugmentedSolution);
  CHECK(result.witness == 1);  // mi = 2, probe mi-1
  CHECK(sat::evaluate(inst, result.witness) == 1);
}

TEST_CASE("deterministic solver falls back to the scan") {
  // clauses 00 and 11 block each other; mi = 0 and mx = 3 disable both
  // probes; the scan returns the first unmarked value
  const SatInstance inst(2, {"00", "11"});
  const auto result = sat::solve_deterministic(inst);
  CHECK(result.outcome == SatOutcome::AugmentedSolution);
  CHECK(result.witness == 1);
  CHECK(sat::evaluate(inst, result.witness) == 1);
}

TEST_CASE("probabilistic solver finds witnesses and detects coverage") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto result = sat::solve_probabilistic(worked_instance(), seed);
    CHECK(result.outcome == SatOutcome::Solution);
    CHECK(sat::evaluate(worked_instance(), result.witness) == 1);
  }
  const auto unsat = sat::solve_probabilistic(full_coverage_2(), 9);
  CHECK(unsat.outcome == SatOutcome::Unsatisfiable);
  CHECK(unsat.marked == 4);
}

TEST_CASE("solver verdicts match exhaustive evaluation") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + int(seed % 10);  // up to 12
    const int m = 1 + int(mix_seed(seed, 1) % (1ULL << n));
    const SatInstance inst = random_simple(n, m, 4000 + seed);
    const auto oracle = exhaustive_solutions(inst);

    const auto det = sat::solve_deterministic(inst);
    const auto prob = sat::solve_probabilistic(inst, seed);
    CHECK((det.outcome == SatOutcome::Unsatisfiable) == oracle.empty());
    CHECK((prob.outcome == SatOutcome::Unsatisfiable) == oracle.empty());
    if (det.outcome != SatOutcome::Unsatisfiable)
      CHECK(sat::evaluate(inst, det.witness) == 1);
    if (det.outcome == SatOutcome::AugmentedSolution) {
      std::set<std::uint64_t> clause_values;
      for (const auto& c : inst.clauses())
        clause_values.insert(sat::clause_binary_value(c));
      CHECK(clause_values.count(sat::complement(det.witness, n)) == 0);
    }
    if (prob.outcome != SatOutcome::Unsatisfiable)
      CHECK(oracle.count(prob.witness) == 1);
  }
}

TEST_CASE("table-based solvers enforce the simple precondition and limits") {
  const SatInstance general(3, {"122"});
  CHECK_THROWS_AS(sat::solve_deterministic(general), std::invalid_argument);
  CHECK_THROWS_AS(sat::solve_probabilistic(general, 1), std::invalid_argument);
  const SatInstance wide(30, {std::string(30, '1')});
  CHECK_THROWS_AS(sat::solve_deterministic(wide), std::invalid_argument);
}

TEST_SUITE_END();
