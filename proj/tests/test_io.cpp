#include <doctest.h>

#include <cmath>

#include "gaptk/dimacs.hpp"
#include "gaptk/plot.hpp"
#include "gaptk/report.hpp"
#include "gaptk/tsplib.hpp"
#include "helpers.hpp"

using namespace gaptk;

namespace {

const char* kSquareTsp = R"(NAME : square4
COMMENT : unit square
TYPE : TSP
DIMENSION : 4
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
1 0.0 0.0
2 1.0 0.0
3 1.0 1.0
4 0.0 1.0
EOF
)";

std::size_t count_occurrences(const std::string& text, const std::string& what) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(what); pos != std::string::npos;
       pos = text.find(what, pos + what.size()))
    ++count;
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("tsplib parsing") {
  const io::TsplibFile file = io::parse_tsplib_file(kSquareTsp);
  CHECK(file.name == "square4");
  CHECK(file.dimension == 4);
  CHECK(file.edge_weight_type == "EUC_2D");
  REQUIRE(file.coords.size() == 4);
  CHECK(file.coords[2].x == 1.0);
  CHECK(file.coords[2].y == 1.0);

  const GapInstance inst = io::parse_tsplib(kSquareTsp);
  CHECK(inst.size() == 4);
  CHECK(inst.metric() == Metric::Euclidean);
  CHECK(inst.cost(0, 2) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("tsplib rejects what it cannot represent") {
  CHECK_THROWS_WITH_AS(
      io::parse_tsplib("NAME : x\nTYPE : TSP\nDIMENSION : 3\n"
                       "EDGE_WEIGHT_TYPE : EXPLICIT\nNODE_COORD_SECTION\n"
                       "1 0 0\n2 1 0\n3 0 1\nEOF\n"),
      doctest::Contains("EXPLICIT"), io::ParseError);
  CHECK_THROWS_AS(io::parse_tsplib("NAME : x\nEDGE_WEIGHT_TYPE : EUC_2D\n"
                                   "NODE_COORD_SECTION\n1 0 0\nEOF\n"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_tsplib("DIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
                                   "NODE_COORD_SECTION\n1 0 zero\n2 1 0\n3 0 1\n"),
                  io::ParseError);
}

TEST_CASE("tsplib tolerates unknown keywords and a missing EOF") {
  std::vector<std::string> warnings;
  const GapInstance inst = io::parse_tsplib(
      "NAME : odd\nTYPE : TSP\nDIMENSION : 3\nDISPLAY_DATA_TYPE : COORD_DISPLAY\n"
      "EDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
      "1 0 0\n2 3 0\n3 0 4\n",
      &warnings);
  CHECK(inst.size() == 3);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("DISPLAY_DATA_TYPE") != std::string::npos);
}

TEST_CASE("tsplib round-trips coordinates bit-exactly") {
  const GapInstance original =
      build_instance(testing::random_points(12, 99), Metric::Euclidean);
  const std::string text = io::emit_tsplib(original, "roundtrip");
  const GapInstance parsed = io::parse_tsplib(text);
  REQUIRE(parsed.size() == original.size());
  for (int i = 0; i < original.size(); ++i) {
    CHECK(parsed.point(i).x == original.point(i).x);
    CHECK(parsed.point(i).y == original.point(i).y);
  }
}

TEST_CASE("rounded instances follow the nearest-integer convention") {
  const io::TsplibFile file = io::parse_tsplib_file(kSquareTsp);
  const GapInstance rounded = io::tsplib_instance(file, true);
  CHECK(rounded.cost(0, 2) == 1.0);  // round(sqrt 2)
  CHECK(rounded.cost(0, 1) == 1.0);
  CHECK_FALSE(rounded.metric().has_value());
}

TEST_CASE("tour files") {
  CHECK(io::parse_tour_file("1 2 3 4", 4) == std::vector<int>{0, 1, 2, 3});
  CHECK(io::parse_tour_file("2 4 1 3 2 # closed form", 4) ==
        std::vector<int>{1, 3, 0, 2});
  CHECK_THROWS_AS(io::parse_tour_file("1 2 5 4", 4), io::ParseError);
  CHECK_THROWS_AS(io::parse_tour_file("1 2 2 4", 4), io::ParseError);
}

TEST_CASE("dimacs parsing") {
  const auto board = io::parse_dimacs(
      "c the two-variable unsatisfactory board\np cnf 2 4\n"
      "-1 -2 0\n1 -2 0\n-1 2 0\n1 2 0\n");
  CHECK(board.instance.simple());
  CHECK(board.instance.num_clauses() == 4);
  CHECK(sat::is_unsatisfiable_by_coverage(board.instance));

  const auto taut = io::parse_dimacs("p cnf 2 2\n1 -1 0\n1 2 0\n");
  CHECK(taut.dropped_tautologies == 1);
  CHECK(taut.instance.num_clauses() == 1);

  // clauses split across lines, no trailing zero on the last one
  const auto split = io::parse_dimacs("p cnf 3 2\n1 2\n3 0 -1\n-2 -3 0\n");
  CHECK(split.instance.num_clauses() == 2);
  CHECK(split.instance.clause(0) == "111");

  CHECK_THROWS_AS(io::parse_dimacs("p cnf 2 1\n3 0\n"), io::ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("1 2 0\n"), io::ParseError);
}

TEST_CASE("DIMACS literals translate to ternary digit strings") {
  // (x5 v ~x4 v x1), (x3 v x2), (~x4 v x3 v ~x2 v x1) over five variables
  const auto parsed = io::parse_dimacs("p cnf 5 3\n5 -4 1 0\n3 2 0\n-4 3 -2 1 0\n");
  REQUIRE(parsed.instance.num_clauses() == 3);
  CHECK(parsed.instance.clause(0) == "10221");
  CHECK(parsed.instance.clause(1) == "22112");
  CHECK(parsed.instance.clause(2) == "20101");
  CHECK_FALSE(parsed.instance.simple());
  CHECK(sat::evaluate(parsed.instance, std::string("22211")) == 1);
}

TEST_CASE("the worked instance written as CNF translates to its numbers") {
  const auto parsed = io::parse_dimacs(
      "p cnf 6 4\n"
      "-1 -2 -3 -4 -5 -6 0\n"
      "1 -2 -3 -4 -5 -6 0\n"
      "-1 2 3 4 5 6 0\n"
      "1 2 -3 4 5 -6 0\n");
  REQUIRE(parsed.instance.simple());
  std::vector<std::uint64_t> values;
  for (const auto& clause : parsed.instance.clauses())
    values.push_back(sat::clause_binary_value(clause));
  CHECK(values == std::vector<std::uint64_t>{0, 1, 62, 27});
}

TEST_CASE("tour svg is deterministic and complete") {
  const GapInstance inst = testing::unit_square();
  const Tour t = make_tour({0, 1, 2, 3}, inst);
  const std::string svg = io::tour_svg(inst, t);
  CHECK(svg == io::tour_svg(inst, t));
  CHECK(count_occurrences(svg, "<line") == 4);
  CHECK(count_occurrences(svg, "<circle") == 4);
  CHECK(count_occurrences(svg, "<text") == 4);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("rank profile svg plots two dots per vertex") {
  const GapInstance inst = testing::unit_square();
  const auto profile = edge_rank_profile(make_tour({0, 1, 2, 3}, inst), inst);
  const std::string svg = io::rank_profile_svg(profile);
  CHECK(count_occurrences(svg, "<circle") == 8);
}

TEST_CASE("board svg draws the grid and the moves") {
  const ktp::Board board{6, 6};
  std::vector<int> order(36);
  std::iota(order.begin(), order.end(), 0);
  const std::string svg = io::board_tour_svg(board, Tour{order, 0.0});
  CHECK(count_occurrences(svg, "<line") == 7 + 7 + 36);
  CHECK(count_occurrences(svg, "<circle") == 36);
}

TEST_CASE("run reports render as text and json") {
  io::RunReport report;
  report.add("solver", "tsp");
  report.add("seed", std::uint64_t{42});
  report.add("final_cost", 13.25);
  report.add("crossing_free", true);
  report.add("round_costs", std::vector<double>{3.5, 2.0});

  const std::string text = report.to_text();
  CHECK(text ==
        "solver: tsp\nseed: 42\nfinal_cost: 13.25\ncrossing_free: true\n"
        "round_costs: 3.5 2\n");

  const std::string json = report.to_json();
  CHECK(json.find("\"seed\": 42") != std::string::npos);
  CHECK(json.find("\"crossing_free\": true") != std::string::npos);
}

TEST_SUITE_END();
