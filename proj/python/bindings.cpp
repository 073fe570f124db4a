#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaptk/brute_force.hpp"
#include "gaptk/dimacs.hpp"
#include "gaptk/knowledge.hpp"
#include "gaptk/ktp.hpp"
#include "gaptk/plot.hpp"
#include "gaptk/polygon.hpp"
#include "gaptk/raster.hpp"
#include "gaptk/sat.hpp"
#include "gaptk/tsp.hpp"
#include "gaptk/tsplib.hpp"

namespace py = pybind11;
using namespace gaptk;

PYBIND11_MODULE(_gaptk, m) {
  m.doc() = "tour optimization and satisfiability toolkit";

  py::class_<Point>(m, "Point")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
           py::arg("z") = 0.0)
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def_readwrite("z", &Point::z)
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) +
               ", " + std::to_string(p.z) + ")";
      });

  py::enum_<Metric>(m, "Metric")
      .value("euclidean", Metric::Euclidean)
      .value("max", Metric::Max)
      .value("abs", Metric::Abs);

  py::class_<GapInstance>(m, "GapInstance")
      .def_property_readonly("n", &GapInstance::size)
      .def("cost", &GapInstance::cost, py::arg("i"), py::arg("j"))
      .def_property_readonly("has_coords", &GapInstance::has_coords)
      .def("point", &GapInstance::point, py::arg("i"),
           py::return_value_policy::copy);

  py::class_<Tour>(m, "Tour")
      .def(py::init([](std::vector<int> order, double cost) {
             return Tour{std::move(order), cost};
           }),
           py::arg("order"), py::arg("cost") = 0.0)
      .def_readonly("order", &Tour::order)
      .def_readonly("cost", &Tour::cost);

  m.def("build_instance", &build_instance, py::arg("points"), py::arg("metric"),
        py::arg("dim") = 2);
  m.def(
      "tour_cost",
      [](const std::vector<int>& order, const GapInstance& instance) {
        return tour_cost(order, instance);
      },
      py::arg("order"), py::arg("instance"));
  m.def("make_tour", &make_tour, py::arg("order"), py::arg("instance"));
  m.def("canonicalize", &gaptk::canonicalize, py::arg("tour"));
  m.def("edge_rank_profile", &edge_rank_profile, py::arg("tour"),
        py::arg("instance"));
  m.def("brute_force_optimum", &brute_force_optimum, py::arg("instance"),
        py::arg("maximize") = false, py::arg("limit") = kBruteForceLimit);

  // tsp
  py::enum_<tsp::StepPolicy>(m, "StepPolicy")
      .value("greedy", tsp::StepPolicy::Greedy)
      .value("random", tsp::StepPolicy::Random)
      .value("mixed", tsp::StepPolicy::Mixed);

  py::class_<tsp::GreedyConfig>(m, "GreedyConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &tsp::GreedyConfig::restarts)
      .def_readwrite("policy", &tsp::GreedyConfig::policy)
      .def_readwrite("mixed_greedy_probability",
                     &tsp::GreedyConfig::mixed_greedy_probability)
      .def_readwrite("rng_seed", &tsp::GreedyConfig::rng_seed);

  py::class_<tsp::Crossing>(m, "Crossing")
      .def(py::init<int, int>(), py::arg("i"), py::arg("j"))
      .def_readwrite("i", &tsp::Crossing::i)
      .def_readwrite("j", &tsp::Crossing::j);

  py::class_<tsp::SolveResult>(m, "TspSolveResult")
      .def_readonly("tour", &tsp::SolveResult::tour)
      .def_readonly("round_costs", &tsp::SolveResult::round_costs)
      .def_readonly("rounds", &tsp::SolveResult::rounds)
      .def_readonly("crossing_free", &tsp::SolveResult::crossing_free);

  m.def("greedy_tour", &tsp::greedy_tour, py::arg("instance"), py::arg("config"),
        py::arg("incumbent") = std::nullopt);
  m.def("find_crossing", &tsp::find_crossing, py::arg("tour"), py::arg("instance"));
  m.def("count_crossings", &tsp::count_crossings, py::arg("tour"),
        py::arg("instance"));
  m.def("uncross", &tsp::uncross, py::arg("tour"), py::arg("crossing"),
        py::arg("instance"));
  m.def("solve_tsp", &tsp::solve_tsp, py::arg("instance"), py::arg("config"),
        py::arg("max_rounds") = 0);

  py::class_<tsp::RasterVerdict>(m, "RasterVerdict")
      .def_readonly("simple", &tsp::RasterVerdict::simple)
      .def_readonly("marked_vertices", &tsp::RasterVerdict::marked_vertices)
      .def_readonly("interior_pixels", &tsp::RasterVerdict::interior_pixels)
      .def_property_readonly(
          "width", [](const tsp::RasterVerdict& v) { return v.image.width; })
      .def_property_readonly(
          "height", [](const tsp::RasterVerdict& v) { return v.image.height; })
      .def("ppm_bytes", [](const tsp::RasterVerdict& v) {
        return py::bytes(tsp::encode_ppm(v.image));
      });

  m.def("two_color_raster", &tsp::two_color_raster, py::arg("tour"),
        py::arg("instance"), py::arg("resolution_factor"),
        py::arg("vicinity_radius") = 1);
  m.def("suggest_resolution", &tsp::suggest_resolution, py::arg("tour"),
        py::arg("instance"), py::arg("min_feature_px") = 8);

  // ktp
  py::class_<ktp::Board>(m, "Board")
      .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
      .def_readwrite("rows", &ktp::Board::rows)
      .def_readwrite("cols", &ktp::Board::cols)
      .def_property_readonly("squares", &ktp::Board::squares);

  py::class_<ktp::Square>(m, "Square")
      .def(py::init<int, int>(), py::arg("row"), py::arg("col"))
      .def_readwrite("row", &ktp::Square::row)
      .def_readwrite("col", &ktp::Square::col);

  py::class_<ktp::EulerScheme> euler(m, "EulerScheme");
  py::enum_<ktp::EulerScheme::Mode>(euler, "Mode")
      .value("uniform", ktp::EulerScheme::Mode::Uniform)
      .value("quadrant", ktp::EulerScheme::Mode::Quadrant);
  euler.def(py::init<>())
      .def_readwrite("mode", &ktp::EulerScheme::mode)
      .def_readwrite("uniform_c1", &ktp::EulerScheme::uniform_c1)
      .def_readwrite("quadrant_main_rhombus",
                     &ktp::EulerScheme::quadrant_main_rhombus)
      .def_readwrite("quadrant_anti_rhombus",
                     &ktp::EulerScheme::quadrant_anti_rhombus)
      .def_readwrite("quadrant_square", &ktp::EulerScheme::quadrant_square)
      .def_readwrite("quadrant_default", &ktp::EulerScheme::quadrant_default);

  py::class_<ktp::KnightReport>(m, "KnightReport")
      .def_readonly("knight_edges", &ktp::KnightReport::knight_edges)
      .def_readonly("non_knight_edges", &ktp::KnightReport::non_knight_edges)
      .def_readonly("crossing_count", &ktp::KnightReport::crossing_count);

  py::class_<ktp::KtpResult>(m, "KtpResult")
      .def_readonly("tour", &ktp::KtpResult::tour)
      .def_readonly("report", &ktp::KtpResult::report)
      .def_readonly("proved", &ktp::KtpResult::proved)
      .def_readonly("parity_feasible", &ktp::KtpResult::parity_feasible)
      .def_readonly("restarts_used", &ktp::KtpResult::restarts_used);

  m.def("is_knight_move", &ktp::is_knight_move, py::arg("a"), py::arg("b"));
  m.def("euler_distance", &ktp::euler_distance, py::arg("a"), py::arg("b"),
        py::arg("scheme"));
  m.def("build_board_instance", &ktp::build_board_instance, py::arg("board"),
        py::arg("scheme"));
  m.def("closed_tour_feasible", &ktp::closed_tour_feasible, py::arg("board"));
  m.def("verify_knight_cycle", &ktp::verify_knight_cycle, py::arg("tour"),
        py::arg("board"));
  m.def("solve_ktp", &ktp::solve_ktp, py::arg("board"), py::arg("scheme"),
        py::arg("config"), py::arg("restart_budget"));

  // polygon
  py::class_<polygon::PolygonSpec>(m, "PolygonSpec")
      .def(py::init<int, double>(), py::arg("n"), py::arg("radius") = 1.0)
      .def_readwrite("n", &polygon::PolygonSpec::n)
      .def_readwrite("radius", &polygon::PolygonSpec::radius);

  m.def("regular_polygon", &polygon::regular_polygon, py::arg("spec"));
  m.def("min_polygon_tour", &polygon::min_polygon_tour, py::arg("spec"),
        py::arg("metric") = Metric::Euclidean);
  m.def("star_tour", &polygon::star_tour, py::arg("spec"));
  m.def("star_labels", &polygon::star_labels, py::arg("spec"));
  m.def("max_tour_bruteforce", &polygon::max_tour_bruteforce, py::arg("points"),
        py::arg("metric"), py::arg("limit") = kBruteForceLimit);

  // sat
  py::class_<sat::SatInstance>(m, "SatInstance")
      .def(py::init<int, std::vector<std::string>>(), py::arg("num_vars"),
           py::arg("clauses"))
      .def_property_readonly("vars", &sat::SatInstance::vars)
      .def_property_readonly("num_clauses", &sat::SatInstance::num_clauses)
      .def_property_readonly("simple", &sat::SatInstance::simple)
      .def("clause", &sat::SatInstance::clause, py::arg("j"));

  py::enum_<sat::SatOutcome>(m, "SatOutcome")
      .value("solution", sat::SatOutcome::Solution)
      .value("augmented_solution", sat::SatOutcome::AugmentedSolution)
      .value("unsatisfiable", sat::SatOutcome::Unsatisfiable);

  py::class_<sat::SolveResult>(m, "SatSolveResult")
      .def_readonly("outcome", &sat::SolveResult::outcome)
      .def_readonly("witness", &sat::SolveResult::witness)
      .def_readonly("marked", &sat::SolveResult::marked);

  m.def("clause_to_number", &sat::clause_to_number, py::arg("clause"));
  m.def("clause_binary_value", &sat::clause_binary_value, py::arg("clause"));
  m.def("assignment_string", &sat::assignment_string, py::arg("y"), py::arg("n"));
  m.def("complement", &sat::complement, py::arg("y"), py::arg("n"));
  m.def(
      "evaluate",
      [](const sat::SatInstance& instance, std::uint64_t y) {
        return sat::evaluate(instance, y);
      },
      py::arg("instance"), py::arg("y"));
  m.def(
      "evaluate_ternary",
      [](const sat::SatInstance& instance, const std::string& assignment) {
        return sat::evaluate(instance, assignment);
      },
      py::arg("instance"), py::arg("assignment"));
  m.def("usage_matrix", &sat::usage_matrix, py::arg("instance"));
  m.def("is_unsatisfiable_by_coverage", &sat::is_unsatisfiable_by_coverage,
        py::arg("instance"));
  m.def("solve_deterministic", &sat::solve_deterministic, py::arg("instance"),
        py::arg("table_bits_limit") = sat::kTableBitsLimit);
  m.def("solve_probabilistic", &sat::solve_probabilistic, py::arg("instance"),
        py::arg("seed"), py::arg("table_bits_limit") = sat::kTableBitsLimit);

  py::class_<sat::Knowledge> knowledge(m, "Knowledge");
  py::enum_<sat::Knowledge::List>(knowledge, "List")
      .value("free", sat::Knowledge::List::Free)
      .value("blocked", sat::Knowledge::List::Blocked);
  py::class_<sat::Knowledge::Header>(knowledge, "Header")
      .def_readonly("prev", &sat::Knowledge::Header::prev)
      .def_readonly("next", &sat::Knowledge::Header::next);
  py::class_<sat::Knowledge::SlotView>(knowledge, "SlotView")
      .def_readonly("present", &sat::Knowledge::SlotView::present)
      .def_readonly("prev", &sat::Knowledge::SlotView::prev)
      .def_readonly("next", &sat::Knowledge::SlotView::next);
  knowledge.def(py::init<int>(), py::arg("bits"))
      .def_property_readonly("bits", &sat::Knowledge::bits)
      .def_property_readonly("universe", &sat::Knowledge::universe)
      .def("list_of", &sat::Knowledge::list_of, py::arg("value"))
      .def("contains", &sat::Knowledge::contains, py::arg("list"), py::arg("value"))
      .def("size", &sat::Knowledge::size, py::arg("list"))
      .def("header", &sat::Knowledge::header, py::arg("list"))
      .def("slot", &sat::Knowledge::slot, py::arg("list"), py::arg("value"))
      .def("move", &sat::Knowledge::move, py::arg("value"), py::arg("from_list"),
           py::arg("to_list"))
      .def("values", &sat::Knowledge::values, py::arg("list"))
      .def("values_reversed", &sat::Knowledge::values_reversed, py::arg("list"))
      .def_property_readonly("solutions", &sat::Knowledge::solutions);

  m.def("build_knowledge", &sat::build_knowledge, py::arg("instance"),
        py::arg("table_bits_limit") = sat::kTableBitsLimit);

  // io
  m.def(
      "parse_tsplib",
      [](const std::string& text, bool rounded) {
        return io::parse_tsplib(text, nullptr, rounded);
      },
      py::arg("text"), py::arg("rounded") = false);
  m.def("emit_tsplib", &io::emit_tsplib, py::arg("instance"), py::arg("name"));
  m.def(
      "parse_dimacs",
      [](const std::string& text) {
        const auto result = io::parse_dimacs(text);
        return py::make_tuple(result.instance, result.dropped_tautologies,
                              result.warnings);
      },
      py::arg("text"), "returns (instance, dropped_tautologies, warnings)");
  m.def("tour_svg", &io::tour_svg, py::arg("instance"), py::arg("tour"),
        py::arg("canvas") = 800);
  m.def("rank_profile_svg", &io::rank_profile_svg, py::arg("profile"),
        py::arg("canvas") = 800);
  m.def("board_tour_svg", &io::board_tour_svg, py::arg("board"), py::arg("tour"),
        py::arg("cell_px") = 60);
}
