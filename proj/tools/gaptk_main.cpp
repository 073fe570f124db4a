#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gaptk/brute_force.hpp"
#include "gaptk/dimacs.hpp"
#include "gaptk/knowledge.hpp"
#include "gaptk/ktp.hpp"
#include "gaptk/plot.hpp"
#include "gaptk/polygon.hpp"
#include "gaptk/raster.hpp"
#include "gaptk/report.hpp"
#include "gaptk/sat.hpp"
#include "gaptk/tsp.hpp"
#include "gaptk/tsplib.hpp"

namespace {

using namespace gaptk;

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;  // unsat, budget exhausted, not crossing-free
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GAPTK_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric GAPTK_SEED\n";
    }
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::ParseError("cannot write file: " + path);
  out << bytes;
}

void print_report(const io::RunReport& report, bool as_json) {
  std::cout << (as_json ? report.to_json() : report.to_text());
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string tour_labels(const Tour& tour) {
  std::string out;
  for (std::size_t i = 0; i < tour.order.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(tour.order[i] + 1);
  }
  return out;
}

int run_tsp_solve(const std::string& path, std::uint64_t seed, int restarts,
                  const std::string& policy, int max_rounds,
                  const std::string& plot_path, const std::string& raster_path,
                  int resolution, bool rounding, bool as_json) {
  Timer timer;
  std::vector<std::string> warnings;
  const GapInstance instance = io::parse_tsplib(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  tsp::GreedyConfig config;
  config.restarts = restarts;
  config.rng_seed = seed;
  const auto parsed_policy = tsp::step_policy_from_name(policy);
  if (!parsed_policy) throw io::ParseError("unknown policy " + policy);
  config.policy = *parsed_policy;

  const auto run = tsp::solve_tsp(instance, config, max_rounds);

  io::RunReport report;
  report.add("solver", "tsp");
  report.add("instance", path);
  report.add("n", instance.size());
  report.add("seed", seed);
  report.add("restarts", restarts);
  report.add("policy", policy);
  report.add("rounds", run.rounds);
  report.add("round_costs", run.round_costs);
  report.add("final_cost", run.tour.cost);
  if (rounding) {
    // nearest-integer edge costs, for comparing against TSPLIB-convention tools
    const GapInstance rounded = io::parse_tsplib(read_file(path), nullptr, true);
    report.add("final_cost_tsplib_rounded", tour_cost(run.tour.order, rounded));
  }
  report.add("crossing_free", run.crossing_free);
  report.add("tour", tour_labels(run.tour));
  if (!raster_path.empty()) {
    // auto resolution is capped to keep the canvas sane; when the adaptive
    // vertex check needs more pixels than that, fall back to the literal
    // 8-neighborhood vicinity
    constexpr int kMaxAutoResolution = 4000;
    int k = resolution;
    int vicinity = 1;
    if (resolution <= 0) {
      k = std::min(tsp::suggest_resolution(run.tour, instance, 8),
                   kMaxAutoResolution);
      vicinity = 0;
    }
    std::optional<tsp::RasterVerdict> verdict;
    try {
      verdict = tsp::two_color_raster(run.tour, instance, k, vicinity);
    } catch (const std::invalid_argument&) {
      if (vicinity != 0) throw;
      verdict = tsp::two_color_raster(run.tour, instance, k, 1);
      report.add("raster_note",
                 "auto resolution capped; literal 8-neighborhood vicinity used");
    }
    report.add("raster_resolution", k);
    report.add("raster_simple", verdict->simple);
    report.add("raster_interior_pixels",
               static_cast<long long>(verdict->interior_pixels));
    write_file(raster_path, tsp::encode_ppm(verdict->image));
  }
  report.add("wall_time_s", timer.seconds());
  print_report(report, as_json);

  if (!plot_path.empty()) write_file(plot_path, io::tour_svg(instance, run.tour));
  return run.crossing_free ? kExitSuccess : kExitNegative;
}

int run_tsp_oracle(const std::string& path, bool maximize, bool rounding,
                   bool as_json) {
  Timer timer;
  const GapInstance instance = io::parse_tsplib(read_file(path), nullptr, rounding);
  const Tour best = brute_force_optimum(instance, maximize);

  io::RunReport report;
  report.add("solver", "tsp-oracle");
  report.add("instance", path);
  report.add("n", instance.size());
  report.add("maximize", maximize);
  report.add("optimal_cost", best.cost);
  report.add("tour", tour_labels(best));
  report.add("wall_time_s", timer.seconds());
  print_report(report, as_json);
  return kExitSuccess;
}

int run_ktp_solve(int rows, int cols, const std::string& scheme_name,
                  std::uint64_t seed, long long budget, int restarts,
                  const std::string& plot_path, bool as_json) {
  Timer timer;
  ktp::EulerScheme scheme;
  if (scheme_name == "quadrant")
    scheme.mode = ktp::EulerScheme::Mode::Quadrant;
  else if (scheme_name != "uniform")
    throw io::ParseError("unknown scheme " + scheme_name);

  tsp::GreedyConfig config;
  config.restarts = restarts;
  config.rng_seed = seed;
  const ktp::Board board{rows, cols};
  const auto run = ktp::solve_ktp(board, scheme, config, budget);

  io::RunReport report;
  report.add("solver", "ktp");
  report.add("board", std::to_string(rows) + "x" + std::to_string(cols));
  report.add("scheme", scheme_name);
  report.add("seed", seed);
  report.add("budget", static_cast<long long>(budget));
  report.add("restarts_used", static_cast<long long>(run.restarts_used));
  report.add("parity_feasible", run.parity_feasible);
  if (!run.parity_feasible)
    report.add("parity_note",
               "rows*cols is odd: a knight alternates square colors, so no "
               "closed knight tour exists");
  report.add("cost", run.tour.cost);
  report.add("knight_tour_found", run.proved);
  report.add("knight_edges", run.report.knight_edges);
  report.add("non_knight_edges",
             static_cast<long long>(run.report.non_knight_edges.size()));
  report.add("crossings", run.report.crossing_count);
  report.add("tour", tour_labels(run.tour));
  report.add("wall_time_s", timer.seconds());
  print_report(report, as_json);

  if (!plot_path.empty())
    write_file(plot_path, io::board_tour_svg(board, run.tour));
  return run.proved ? kExitSuccess : kExitNegative;
}

int run_polygon_star(int n, double radius, const std::string& plot_path,
                     bool as_json) {
  const Tour star = polygon::star_tour({n, radius});
  const auto labels = polygon::star_labels({n, radius});

  io::RunReport report;
  report.add("solver", "polygon-star");
  report.add("n", n);
  report.add("radius", radius);
  report.add("cost", star.cost);
  std::string sequence;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) sequence += ' ';
    sequence += std::to_string(labels[i]);
  }
  report.add("sequence", sequence);
  print_report(report, as_json);

  if (!plot_path.empty()) {
    const auto points = polygon::regular_polygon({n, radius});
    const GapInstance instance = build_instance(points, Metric::Euclidean);
    write_file(plot_path, io::tour_svg(instance, star));
  }
  return kExitSuccess;
}

int run_polygon_min(int n, double radius, const std::string& metric_name,
                    const std::string& plot_path, bool as_json) {
  const auto metric = metric_from_name(metric_name);
  if (!metric) throw io::ParseError("unknown metric " + metric_name);
  const Tour tour = polygon::min_polygon_tour({n, radius}, *metric);

  io::RunReport report;
  report.add("solver", "polygon-min");
  report.add("n", n);
  report.add("radius", radius);
  report.add("metric", metric_name);
  report.add("cost", tour.cost);
  report.add("tour", tour_labels(tour));
  print_report(report, as_json);

  if (!plot_path.empty()) {
    const auto points = polygon::regular_polygon({n, radius});
    const GapInstance instance = build_instance(points, *metric);
    write_file(plot_path, io::tour_svg(instance, tour));
  }
  return kExitSuccess;
}

int run_sat_solve(const std::string& path, const std::string& algorithm,
                  std::uint64_t seed, bool as_json) {
  Timer timer;
  const io::DimacsResult parsed = io::parse_dimacs(read_file(path));
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";

  io::RunReport report;
  report.add("solver", "sat");
  report.add("instance", path);
  report.add("variables", parsed.instance.vars());
  report.add("clauses", parsed.instance.num_clauses());
  report.add("simple", parsed.instance.simple());
  report.add("algorithm", algorithm);

  bool negative = false;
  if (algorithm == "knowledge") {
    const sat::Knowledge knowledge = sat::build_knowledge(parsed.instance);
    const auto free_size = knowledge.size(sat::Knowledge::List::Free);
    report.add("solutions_found",
               static_cast<long long>(knowledge.solutions().size()));
    report.add("free_set_size", static_cast<long long>(free_size));
    report.add("blocked_set_size",
               static_cast<long long>(knowledge.size(sat::Knowledge::List::Blocked)));
    if (!knowledge.solutions().empty()) {
      report.add("verdict", "satisfiable");
      report.add("witness", sat::assignment_string(knowledge.solutions().front(),
                                                   parsed.instance.vars()));
    } else if (free_size > 0) {
      report.add("verdict", "satisfiable");
      report.add("witness", sat::assignment_string(
                                knowledge.values(sat::Knowledge::List::Free).front(),
                                parsed.instance.vars()));
    } else {
      report.add("verdict", "unsatisfiable");
      negative = true;
    }
  } else {
    sat::SolveResult result;
    if (algorithm == "det") {
      result = sat::solve_deterministic(parsed.instance);
    } else if (algorithm == "prob") {
      report.add("seed", seed);
      result = sat::solve_probabilistic(parsed.instance, seed);
    } else {
      throw io::ParseError("unknown algorithm " + algorithm);
    }
    switch (result.outcome) {
      case sat::SatOutcome::Solution:
        report.add("verdict", "satisfiable");
        report.add("witness",
                   sat::assignment_string(result.witness, parsed.instance.vars()));
        break;
      case sat::SatOutcome::AugmentedSolution:
        report.add("verdict", "satisfiable");
        report.add("witness",
                   sat::assignment_string(result.witness, parsed.instance.vars()));
        report.add("witness_note",
                   "found by probing beyond the clause values; also solves the "
                   "instance extended with its own formula");
        break;
      case sat::SatOutcome::Unsatisfiable:
        report.add("verdict", "unsatisfiable");
        negative = true;
        break;
    }
    report.add("values_marked", static_cast<long long>(result.marked));
  }
  report.add("wall_time_s", timer.seconds());
  print_report(report, as_json);
  return negative ? kExitNegative : kExitSuccess;
}

int run_diag_ranks(const std::string& instance_path, const std::string& tour_path,
                   const std::string& plot_path, bool as_json) {
  const GapInstance instance = io::parse_tsplib(read_file(instance_path));
  const std::vector<int> order =
      io::parse_tour_file(read_file(tour_path), instance.size());
  const Tour tour = make_tour(order, instance);
  const auto profile = edge_rank_profile(tour, instance);

  int max_rank = 0;
  long long rank_sum = 0;
  for (const auto& pair : profile) {
    max_rank = std::max({max_rank, pair[0], pair[1]});
    rank_sum += pair[0] + pair[1];
  }

  io::RunReport report;
  report.add("solver", "diag-ranks");
  report.add("instance", instance_path);
  report.add("tour_cost", tour.cost);
  report.add("max_rank", max_rank);
  report.add("mean_rank", double(rank_sum) / (2.0 * instance.size()));
  std::vector<long long> flat;
  for (const auto& pair : profile) {
    flat.push_back(pair[0]);
    flat.push_back(pair[1]);
  }
  report.add("ranks", flat);
  print_report(report, as_json);

  if (!plot_path.empty()) write_file(plot_path, io::rank_profile_svg(profile));
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaptk: tour optimization and satisfiability toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit run reports as JSON");

  auto* tsp_cmd = app.add_subcommand("tsp", "euclidean 2D tours");
  tsp_cmd->require_subcommand(1);
  auto* tsp_solve = tsp_cmd->add_subcommand(
      "solve", "greedy restarts plus uncrossing until a Jordan simple curve");
  std::string tsp_file;
  std::uint64_t seed = default_seed();
  int restarts = 200;
  std::string policy = "greedy";
  int max_rounds = 0;
  std::string plot_path;
  bool rounding = false;
  tsp_solve->add_option("file", tsp_file, "TSPLIB EUC_2D file")->required();
  tsp_solve->add_option("--seed", seed, "rng seed (default: $GAPTK_SEED or 0)");
  tsp_solve->add_option("--restarts", restarts, "greedy restarts per round")
      ->check(CLI::PositiveNumber);
  tsp_solve->add_option("--policy", policy, "step policy: greedy|random|mixed");
  tsp_solve->add_option("--max-rounds", max_rounds, "round limit (default 10*n)");
  tsp_solve->add_option("--plot", plot_path, "write the final tour as SVG");
  std::string raster_path;
  int resolution = 0;
  tsp_solve->add_option("--raster", raster_path,
                        "write the two-color flood-fill diagnostic as PPM");
  tsp_solve->add_option("--resolution", resolution,
                        "raster resolution factor (default: auto)");
  tsp_solve->add_flag("--tsplib-rounding", rounding,
                      "also report the nearest-integer-convention cost");

  auto* tsp_oracle = tsp_cmd->add_subcommand(
      "oracle", "exact optimum by enumeration (small instances)");
  std::string oracle_file;
  bool oracle_max = false;
  bool oracle_rounding = false;
  tsp_oracle->add_option("file", oracle_file, "TSPLIB EUC_2D file")->required();
  tsp_oracle->add_flag("--maximize", oracle_max, "maximize instead of minimize");
  tsp_oracle->add_flag("--tsplib-rounding", oracle_rounding,
                       "use nearest-integer edge costs");

  auto* ktp_cmd = app.add_subcommand("ktp", "knight's tours");
  ktp_cmd->require_subcommand(1);
  auto* ktp_solve = ktp_cmd->add_subcommand(
      "solve", "greedy restarts until the tour costs less than 4");
  int rows = 8, cols = 8;
  std::string scheme = "uniform";
  long long budget = 200000;
  int ktp_restarts = 200;
  std::string ktp_plot;
  ktp_solve->add_option("--rows", rows, "board rows")->required();
  ktp_solve->add_option("--cols", cols, "board columns")->required();
  ktp_solve->add_option("--scheme", scheme, "knight pricing: uniform|quadrant");
  ktp_solve->add_option("--seed", seed, "rng seed");
  ktp_solve->add_option("--budget", budget, "total restart budget")
      ->check(CLI::PositiveNumber);
  ktp_solve->add_option("--restarts", ktp_restarts, "restarts per batch")
      ->check(CLI::PositiveNumber);
  ktp_solve->add_option("--plot", ktp_plot, "write the board tour as SVG");

  auto* poly_cmd = app.add_subcommand("polygon", "regular polygon tours");
  poly_cmd->require_subcommand(1);
  auto* poly_star = poly_cmd->add_subcommand(
      "star", "maximum tour of an odd polygon (the star sequence)");
  int poly_n = 5;
  double poly_radius = 1.0;
  std::string poly_plot;
  poly_star->add_option("--n", poly_n, "vertex count (odd, >= 5)")->required();
  poly_star->add_option("--radius", poly_radius, "circumradius");
  poly_star->add_option("--plot", poly_plot, "write the star as SVG");

  auto* poly_min = poly_cmd->add_subcommand("min", "minimum tour: the polygon");
  int min_n = 5;
  double min_radius = 1.0;
  std::string min_metric = "euclidean";
  std::string min_plot;
  poly_min->add_option("--n", min_n, "vertex count")->required();
  poly_min->add_option("--radius", min_radius, "circumradius");
  poly_min->add_option("--metric", min_metric, "euclidean|max|abs");
  poly_min->add_option("--plot", min_plot, "write the tour as SVG");

  auto* sat_cmd = app.add_subcommand("sat", "boolean satisfiability");
  sat_cmd->require_subcommand(1);
  auto* sat_solve = sat_cmd->add_subcommand("solve", "solve a DIMACS CNF file");
  std::string sat_file;
  std::string algorithm = "det";
  sat_solve->add_option("file", sat_file, "DIMACS CNF file")->required();
  sat_solve->add_option("--algorithm", algorithm,
                        "det | prob | knowledge (linked-structure build)");
  sat_solve->add_option("--seed", seed, "rng seed for prob");

  auto* diag_cmd = app.add_subcommand("diag", "diagnostics");
  diag_cmd->require_subcommand(1);
  auto* diag_ranks = diag_cmd->add_subcommand(
      "ranks", "per-vertex sorted-cost ranks of a tour's edges");
  std::string diag_instance, diag_tour, diag_plot;
  diag_ranks->add_option("instance", diag_instance, "TSPLIB EUC_2D file")
      ->required();
  diag_ranks->add_option("tour", diag_tour, "tour file (1-based indices)")
      ->required();
  diag_ranks->add_option("--plot", diag_plot, "write the rank profile as SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tsp_solve->parsed())
      return run_tsp_solve(tsp_file, seed, restarts, policy, max_rounds,
                           plot_path, raster_path, resolution, rounding, as_json);
    if (tsp_oracle->parsed())
      return run_tsp_oracle(oracle_file, oracle_max, oracle_rounding, as_json);
    if (ktp_solve->parsed())
      return run_ktp_solve(rows, cols, scheme, seed, budget, ktp_restarts,
                           ktp_plot, as_json);
    if (poly_star->parsed())
      return run_polygon_star(poly_n, poly_radius, poly_plot, as_json);
    if (poly_min->parsed())
      return run_polygon_min(min_n, min_radius, min_metric, min_plot, as_json);
    if (sat_solve->parsed())
      return run_sat_solve(sat_file, algorithm, seed, as_json);
    if (diag_ranks->parsed())
      return run_diag_ranks(diag_instance, diag_tour, diag_plot, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
