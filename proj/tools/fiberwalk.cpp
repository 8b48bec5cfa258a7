// fiberwalk: exact analysis of random walks on fibers of integer matrices.
//
// Subcommands: check, fiber, graph, adapt, walk, experiment slem-curve.
// Exit codes: 0 success, 1 negative domain result (kernel witness,
// disconnected graph, ...), 2 usage or parse errors.

#include "CLI11.hpp"

#include "fiberwalk/adapted.hpp"
#include "fiberwalk/experiment.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/graph.hpp"
#include "fiberwalk/linalg.hpp"
#include "fiberwalk/models.hpp"
#include "fiberwalk/spectral.hpp"
#include "fiberwalk/walks.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace fw = fiberwalk;

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::size_t subset_limit_from_env() {
  if (const char* env = std::getenv("FW_SUBSET_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= 62) return v;
    std::cerr << "warning: ignoring invalid FW_SUBSET_LIMIT='" << env << "'\n";
  }
  return fw::kDefaultExpansionNodeLimit;
}

struct GraphInputs {
  fw::IntegerMatrix matrix;
  fw::IntVec rhs;
  fw::MoveSet moves;
};

// Parses matrix/rhs/moves files, certifies the matrix, validates the moves.
GraphInputs load_graph_inputs(const std::string& matrix_path, const std::string& rhs_path,
                              const std::string& moves_path) {
  fw::IntegerMatrix a = fw::parse_matrix_file(matrix_path);
  auto outcome = fw::certify_kernel_positivity(a);
  if (!fw::holds_certificate(outcome))
    throw std::runtime_error(
        "matrix has nonnegative kernel elements; fibers are not finite (witness: " +
        fw::vec_to_string(std::get<fw::KernelWitness>(outcome).u) + ")");
  a.attach_certificate(std::get<fw::KernelCertificate>(outcome).lambda);
  fw::IntVec b = fw::parse_vector_file(rhs_path);
  if (b.size() != a.rows())
    throw fw::ParseError(fw::ParseErrorKind::wrong_entry_count,
                         "rhs length does not match the matrix row count");
  fw::MoveSet moves = fw::parse_moves_file(moves_path, &a);
  return GraphInputs{std::move(a), std::move(b), std::move(moves)};
}

int cmd_check(const std::string& matrix_path) {
  fw::IntegerMatrix a = fw::parse_matrix_file(matrix_path);
  auto outcome = fw::certify_kernel_positivity(a);
  if (fw::holds_certificate(outcome)) {
    std::cout << "certificate:";
    for (const auto& x : std::get<fw::KernelCertificate>(outcome).lambda)
      std::cout << ' ' << fw::rat_to_string(x);
    std::cout << '\n';
    return 0;
  }
  std::cout << "witness: " << fw::vec_to_string(std::get<fw::KernelWitness>(outcome).u)
            << '\n';
  return 1;
}

int cmd_fiber(const std::string& matrix_path, const std::string& rhs_path,
              bool print_points, bool print_bound, long long growth) {
  fw::IntegerMatrix a = fw::parse_matrix_file(matrix_path);
  auto outcome = fw::certify_kernel_positivity(a);
  if (!fw::holds_certificate(outcome)) {
    std::cout << "witness: " << fw::vec_to_string(std::get<fw::KernelWitness>(outcome).u)
              << '\n';
    return 1;
  }
  a.attach_certificate(std::get<fw::KernelCertificate>(outcome).lambda);
  fw::IntVec b = fw::parse_vector_file(rhs_path);
  if (b.size() != a.rows())
    throw fw::ParseError(fw::ParseErrorKind::wrong_entry_count,
                         "rhs length does not match the matrix row count");

  auto fiber = fw::enumerate_fiber(a, b);
  std::cout << "size = " << fiber.size() << '\n';
  if (print_points)
    for (const auto& p : fiber.points()) std::cout << fw::vec_to_string(p) << '\n';
  if (print_bound)
    std::cout << "size bound = " << fw::rat_to_string(fw::fiber_size_upper_bound(a, b))
              << '\n';
  if (growth > 0) {
    auto counts = fw::ray_growth(a, b, (std::size_t)growth);
    std::cout << "ray counts =";
    for (const auto& c : counts) std::cout << ' ' << c.str();
    std::cout << '\n';
    auto fit = fw::fit_growth_degree(counts);
    if (fit.conclusive)
      std::cout << "growth degree = " << fit.degree
                << " (stabilized difference " << fit.stabilized_value.str() << ")\n";
    else
      std::cout << "growth degree = inconclusive\n";
  }
  return 0;
}

int cmd_graph(const std::string& matrix_path, const std::string& rhs_path,
              const std::string& moves_path, bool want_slem, bool want_diam,
              bool want_expansion, bool want_bounds) {
  auto in = load_graph_inputs(matrix_path, rhs_path, moves_path);
  auto fiber = fw::enumerate_fiber(in.matrix, in.rhs);
  auto graph = fw::build_fiber_graph(fiber, in.moves);
  std::cout << "nodes = " << graph.node_count << ", degree = " << graph.degree
            << ", connected = " << (fw::is_connected(graph) ? "yes" : "no") << '\n';

  const std::size_t limit = subset_limit_from_env();
  int rc = 0;
  if (want_diam) {
    try {
      std::cout << "diam = " << fw::diameter(graph) << '\n';
    } catch (const fw::DisconnectedError& e) {
      std::cout << "diam: disconnected (nodes " << e.node_a << ", " << e.node_b << ")\n";
      rc = 1;
    }
  }
  if (want_slem)
    std::cout << "slem = " << fmt12(fw::slem(fw::transition_matrix(graph))) << '\n';
  if (want_expansion) {
    auto res = fw::edge_expansion_exact(graph, limit);
    std::cout << "h = " << fw::rat_to_string(res.h) << '\n';
    std::cout << "h set =";
    for (auto v : res.min_set) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (want_bounds) {
    double lam = fw::slem(fw::transition_matrix(graph));
    if (graph.node_count <= limit && fw::is_connected(graph)) {
      auto lb = fw::slem_lower_bound_from_expansion(graph, limit);
      bool ok = fw::to_double(lb) <= lam + 1e-9;
      std::cout << "1 - (2/degree) h = " << fw::rat_to_string(lb) << " <= slem = "
                << fmt12(lam) << " : " << (ok ? "ok" : "violated") << '\n';
      if (!ok) rc = 1;
    } else {
      std::cout << "1 - (2/degree) h: skipped (disconnected or above node limit "
                << limit << ")\n";
    }
    if (fw::is_connected(graph)) {
      auto rep = fw::loop_removed(graph);
      bool ok = rep.gap_prime <= rep.degree_times_gap + 1e-9;
      std::cout << "loop-removed gap " << fmt12(rep.gap_prime)
                << " <= degree * gap = " << fmt12(rep.degree_times_gap) << " : "
                << (ok ? "ok" : "violated")
                << (rep.bipartite ? " (loop-free graph is bipartite)" : "") << '\n';
      if (!ok) rc = 1;
    }
  }
  return rc;
}

int cmd_adapt(const std::string& matrix_path, const std::string& rhs_path,
              const std::string& moves_path, bool print_moves) {
  auto in = load_graph_inputs(matrix_path, rhs_path, moves_path);
  std::optional<fw::AdaptResult> maybe;
  try {
    maybe.emplace(fw::adapt_to_fiber(in.matrix, in.rhs, in.moves));
  } catch (const fw::DisconnectedError& e) {
    std::cout << "fiber graph disconnected under the given moves (nodes " << e.node_a
              << ", " << e.node_b << ")\n";
    return 1;
  } catch (const fw::BudgetExceededError& e) {
    std::cout << e.what() << '\n';
    return 1;
  }
  const fw::AdaptResult& res = *maybe;
  const auto n = res.fiber->size();
  const auto msize = res.basis.moves.size();
  std::cout << "fdiam = " << res.fiber_diameter << '\n';
  std::cout << "|adapted| = " << msize << '\n';
  fw::Rat closed = fw::Rat(1) - fw::Rat((long long)n, (long long)msize);
  std::cout << "slem = 1 - |F|/|M^b| = " << fw::rat_to_string(closed) << " ("
            << fmt12(fw::to_double(closed)) << ")\n";
  auto graph = fw::build_fiber_graph(res.fiber, res.basis.moves);
  std::cout << "complete = " << (fw::diameter(graph) <= 1 ? "yes" : "no") << '\n';
  if (print_moves)
    for (const auto& m : res.basis.moves.moves())
      std::cout << fw::vec_to_string(m) << '\n';
  return 0;
}

int cmd_walk(const std::string& matrix_path, const std::string& rhs_path,
             const std::string& moves_path, const std::string& mode,
             std::uint64_t steps, std::uint64_t seed, std::uint64_t record_every,
             std::size_t start, const std::string& out_path,
             const std::string& target_path) {
  auto in = load_graph_inputs(matrix_path, rhs_path, moves_path);
  auto fiber = fw::enumerate_fiber(in.matrix, in.rhs);
  auto graph = fw::build_fiber_graph(fiber, in.moves);

  fw::WalkConfig cfg;
  cfg.steps = steps;
  cfg.seed = seed;
  cfg.start = start;
  cfg.record_every = record_every ? record_every : std::max<std::uint64_t>(1, steps / 100);
  if (mode == "simple")
    cfg.mode = fw::WalkMode::simple;
  else if (mode == "applicable_only")
    cfg.mode = fw::WalkMode::applicable_only;
  else
    cfg.mode = fw::WalkMode::metropolis;
  if (!target_path.empty()) {
    fw::IntVec weights = fw::parse_vector_file(target_path);
    if (weights.size() != graph.node_count)
      throw fw::ParseError(fw::ParseErrorKind::wrong_entry_count,
                           "target length does not match the fiber size");
    double total = 0;
    std::vector<double> t(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      t[i] = fw::to_double(weights[i]);
      total += t[i];
    }
    for (double& x : t) x /= total;
    cfg.target = std::move(t);
  }

  fw::WalkTrace trace;
  try {
    trace = fw::run_walk(graph, cfg);
  } catch (const fw::IsolatedNodeError& e) {
    std::cout << e.what() << '\n';
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    fw::write_trace_csv(out, trace);
  } else {
    fw::write_trace_csv(std::cout, trace);
  }
  std::cout << "steps = " << cfg.steps << ", seed = " << trace.seed << '\n';
  std::cout << "rejection rate = "
            << fmt12(cfg.steps ? double(trace.rejection_count) / double(cfg.steps) : 0.0)
            << '\n';
  std::cout << "final tv = " << fmt12(trace.tv_curve.back().tv) << '\n';
  return 0;
}

int cmd_slem_curve(const std::string& model, const std::vector<long long>& params,
                   long long imax, const std::string& out_path) {
  auto rows = fw::compute_slem_curve(model, params, imax);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  fw::write_slem_curve_csv(out, rows);
  out.flush();
  std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fiber-walk analysis toolkit"};
  app.require_subcommand(1);

  std::string matrix_path, rhs_path, moves_path, out_path, target_path;
  bool points = false, bound = false;
  long long growth = 0;
  bool w_slem = false, w_diam = false, w_exp = false, w_bounds = false;
  bool print_moves = false;
  std::string mode = "simple";
  std::uint64_t steps = 1000, seed = 0, record_every = 0;
  std::size_t start = 0;
  std::string exp_model;
  std::vector<long long> exp_params;
  long long exp_imax = 1;

  auto* check = app.add_subcommand("check", "kernel-positivity certificate or witness");
  check->add_option("matrix", matrix_path, "matrix file")->required();

  auto* fiber = app.add_subcommand("fiber", "enumerate a fiber");
  fiber->add_option("matrix", matrix_path)->required();
  fiber->add_option("rhs", rhs_path)->required();
  fiber->add_flag("--points", points, "print all fiber points");
  fiber->add_flag("--bound", bound, "print the certificate size bound");
  fiber->add_option("--growth", growth, "print |F(A, i*b)| for i = 0..N");

  auto* graph = app.add_subcommand("graph", "fiber-graph analysis");
  graph->add_option("matrix", matrix_path)->required();
  graph->add_option("rhs", rhs_path)->required();
  graph->add_option("moves", moves_path)->required();
  graph->add_flag("--slem", w_slem, "second largest eigenvalue modulus");
  graph->add_flag("--diam", w_diam, "graph diameter");
  graph->add_flag("--expansion", w_exp, "exact edge-expansion");
  graph->add_flag("--bounds", w_bounds, "expansion and loop-removal inequalities");

  auto* adapt = app.add_subcommand("adapt", "diameter-adapted move set");
  adapt->add_option("matrix", matrix_path)->required();
  adapt->add_option("rhs", rhs_path)->required();
  adapt->add_option("moves", moves_path)->required();
  adapt->add_flag("--print-moves", print_moves, "list the adapted moves");

  auto* walk = app.add_subcommand("walk", "simulate a fiber walk");
  walk->add_option("matrix", matrix_path)->required();
  walk->add_option("rhs", rhs_path)->required();
  walk->add_option("moves", moves_path)->required();
  walk->add_option("--mode", mode)
      ->check(CLI::IsMember({"simple", "applicable_only", "metropolis"}));
  walk->add_option("--steps", steps);
  walk->add_option("--seed", seed);
  walk->add_option("--record-every", record_every);
  walk->add_option("--start", start, "start node index");
  walk->add_option("--out", out_path, "trace CSV path (default: stdout)");
  walk->add_option("--target", target_path,
                   "vector file of positive weights (metropolis target)");

  auto* experiment = app.add_subcommand("experiment", "reproducible experiments");
  experiment->require_subcommand(1);
  auto* curve = experiment->add_subcommand(
      "slem-curve", "conventional vs adapted slem along a ray");
  curve->add_option("--model", exp_model)
      ->required()
      ->check(CLI::IsMember({"a_d", "independence", "hemmecke"}));
  curve->add_option("--params", exp_params, "model parameters")->required();
  curve->add_option("--imax", exp_imax)->required()->check(CLI::PositiveNumber);
  curve->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(matrix_path);
    if (fiber->parsed()) return cmd_fiber(matrix_path, rhs_path, points, bound, growth);
    if (graph->parsed())
      return cmd_graph(matrix_path, rhs_path, moves_path, w_slem, w_diam, w_exp, w_bounds);
    if (adapt->parsed())
      return cmd_adapt(matrix_path, rhs_path, moves_path, print_moves);
    if (walk->parsed())
      return cmd_walk(matrix_path, rhs_path, moves_path, mode, steps, seed, record_every,
                      start, out_path, target_path);
    if (experiment->parsed() && curve->parsed()) {
      if (exp_model == "independence" && exp_params.size() != 2)
        throw fw::ParseError(fw::ParseErrorKind::malformed_header,
                             "independence takes --params n m");
      if (exp_model != "independence" && exp_params.size() != 1)
        throw fw::ParseError(fw::ParseErrorKind::malformed_header,
                             "model takes a single parameter");
      return cmd_slem_curve(exp_model, exp_params, exp_imax, out_path);
    }
  } catch (const fw::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
