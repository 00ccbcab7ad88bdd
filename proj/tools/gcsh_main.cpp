#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcsh/degree.hpp"
#include "gcsh/graph_io.hpp"
#include "gcsh/reporting.hpp"
#include "gcsh/spectral.hpp"
#include "gcsh/threshold.hpp"

namespace {

struct ExperimentConfig {
  std::string graph_path;
  std::string command;
  double lambda = 1.0;
  int p = 0;
  double sigma = 1.0;
  std::string f_source;
  std::vector<double> lambda_grid;
  int n_starts = 256;
  double tol = -1.0;  // command-dependent default
  std::uint64_t seed = 0;
  std::string out_path;
};

gcsh::VertexFunction resolve_source(const gcsh::GraphFile& file,
                                    const std::string& spec) {
  if (spec.empty()) {
    throw CLI::ValidationError("--f", "this command needs a source term");
  }
  if (spec.rfind("const:", 0) == 0) {
    return gcsh::VertexFunction::Constant(file.graph.size(),
                                          std::stod(spec.substr(6)));
  }
  if (spec.rfind("vortex:", 0) == 0) {
    std::vector<std::string> points;
    std::stringstream ss(spec.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) points.push_back(item);
    }
    return gcsh::vortex_source(file.graph, points);
  }
  auto it = file.functions.find(spec);
  if (it == file.functions.end()) {
    throw CLI::ValidationError("--f", "no function named '" + spec +
                                          "' in the graph file");
  }
  return it->second;
}

int run(const ExperimentConfig& cfg, std::ostream& os) {
  const gcsh::GraphFile file = gcsh::load_graph_file(cfg.graph_path);
  const gcsh::Graph& graph = file.graph;

  gcsh::NewtonConfig newton;
  if (cfg.tol > 0 && cfg.command != "threshold") newton.tol_residual = cfg.tol;

  if (cfg.command == "spectrum") {
    gcsh::emit_spectrum_json(gcsh::spectrum(graph), os);
    return 0;
  }

  const gcsh::VertexFunction f = resolve_source(file, cfg.f_source);

  if (cfg.command == "bounds") {
    const gcsh::ModelParams params{cfg.lambda, cfg.p, cfg.sigma, f};
    const auto cert = gcsh::apriori_certificate(
        graph, params, gcsh::tightest_Lambda(graph, params));
    gcsh::emit_certificate_json(cert, os);
    return 0;
  }
  if (cfg.command == "solve") {
    const gcsh::ModelParams params{cfg.lambda, cfg.p, cfg.sigma, f};
    const auto box = gcsh::apriori_certificate(
        graph, params, gcsh::tightest_Lambda(graph, params));
    const auto set = gcsh::multi_start_solve(graph, params, box, cfg.n_starts,
                                             newton, 1e-6, cfg.seed);
    gcsh::emit_solution_set_json(graph, set, os);
    return 0;
  }
  if (cfg.command == "degree") {
    const gcsh::ModelParams params{cfg.lambda, cfg.p, cfg.sigma, f};
    const auto report =
        gcsh::degree_by_enumeration(graph, params, cfg.n_starts, newton, cfg.seed);
    gcsh::emit_degree_json(report, os);
    return 0;
  }
  if (cfg.command == "sweep") {
    if (cfg.lambda_grid.empty()) {
      throw CLI::ValidationError("--lambda-grid", "sweep needs a lambda grid");
    }
    const auto sweep = gcsh::sweep_lambda(graph, f, cfg.p, cfg.lambda_grid,
                                          cfg.n_starts, newton, cfg.seed);
    gcsh::emit_bifurcation_csv(sweep, os);
    return 0;
  }
  if (cfg.command == "threshold") {
    const double bisect_tol = cfg.tol > 0 ? cfg.tol : 1e-6;
    const auto report = gcsh::lambda_star_bisect(graph, f, cfg.p, std::nullopt,
                                                 bisect_tol, cfg.n_starts, newton,
                                                 cfg.seed);
    std::vector<double> probes;
    probes.reserve(report.counts.size());
    for (const auto& [lambda, count] : report.counts) probes.push_back(lambda);
    const auto sweep = gcsh::sweep_lambda(graph, f, cfg.p, probes, cfg.n_starts,
                                          newton, cfg.seed);
    gcsh::emit_bifurcation_csv(sweep, os);
    std::cerr << "threshold bracket [" << gcsh::format_number(report.bracket_lo)
              << ", " << gcsh::format_number(report.bracket_hi)
              << "], closed-form bound " << gcsh::format_number(report.lower_bound)
              << ", n_starts " << report.n_starts_used << "\n";
    return 0;
  }
  throw CLI::ValidationError("--cmd", "unknown command '" + cfg.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  CLI::App app{
      "Solver and verification laboratory for the generalized Chern-Simons "
      "Higgs equation on weighted finite graphs"};
  app.add_option("--graph", cfg.graph_path, "graph JSON file")->required();
  app.add_option("--cmd", cfg.command,
                 "one of solve, degree, threshold, sweep, bounds, spectrum")
      ->required();
  app.add_option("--lambda", cfg.lambda, "coupling constant");
  app.add_option("--p", cfg.p, "nonlinearity exponent (non-negative integer)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--sigma", cfg.sigma, "deformation parameter in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--f", cfg.f_source,
                 "source term: NAME from the file, const:X, or vortex:a,b");
  app.add_option("--lambda-grid", cfg.lambda_grid, "sweep grid of couplings")
      ->delimiter(',');
  app.add_option("--n-starts", cfg.n_starts, "multi-start seed count")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol,
                 "residual tolerance (threshold: bisection width)");
  app.add_option("--seed", cfg.seed, "seed for all randomized sampling");
  app.add_option("--out", cfg.out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cfg.out_path.empty()) {
      return run(cfg, std::cout);
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "IoError: cannot open output file '" << cfg.out_path << "'\n";
      return 2;
    }
    return run(cfg, out);
  } catch (const gcsh::Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
