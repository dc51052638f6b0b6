// Command-line front end: solve catalogued boundary-value problems on
// interval or disk grids and emit solution grids and error summaries as CSV.

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebdisk/problems.hpp"

namespace {

using namespace chebdisk;

constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

// Shortest decimal that round-trips to the same double.
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct RunOptions {
  std::string problem_id;
  GridRequest grid;
  double tol = 1e-8;
  int max_iter = 50;
  std::optional<double> u0;
  std::string out_path;
  std::string summary_path;
  int eval_grid = 0;
};

struct RunResult {
  SolveReport report;
  ErrorSummary errors;
  BuiltProblem built;
  long long wall_ms = 0;
};

RunResult run_one(const NamedProblem& problem, const RunOptions& opt,
                  const GridRequest& grid) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult r{.report = {}, .errors = {}, .built = problem.build(grid)};
  r.report = run_problem(problem, r.built, opt.tol, opt.max_iter, opt.u0);
  r.errors = error_report(problem, r.built, r.report, opt.eval_grid);
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

void write_solution_file(const std::string& path, const NamedProblem& problem,
                         const GridRequest& grid, const RunResult& r) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw Error("cannot open output file " + path);
  out << "# chebdisk solution: problem=" << problem.id
      << " grid=" << grid.label() << "\n";
  const Eigen::VectorXd full = assemble_full_values(r.built, r.report);
  if (!r.built.on_disk()) {
    const Grid1D& g = r.built.grid_1d();
    out << "x,value\n";
    for (int i = 0; i < g.n_nodes(); ++i)
      out << fmt(g.nodes(i)) << "," << fmt(full(i)) << "\n";
    return;
  }
  const DiskGrid& g = r.built.grid_disk();
  out << "r,theta,x,y,value\n";
  for (int i = 0; i < g.rings(); ++i)
    for (int j = 0; j < g.n_theta; ++j) {
      const double rr = g.radii(i);
      const double th = g.angles.angles(j);
      out << fmt(rr) << "," << fmt(th) << "," << fmt(rr * std::cos(th)) << ","
          << fmt(rr * std::sin(th)) << "," << fmt(full(i * g.n_theta + j))
          << "\n";
    }
}

std::string summary_header(bool refined) {
  std::string h = "problem,grid,max_error,two_norm_error,newton_iterations,wall_time_ms";
  if (refined) h += ",refined_max_error";
  return h;
}

std::string summary_row(const NamedProblem& problem, const GridRequest& grid,
                        const RunResult& r) {
  std::ostringstream os;
  os << problem.id << "," << grid.label() << "," << fmt(r.errors.max_abs) << ","
     << fmt(r.errors.two_norm) << "," << r.report.newton_iterations << ","
     << r.wall_ms;
  if (r.errors.refined_max_abs) os << "," << fmt(*r.errors.refined_max_abs);
  return os.str();
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open summary file " + path);
  for (const std::string& l : lines) out << l << "\n";
}

GridRequest parse_grid_entry(const NamedProblem& problem, const std::string& s,
                             double radius) {
  GridRequest g;
  g.radius = radius;
  if (!problem.on_disk) {
    const auto pos = s.find(':');
    if (pos != std::string::npos)
      throw InvalidGrid("grid entry '" + s + "': 1D problems take a single N");
    g.n = std::stoi(s);
    return g;
  }
  const auto pos = s.find(':');
  if (pos == std::string::npos)
    throw InvalidGrid("grid entry '" + s +
                      "': disk problems take nrhalf:ntheta");
  g.nr_half = std::stoi(s.substr(0, pos));
  g.n_theta = std::stoi(s.substr(pos + 1));
  return g;
}

void validate_grid(const NamedProblem& problem, const GridRequest& g) {
  if (!problem.on_disk) {
    if (g.n < 2) throw InvalidGrid("--n must be at least 2");
    return;
  }
  if (g.nr_half < 2)
    throw InvalidGrid("--nr-half must be at least 2 (N_r = 2*nr_half - 1)");
  if (g.n_theta < 4 || g.n_theta % 2 != 0)
    throw InvalidGrid("ntheta must be even and at least 4");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Spectral collocation solver on intervals and the disk"};
  app.require_subcommand(1);

  RunOptions opt;
  std::string grids_arg;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--problem", opt.problem_id, "registry problem id")
        ->required();
    cmd->add_option("--radius", opt.grid.radius, "disk radius")
        ->default_val(1.0);
    cmd->add_option("--tol", opt.tol, "Newton residual tolerance")
        ->default_val(1e-8);
    cmd->add_option("--max-iter", opt.max_iter, "Newton iteration cap")
        ->default_val(50);
    cmd->add_option("--u0", opt.u0, "constant Newton start (overrides default)");
    cmd->add_option("--summary", opt.summary_path, "summary CSV path");
    cmd->add_option("--eval-grid", opt.eval_grid,
                    "also evaluate the interpolant on a k (or k x k) grid");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one problem instance");
  add_common(solve);
  solve->add_option("--n", opt.grid.n, "panels N (1D problems)");
  solve->add_option("--nr-half", opt.grid.nr_half,
                    "number of radial rings, (N_r+1)/2 (disk problems)");
  solve->add_option("--ntheta", opt.grid.n_theta,
                    "number of angles (disk problems, even)");
  solve->add_option("--out", opt.out_path, "solution CSV path");

  CLI::App* table = app.add_subcommand(
      "table", "solve a list of grids and emit one summary row per grid");
  add_common(table);
  table->add_option("--grids", grids_arg,
                    "comma-separated grid list: N,... (1D) or "
                    "nrhalf:ntheta,... (disk)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  const NamedProblem& problem = get_problem(opt.problem_id);

  if (solve->parsed()) {
    if (problem.on_disk && opt.grid.n > 0)
      throw InvalidGrid("--n is for 1D problems; use --nr-half/--ntheta");
    if (!problem.on_disk && (opt.grid.nr_half > 0 || opt.grid.n_theta > 0))
      throw InvalidGrid("--nr-half/--ntheta are for disk problems; use --n");
    validate_grid(problem, opt.grid);

    const RunResult r = run_one(problem, opt, opt.grid);
    if (!opt.out_path.empty())
      write_solution_file(opt.out_path, problem, opt.grid, r);
    const std::string row = summary_row(problem, opt.grid, r);
    if (!opt.summary_path.empty())
      write_lines(opt.summary_path,
                  {summary_header(opt.eval_grid > 1), row});
    std::cout << summary_header(opt.eval_grid > 1) << "\n" << row << "\n";
    if (!r.report.converged && problem.nonlinear) {
      std::cerr << "newton did not reach tol=" << opt.tol << " (residual "
                << r.report.residual_norm << ")\n";
      return kExitNoConvergence;
    }
    return 0;
  }

  // table
  std::vector<GridRequest> grids;
  std::stringstream ss(grids_arg);
  std::string entry;
  while (std::getline(ss, entry, ','))
    if (!entry.empty())
      grids.push_back(parse_grid_entry(problem, entry, opt.grid.radius));
  for (const GridRequest& g : grids) validate_grid(problem, g);

  std::vector<std::string> lines{summary_header(opt.eval_grid > 1)};
  for (const GridRequest& g : grids) {
    const RunResult r = run_one(problem, opt, g);
    if (!r.report.converged && problem.nonlinear) {
      std::cerr << "grid " << g.label() << ": newton did not converge\n";
      return kExitNoConvergence;
    }
    lines.push_back(summary_row(problem, g, r));
  }
  if (!opt.summary_path.empty()) write_lines(opt.summary_path, lines);
  for (const std::string& l : lines) std::cout << l << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UnknownProblem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidGrid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidRobin& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SingularSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const SingularJacobian& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
