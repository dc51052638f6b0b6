#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chebdisk/solver.hpp"

namespace chebdisk {

/// Grid parameters for one run: `n` for interval problems, `nr_half` (the
/// number of rings, (N_r+1)/2) and `n_theta` for disk problems.
struct GridRequest {
  int n = 0;
  int nr_half = 0;
  int n_theta = 0;
  double radius = 1.0;

  std::string label() const;
};

/// A grid size published for this problem together with the max-abs error
/// reported there, used to reproduce the reference error tables.
struct ReferenceResult {
  GridRequest grid;
  double reported_max_error = 0.0;
  std::string provenance;
};

/// A problem instantiated on a concrete grid, ready to solve.
struct BuiltProblem {
  ProblemDefinition def;
  std::variant<Grid1D, DiskGrid> grid;

  bool on_disk() const { return std::holds_alternative<DiskGrid>(grid); }
  const Grid1D& grid_1d() const { return std::get<Grid1D>(grid); }
  const DiskGrid& grid_disk() const { return std::get<DiskGrid>(grid); }
};

/// Catalogue entry: a named boundary-value problem with its exact solution
/// and the published grid/error pairs.
struct NamedProblem {
  std::string id;
  std::string description;
  bool on_disk = false;
  bool nonlinear = false;
  double default_u0 = 0.0;  ///< Newton start for nonlinear problems
  std::function<BuiltProblem(const GridRequest&)> build;
  std::function<double(double)> exact_1d;              ///< interval problems
  std::function<double(double, double)> exact_disk;    ///< (r, theta)
  std::vector<ReferenceResult> reference_grids;
};

/// Looks up a problem by id; throws UnknownProblem listing the known ids.
const NamedProblem& get_problem(const std::string& id);

const std::vector<NamedProblem>& all_problems();

/// Node-wise error measures of a solve against the problem's exact solution.
/// `two_norm` is the root-sum-square over the nodes divided by sqrt(count).
/// When eval_grid_k > 0 the interpolant is also compared on a refined
/// k (or k x k) evaluation grid.
struct ErrorSummary {
  double max_abs = 0.0;
  double two_norm = 0.0;
  std::optional<double> refined_max_abs;
};

ErrorSummary error_report(const NamedProblem& problem, const BuiltProblem& built,
                          const SolveReport& report, int eval_grid_k = 0);

/// Full set of node values (eliminated nodes reinstated) in grid order, e.g.
/// for writing solution files or interpolant evaluation.
Eigen::VectorXd assemble_full_values(const BuiltProblem& built,
                                     const SolveReport& report);

/// Solves a built problem with the problem's natural method (direct solve for
/// linear, Newton otherwise).
SolveReport run_problem(const NamedProblem& problem, const BuiltProblem& built,
                        double tol = 1e-8, int max_iter = 50,
                        std::optional<double> u0_override = std::nullopt);

}  // namespace chebdisk
