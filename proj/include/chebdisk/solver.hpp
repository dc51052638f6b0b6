#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "chebdisk/bc1d.hpp"
#include "chebdisk/bc2d.hpp"
#include "chebdisk/errors.hpp"

namespace chebdisk {

/// Discrete boundary-value problem  D u + F + W = 0, where (D, W) come from a
/// boundary-embedded operator and F is the reaction term sampled at the
/// interior unknowns.
///
/// Linear problems carry F as c .* u + s through `linear_c` / `linear_s`;
/// nonlinear ones supply `reaction` and `reaction_du` as functions of the
/// unknown index and the current value.
struct ProblemDefinition {
  std::variant<AffineOperator, DiskAffineOperator> op;
  int gamma = 2;  ///< derivative order in 1D (2 or 4); Laplacian power on the disk
  bool linear = false;
  Eigen::VectorXd linear_c;
  Eigen::VectorXd linear_s;
  std::function<double(int, double)> reaction;
  std::function<double(int, double)> reaction_du;

  const Eigen::MatrixXd& matrix() const;
  const Eigen::VectorXd& shift() const;
  Eigen::Index size() const { return matrix().rows(); }

  /// Recovered eliminated values for an interior solution, flattened
  /// (2 values in 1D; one or two rings of N_theta values on the disk).
  Eigen::VectorXd recover(const Eigen::VectorXd& interior) const;

  /// F evaluated entrywise at u.
  Eigen::VectorXd reaction_at(const Eigen::VectorXd& u) const;
  /// dF/du evaluated entrywise at u.
  Eigen::VectorXd reaction_du_at(const Eigen::VectorXd& u) const;
};

struct SolveReport {
  Eigen::VectorXd solution;
  Eigen::VectorXd boundary;
  double residual_norm = 0.0;
  int newton_iterations = 0;
  bool converged = false;
  /// Newton only: |residual|_inf at the start and after every iteration.
  std::vector<double> residual_history;
};

/// Direct solve of (D + diag(c)) u = -W - s.  Throws SingularSystem (with a
/// condition estimate in the message) if the factorization is unreliable.
/// `converged` certifies the residual |D u + F + W|_inf against
/// 1e-10 * |RHS|_inf.
SolveReport solve_linear(const ProblemDefinition& problem);

/// Damped Newton iteration on D u + F(u) + W = 0 from iterate u0, stopping
/// when |residual|_inf <= tol.  A halving line search engages only when a
/// full step increases the residual.  Non-convergence is reported through
/// `converged = false` on the best iterate, not an exception.
SolveReport solve_newton(const ProblemDefinition& problem,
                         const Eigen::VectorXd& u0, double tol = 1e-8,
                         int max_iter = 50);

}  // namespace chebdisk
