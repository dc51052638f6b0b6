#include "chebdisk/solver.hpp"

#include <cmath>
#include <sstream>

namespace chebdisk {

namespace {

// The boundary-embedded high-order operators are legitimately very
// ill-conditioned (the clamped bilaplacian reaches rcond ~ 1e-18 at the
// reference grids) while partial-pivoting LU still delivers small forward
// error, so singularity is judged by the outcome: a non-finite solution.
// The caller reports rcond in the failure message.
template <typename ErrorType>
Eigen::VectorXd solve_or_throw(const Eigen::MatrixXd& m,
                               const Eigen::VectorXd& rhs, const char* what) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  Eigen::VectorXd x = lu.solve(rhs);
  if (!x.allFinite()) {
    std::ostringstream os;
    os << what << ": matrix numerically singular (rcond = " << lu.rcond()
       << ")";
    throw ErrorType(os.str());
  }
  return x;
}

}  // namespace

const Eigen::MatrixXd& ProblemDefinition::matrix() const {
  return std::visit([](const auto& o) -> const Eigen::MatrixXd& { return o.matrix; },
                    op);
}

const Eigen::VectorXd& ProblemDefinition::shift() const {
  return std::visit([](const auto& o) -> const Eigen::VectorXd& { return o.shift; },
                    op);
}

Eigen::VectorXd ProblemDefinition::recover(const Eigen::VectorXd& interior) const {
  if (const auto* op1d = std::get_if<AffineOperator>(&op))
    return recover_boundary(*op1d, interior);
  const auto& opdisk = std::get<DiskAffineOperator>(op);
  const Eigen::MatrixXd rings = recover_boundary_rings(opdisk, interior);
  Eigen::VectorXd flat(rings.size());
  for (int i = 0; i < rings.rows(); ++i)
    flat.segment(i * rings.cols(), rings.cols()) = rings.row(i);
  return flat;
}

Eigen::VectorXd ProblemDefinition::reaction_at(const Eigen::VectorXd& u) const {
  if (linear) {
    Eigen::VectorXd f = linear_s;
    if (linear_c.size() > 0) f += linear_c.cwiseProduct(u);
    return f;
  }
  Eigen::VectorXd f(u.size());
  for (int i = 0; i < u.size(); ++i) f(i) = reaction(i, u(i));
  return f;
}

Eigen::VectorXd ProblemDefinition::reaction_du_at(const Eigen::VectorXd& u) const {
  if (linear) {
    if (linear_c.size() > 0) return linear_c;
    return Eigen::VectorXd::Zero(u.size());
  }
  Eigen::VectorXd f(u.size());
  for (int i = 0; i < u.size(); ++i) f(i) = reaction_du(i, u(i));
  return f;
}

SolveReport solve_linear(const ProblemDefinition& problem) {
  if (!problem.linear)
    throw Error("solve_linear: problem is not flagged linear");
  const Eigen::Index n = problem.size();
  if (problem.linear_s.size() != n ||
      (problem.linear_c.size() != 0 && problem.linear_c.size() != n))
    throw DimensionMismatch("solve_linear: c/s length mismatch");

  Eigen::MatrixXd a = problem.matrix();
  if (problem.linear_c.size() > 0) a += Eigen::MatrixXd(problem.linear_c.asDiagonal());
  const Eigen::VectorXd rhs = -problem.shift() - problem.linear_s;

  SolveReport report;
  report.solution = solve_or_throw<SingularSystem>(a, rhs, "solve_linear");
  const Eigen::VectorXd residual = problem.matrix() * report.solution +
                                   problem.reaction_at(report.solution) +
                                   problem.shift();
  report.residual_norm = residual.lpNorm<Eigen::Infinity>();
  const double rhs_norm = rhs.lpNorm<Eigen::Infinity>();
  // A residual this large relative to the data means the factorization
  // produced no usable digits (e.g. a singular but consistent-looking
  // system); partial pivoting leaves tiny residuals on any solvable system.
  if (report.residual_norm > 1e-2 * rhs_norm) {
    std::ostringstream os;
    os << "solve_linear: system numerically singular (rcond = "
       << Eigen::PartialPivLU<Eigen::MatrixXd>(a).rcond()
       << ", relative residual = " << report.residual_norm / rhs_norm << ")";
    throw SingularSystem(os.str());
  }
  report.boundary = problem.recover(report.solution);
  report.converged = report.residual_norm <= 1e-10 * rhs_norm;
  return report;
}

SolveReport solve_newton(const ProblemDefinition& problem,
                         const Eigen::VectorXd& u0, double tol, int max_iter) {
  if (!problem.linear && (!problem.reaction || !problem.reaction_du))
    throw Error("solve_newton: reaction and reaction_du are required");
  if (!(tol > 0.0)) throw Error("solve_newton: tol must be positive");
  if (u0.size() != problem.size())
    throw DimensionMismatch("solve_newton: u0 size mismatch");

  const Eigen::MatrixXd& d = problem.matrix();
  const Eigen::VectorXd& w = problem.shift();

  Eigen::VectorXd u = u0;
  Eigen::VectorXd residual = d * u + problem.reaction_at(u) + w;
  double rnorm = residual.lpNorm<Eigen::Infinity>();

  SolveReport report;
  report.newton_iterations = 0;
  report.residual_history.push_back(rnorm);

  for (int it = 0; it < max_iter && rnorm > tol; ++it) {
    Eigen::MatrixXd jac = d;
    jac += Eigen::MatrixXd(problem.reaction_du_at(u).asDiagonal());
    const Eigen::VectorXd step =
        solve_or_throw<SingularJacobian>(jac, residual, "solve_newton");

    // Full step first; halve only while the residual grows.
    double lambda = 1.0;
    Eigen::VectorXd u_next = u - step;
    Eigen::VectorXd r_next = d * u_next + problem.reaction_at(u_next) + w;
    double rn_next = r_next.lpNorm<Eigen::Infinity>();
    for (int back = 0; back < 40 && rn_next > rnorm; ++back) {
      lambda *= 0.5;
      u_next = u - lambda * step;
      r_next = d * u_next + problem.reaction_at(u_next) + w;
      rn_next = r_next.lpNorm<Eigen::Infinity>();
    }

    u = std::move(u_next);
    residual = std::move(r_next);
    rnorm = rn_next;
    ++report.newton_iterations;
    report.residual_history.push_back(rnorm);
  }

  report.solution = u;
  report.boundary = problem.recover(u);
  report.residual_norm = rnorm;
  report.converged = rnorm <= tol;
  return report;
}

}  // namespace chebdisk
