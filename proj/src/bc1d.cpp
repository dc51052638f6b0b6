#include "chebdisk/bc1d.hpp"

#include <cmath>

namespace chebdisk {

namespace {

// Closed-form inverse of the 2x2 elimination block.  Propositions on the
// determinants make singularity impossible under the constructor
// preconditions, so hitting the guard means the assembly itself is wrong.
Eigen::Matrix2d invert_elimination(const Eigen::Matrix2d& q) {
  const double det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
  const double scale = q.cwiseAbs().maxCoeff();
  if (!(std::abs(det) > 1e-14 * scale * scale))
    throw SingularElimination("1D boundary elimination block is singular");
  Eigen::Matrix2d inv;
  inv << q(1, 1), -q(0, 1), -q(1, 0), q(0, 0);
  return inv / det;
}

// Shared assembly for the three second-order kinds: folds the eliminated
// boundary pair into the interior block of D^(2).
//   matrix_ij = D2_{i+1,j+1} - D2_{i+1,1} (Qi G_j)_1 - D2_{i+1,N+1} (Qi G_j)_2
//   shift_i   = D2_{i+1,1} (Qi H)_1 + D2_{i+1,N+1} (Qi H)_2     (+ Dirichlet terms)
void fold_second_order(const Eigen::MatrixXd& d2, const Eigen::Matrix2Xd& qi_g,
                       const Eigen::Vector2d& qi_h, AffineOperator& op) {
  const int n = static_cast<int>(d2.rows()) - 1;  // N
  const int ni = n - 1;
  const Eigen::VectorXd col_b = d2.block(1, 0, ni, 1);
  const Eigen::VectorXd col_a = d2.block(1, n, ni, 1);
  op.matrix = d2.block(1, 1, ni, ni);
  op.matrix.noalias() -= col_b * qi_g.row(0);
  op.matrix.noalias() -= col_a * qi_g.row(1);
  op.shift = col_b * qi_h(0) + col_a * qi_h(1);
  op.recovery_const = qi_h;
  op.recovery_coeffs = qi_g;
}

}  // namespace

Eigen::VectorXd AffineOperator::apply(const Eigen::VectorXd& interior) const {
  if (interior.size() != size())
    throw DimensionMismatch("AffineOperator::apply: interior size mismatch");
  return matrix * interior + shift;
}

AffineOperator dirichlet_op(const Grid1D& grid, double alpha, double beta) {
  const int n = grid.n_panels;
  const Eigen::MatrixXd d2 = cheb_diff_matrix(grid, 2).entries;

  AffineOperator op;
  op.kind = BoundaryKind1D::Dirichlet;
  op.matrix = d2.block(1, 1, n - 1, n - 1);
  op.shift = beta * d2.block(1, 0, n - 1, 1) + alpha * d2.block(1, n, n - 1, 1);
  op.recovery_const << beta, alpha;
  op.recovery_coeffs = Eigen::Matrix2Xd::Zero(2, n - 1);
  return op;
}

AffineOperator neumann_op(const Grid1D& grid, double alpha, double beta) {
  const int n = grid.n_panels;
  const Eigen::MatrixXd d1 = cheb_diff_matrix(grid, 1).entries;
  const Eigen::MatrixXd d2 = cheb_diff_matrix(grid, 2).entries;

  Eigen::Matrix2d q;
  q << d1(n, 0), d1(n, n), d1(0, 0), d1(0, n);
  const Eigen::Matrix2d qi = invert_elimination(q);

  Eigen::Matrix2Xd g(2, n - 1);
  g.row(0) = d1.row(n).segment(1, n - 1);
  g.row(1) = d1.row(0).segment(1, n - 1);

  AffineOperator op;
  op.kind = BoundaryKind1D::Neumann;
  fold_second_order(d2, qi * g, qi * Eigen::Vector2d(alpha, beta), op);
  return op;
}

AffineOperator robin_op(const Grid1D& grid, const RobinBC& spec) {
  if (!(spec.alpha * spec.beta > 0.0))
    throw InvalidRobin("robin_op: requires alpha*beta > 0");
  const int n = grid.n_panels;
  const Eigen::MatrixXd d1 = cheb_diff_matrix(grid, 1).entries;
  const Eigen::MatrixXd d2 = cheb_diff_matrix(grid, 2).entries;

  // Sign convention: -beta u'(a) on the left end, +beta u'(b) on the right.
  Eigen::Matrix2d q;
  q << -spec.beta * d1(n, 0), spec.alpha - spec.beta * d1(n, n),
      spec.alpha + spec.beta * d1(0, 0), spec.beta * d1(0, n);
  const Eigen::Matrix2d qi = invert_elimination(q);

  Eigen::Matrix2Xd g(2, n - 1);
  g.row(0) = -spec.beta * d1.row(n).segment(1, n - 1);
  g.row(1) = spec.beta * d1.row(0).segment(1, n - 1);

  AffineOperator op;
  op.kind = BoundaryKind1D::Robin;
  fold_second_order(d2, qi * g, qi * Eigen::Vector2d(spec.g1, spec.g2), op);
  return op;
}

AffineOperator biharmonic_op(const Grid1D& grid, const ClampedBC& spec) {
  const int n = grid.n_panels;
  if (n < 4) throw InvalidGrid("biharmonic_op: requires N >= 4");
  const Eigen::MatrixXd d1 = cheb_diff_matrix(grid, 1).entries;
  const Eigen::MatrixXd d4 = cheb_diff_matrix(grid, 4).entries;

  // u(x_1) = beta1 and u(x_{N+1}) = alpha1 are known; the derivative
  // conditions eliminate u(x_2) and u(x_N).
  Eigen::Matrix2d q;
  q << d1(n, 1), d1(n, n - 1), d1(0, 1), d1(0, n - 1);
  const Eigen::Matrix2d qi = invert_elimination(q);

  Eigen::Vector2d h(spec.alpha2, spec.beta2);
  h -= spec.beta1 * Eigen::Vector2d(d1(n, 0), d1(0, 0));
  h -= spec.alpha1 * Eigen::Vector2d(d1(n, n), d1(0, n));

  const int ni = n - 3;
  Eigen::Matrix2Xd g(2, ni);
  g.row(0) = d1.row(n).segment(2, ni);
  g.row(1) = d1.row(0).segment(2, ni);

  const Eigen::Matrix2Xd qi_g = qi * g;
  const Eigen::Vector2d qi_h = qi * h;

  const Eigen::VectorXd col2 = d4.block(2, 1, ni, 1);
  const Eigen::VectorXd colN = d4.block(2, n - 1, ni, 1);

  AffineOperator op;
  op.kind = BoundaryKind1D::Clamped;
  op.derivative_order = 4;
  op.first_interior = 3;
  op.matrix = d4.block(2, 2, ni, ni);
  op.matrix.noalias() -= col2 * qi_g.row(0);
  op.matrix.noalias() -= colN * qi_g.row(1);
  op.shift = spec.beta1 * d4.block(2, 0, ni, 1) +
             spec.alpha1 * d4.block(2, n, ni, 1) + col2 * qi_h(0) +
             colN * qi_h(1);
  op.recovery_const = qi_h;
  op.recovery_coeffs = qi_g;
  op.endpoint_values << spec.beta1, spec.alpha1;
  return op;
}

AffineOperator make_operator(const Grid1D& grid, const BoundarySpec1D& spec) {
  return std::visit(
      [&](const auto& s) -> AffineOperator {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DirichletBC>)
          return dirichlet_op(grid, s.alpha, s.beta);
        else if constexpr (std::is_same_v<T, NeumannBC>)
          return neumann_op(grid, s.alpha, s.beta);
        else if constexpr (std::is_same_v<T, RobinBC>)
          return robin_op(grid, s);
        else
          return biharmonic_op(grid, s);
      },
      spec);
}

Eigen::Vector2d recover_boundary(const AffineOperator& op,
                                 const Eigen::VectorXd& interior) {
  if (interior.size() != op.size())
    throw DimensionMismatch("recover_boundary: interior size mismatch");
  return op.recovery_const - op.recovery_coeffs * interior;
}

}  // namespace chebdisk
