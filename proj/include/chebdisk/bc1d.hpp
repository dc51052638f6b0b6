#pragma once

#include <Eigen/Dense>
#include <variant>

#include "chebdisk/chebyshev.hpp"
#include "chebdisk/errors.hpp"

namespace chebdisk {

// Boundary-condition payloads.  alpha/beta follow the index convention of the
// grid: Dirichlet means u(a) = alpha, u(b) = beta; Neumann u'(a) = alpha,
// u'(b) = beta; Robin alpha u(a) - beta u'(a) = g1, alpha u(b) + beta u'(b) = g2
// with alpha*beta > 0; Clamped u(a) = alpha1, u(b) = beta1, u'(a) = alpha2,
// u'(b) = beta2.
struct DirichletBC {
  double alpha = 0.0, beta = 0.0;
};
struct NeumannBC {
  double alpha = 0.0, beta = 0.0;
};
struct RobinBC {
  double alpha = 0.0, beta = 0.0, g1 = 0.0, g2 = 0.0;
};
struct ClampedBC {
  double alpha1 = 0.0, beta1 = 0.0, alpha2 = 0.0, beta2 = 0.0;
};

using BoundarySpec1D = std::variant<DirichletBC, NeumannBC, RobinBC, ClampedBC>;

enum class BoundaryKind1D { Dirichlet, Neumann, Robin, Clamped };

/// Affine map T(u) = matrix * u + shift acting on the interior unknowns of a
/// 1D boundary-value problem, with the boundary conditions eliminated into
/// `matrix` and `shift`.
///
/// Second-order kinds act on the N-1 interior nodes x_2..x_N; the clamped
/// fourth-order operator acts on the N-3 nodes x_3..x_{N-1}.  The data needed
/// to reconstruct the two eliminated values is captured at construction:
///   eliminated = recovery_const - recovery_coeffs * u_interior.
struct AffineOperator {
  BoundaryKind1D kind = BoundaryKind1D::Dirichlet;
  int derivative_order = 2;  ///< 2 or 4
  int first_interior = 2;    ///< 1-based grid index of the first unknown
  Eigen::MatrixXd matrix;
  Eigen::VectorXd shift;
  Eigen::Vector2d recovery_const = Eigen::Vector2d::Zero();
  Eigen::Matrix2Xd recovery_coeffs;
  /// Clamped only: the known endpoint values (u(x_1), u(x_{N+1})) = (beta1,
  /// alpha1), which recover_boundary does not report.
  Eigen::Vector2d endpoint_values = Eigen::Vector2d::Zero();

  Eigen::Index size() const { return matrix.rows(); }

  /// T(u) = matrix * u + shift.
  Eigen::VectorXd apply(const Eigen::VectorXd& interior) const;
};

/// Second derivative on (a, b) with u(a) = alpha, u(b) = beta eliminated.
AffineOperator dirichlet_op(const Grid1D& grid, double alpha, double beta);

/// Second derivative with u'(a) = alpha, u'(b) = beta.  The 2x2 elimination
/// system Q is nonsingular for every N > 1 (det Q = ((2N^2+1)^2 - 9)/(9(b-a)^2)).
AffineOperator neumann_op(const Grid1D& grid, double alpha, double beta);

/// Second derivative with Robin data; requires alpha*beta > 0.
AffineOperator robin_op(const Grid1D& grid, const RobinBC& spec);

/// Fourth derivative with clamped data; eliminates u(x_2) and u(x_N) on top of
/// the Dirichlet pair.  Requires N >= 4.
AffineOperator biharmonic_op(const Grid1D& grid, const ClampedBC& spec);

/// Dispatches on the payload type.
AffineOperator make_operator(const Grid1D& grid, const BoundarySpec1D& spec);

/// Values of u at the two eliminated nodes, ordered (x_1 side, x_{N+1} side);
/// for the clamped operator these are x_2 and x_N.  Dirichlet returns the
/// stored boundary constants unconditionally.
Eigen::Vector2d recover_boundary(const AffineOperator& op,
                                 const Eigen::VectorXd& interior);

}  // namespace chebdisk
