#pragma once

#include <Eigen/Dense>
#include <string>

#include "chebdisk/errors.hpp"

namespace chebdisk {

/// Chebyshev-Gauss-Lobatto grid mapped to [a, b].
///
/// Nodes are stored in descending order, x(0) = b and x(n_panels) = a,
/// following x_i = ((b-a) cos((i-1) pi / N) + b + a) / 2 with 1-based i.
/// All downstream index arithmetic relies on this ordering.
struct Grid1D {
  int n_panels = 0;  ///< N; the grid has N+1 nodes
  double a = 0.0;
  double b = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd bary_weights;  ///< barycentric weights (alternating sign, halved at ends)

  int n_nodes() const { return n_panels + 1; }
  std::string tag() const;
};

/// Dense differentiation matrix tagged with its order and source grid.
struct DiffMatrix {
  int order = 1;
  Eigen::MatrixXd entries;
  std::string grid_tag;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Builds the CGL grid on [a, b].  Requires N >= 2 and b > a, both finite.
Grid1D cgl_grid(int n_panels, double a, double b);

/// Order-m pseudospectral differentiation matrix on the grid.
///
/// The order-1 entries use the classical CGL formulas with node differences
/// evaluated through trigonometric identities and a negative-sum diagonal.
/// Higher orders are matrix powers of the order-1 matrix; the diagonal is
/// rebalanced after every multiplication so each order annihilates constants
/// exactly.  Requires 1 <= m <= n_panels.
DiffMatrix cheb_diff_matrix(const Grid1D& grid, int order);

/// Evaluates the degree-N interpolant of `values` at x via the barycentric
/// formula.  Returns values(i) exactly when x coincides with node i.
/// Throws OutOfDomain unless a <= x <= b.
double lagrange_eval(const Grid1D& grid, const Eigen::VectorXd& values, double x);

}  // namespace chebdisk
