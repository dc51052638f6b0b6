#pragma once

#include <Eigen/Dense>

#include "chebdisk/chebyshev.hpp"
#include "chebdisk/errors.hpp"

namespace chebdisk {

/// Equispaced periodic grid theta_l = 2 pi l / N_theta for l = 1..N_theta.
/// N_theta must be even and at least 4.
struct AngularGrid {
  int n_angles = 0;
  Eigen::VectorXd angles;

  double spacing() const;
  std::string tag() const;
};

AngularGrid angular_grid(int n_angles);

/// The periodic cardinal function S(theta) = sin(N theta / 2) / (N tan(theta / 2)),
/// with the removable singularity at theta = 0 (mod 2 pi) filled by its limit 1.
double dirichlet_kernel(int n_angles, double theta);

/// m-th derivative of the cardinal function, m in 1..4, from analytically
/// differentiated closed forms.  At theta = 0 (mod 2 pi) returns the analytic
/// limit: 0 for odd m, -N^2/12 - 1/6 for m = 2, N^4/80 + N^2/12 - 1/30 for m = 4.
double dirichlet_kernel_derivative(int n_angles, int order, double theta);

/// Fourier differentiation matrix of order m in 1..4.
///
/// Entry (k, l) is the m-th derivative of the cardinal function at
/// theta_k - theta_l.  Each order is materialized independently; on this
/// grid the higher orders are not powers of the first.  The matrix is
/// circulant by construction: entries depend only on (k - l) mod N_theta,
/// and odd/even orders are exactly antisymmetric/symmetric.
DiffMatrix fourier_diff_matrix(const AngularGrid& grid, int order);

}  // namespace chebdisk
