#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "chebdisk/chebyshev.hpp"
#include "chebdisk/errors.hpp"
#include "chebdisk/fourier.hpp"

namespace chebdisk {

/// Collocation grid on the disk of radius R, covered once: only the positive
/// CGL radii r_k = R cos((k-1) pi / N_r), k = 1..(N_r+1)/2, paired with the
/// equispaced angles theta_l = 2 pi l / N_theta.  N_r must be odd (the origin
/// is never a node) and N_theta even.  The fictitious point (-r, theta) is
/// identified with (r, theta + pi).
struct DiskGrid {
  int n_r = 0;
  int n_theta = 0;
  double radius = 1.0;
  Eigen::VectorXd radii;  ///< (N_r+1)/2 values, strictly decreasing from R
  AngularGrid angles;

  int rings() const { return (n_r + 1) / 2; }
  int nodes() const { return rings() * n_theta; }
  std::string tag() const;
};

DiskGrid disk_grid(int n_r, int n_theta, double radius);

/// Vectorization layouts for fields on the disk grid: entry N_theta*(i-1)+j
/// holds the value at ring i (counted from the boundary inward) and angle j.
enum class FieldLayout {
  Full,                ///< all rings, length rings() * N_theta
  Interior,            ///< rings 2.., length (rings()-1) * N_theta
  BiharmonicInterior,  ///< rings 3.., length (rings()-2) * N_theta
};

int field_length(const DiskGrid& grid, FieldLayout layout);
int first_ring(FieldLayout layout);

struct PolarField {
  std::string grid_tag;
  FieldLayout layout = FieldLayout::Full;
  Eigen::VectorXd values;
};

/// Samples f(r, theta) on the grid rings covered by `layout`.
PolarField sample_disk_field(const DiskGrid& grid, FieldLayout layout,
                             const std::function<double(double, double)>& f);

/// The two ((N_r+1)/2)^2 blocks of the order-m radial differentiation matrix
/// (1/R^m) d^m L_j / dy^m (y_i): `aligned` multiplies the coefficients at the
/// same angle, `antipodal` the coefficients half a turn away (columns of the
/// full matrix in reversed order, i.e. column N_r+2-j).
struct RadialSubmatrices {
  Eigen::MatrixXd aligned;    ///< D_1^(m)
  Eigen::MatrixXd antipodal;  ///< D_2^(m)
};

RadialSubmatrices radial_submatrices(const DiskGrid& grid, int order);

/// A (x) I + B (x) Sw on ring-major vectors, where Sw is the half-turn angle
/// permutation j -> j + n_theta/2 (mod n_theta).  Building block for the polar
/// operators; n_theta must be even and >= 2.
Eigen::MatrixXd assemble_fold_kronecker(const Eigen::MatrixXd& aligned,
                                        const Eigen::MatrixXd& antipodal,
                                        int n_theta);

/// Dense discretization of the polar Laplacian on the full grid,
///   (D1'' + H D1') (x) I + (D2'' + H D2') (x) Sw + H^2 (x) Dtheta'',
/// with H = diag(1/r_i).  Size nodes() x nodes().
Eigen::MatrixXd polar_laplacian(const DiskGrid& grid);

/// Dense discretization of the polar bilaplacian on the full grid.
/// Requires at least 3 rings.
Eigen::MatrixXd polar_biharmonic(const DiskGrid& grid);

/// Dense discretization of d/dr on the full grid:
///   D1' (x) I + D2' (x) Sw.
Eigen::MatrixXd radial_derivative_matrix(const DiskGrid& grid);

/// Evaluates the Chebyshev-Fourier disk interpolant of a full field at
/// (r, theta), 0 <= r <= R (the origin is a valid evaluation point even
/// though it is never a node).  Reproduces field values exactly at nodes.
double disk_interpolant_eval(const DiskGrid& grid,
                             const Eigen::VectorXd& full_field, double r,
                             double theta);

}  // namespace chebdisk
