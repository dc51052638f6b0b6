#pragma once

#include <Eigen/Dense>

#include "chebdisk/errors.hpp"
#include "chebdisk/polar.hpp"

namespace chebdisk {

enum class BoundaryKindDisk { Dirichlet, Neumann, Robin, BiharmonicDirichlet };

/// Affine map T(u) = matrix * u + shift acting on the interior rings of the
/// disk, with the boundary ring(s) eliminated through the boundary data.
///
/// Laplace kinds act on rings 2.. (size (rings-1) * N_theta); the biharmonic
/// kind acts on rings 3.. (size (rings-2) * N_theta).  Eliminated rings are
/// reconstructed as  ring = recovery_const - recovery_map * u_interior; for
/// the biharmonic kind this yields ring 2, while ring 1 is the stored
/// Dirichlet samples.
struct DiskAffineOperator {
  BoundaryKindDisk kind = BoundaryKindDisk::Dirichlet;
  int laplacian_power = 1;  ///< 1 for Laplace kinds, 2 for biharmonic
  int n_theta = 0;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd shift;
  Eigen::VectorXd recovery_const;
  Eigen::MatrixXd recovery_map;
  Eigen::VectorXd ring1_values;  ///< biharmonic only: boundary samples f

  Eigen::Index size() const { return matrix.rows(); }
  FieldLayout interior_layout() const {
    return laplacian_power == 1 ? FieldLayout::Interior
                                : FieldLayout::BiharmonicInterior;
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& interior) const;
};

/// Laplacian with u(R, theta) = f; f sampled at the grid angles.
DiskAffineOperator laplace_dirichlet_op(const DiskGrid& grid,
                                        const Eigen::VectorXd& f);

/// Laplacian with du/dr(R, theta) = g.  The boundary block P_1 of the radial
/// derivative matrix is nonsingular for every valid grid.
DiskAffineOperator laplace_neumann_op(const DiskGrid& grid,
                                      const Eigen::VectorXd& g);

/// Laplacian with a(theta) u + b(theta) du/dr = h on the boundary;
/// requires a_l * b_l > 0 at every angle.
DiskAffineOperator laplace_robin_op(const DiskGrid& grid,
                                    const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b,
                                    const Eigen::VectorXd& h);

/// Bilaplacian with u(R, theta) = f and du/dr(R, theta) = g; eliminates both
/// the boundary ring and ring 2.  Requires at least 3 rings.
DiskAffineOperator biharmonic_dirichlet_op(const DiskGrid& grid,
                                           const Eigen::VectorXd& f,
                                           const Eigen::VectorXd& g);

/// Eliminated ring values as rows of an (n x N_theta) matrix: row 0 is the
/// boundary ring; the biharmonic kind adds ring 2 as row 1.
Eigen::MatrixXd recover_boundary_rings(const DiskAffineOperator& op,
                                       const Eigen::VectorXd& interior);

}  // namespace chebdisk
