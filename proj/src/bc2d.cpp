#include "chebdisk/bc2d.hpp"

namespace chebdisk {

namespace {

void check_samples(const DiskGrid& grid, const Eigen::VectorXd& v,
                   const char* what) {
  if (v.size() != grid.n_theta)
    throw DimensionMismatch(std::string(what) +
                            ": expected N_theta boundary samples");
}

// Factors the N_theta x N_theta boundary block once; the solved products are
// what the operator and the recovery record store.
struct BoundarySolve {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  explicit BoundarySolve(const Eigen::MatrixXd& block) : lu(block) {
    if (lu.rcond() < 1e-14)
      throw SingularElimination("disk boundary elimination block is singular");
  }
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const {
    return lu.solve(rhs);
  }
};

}  // namespace

Eigen::VectorXd DiskAffineOperator::apply(const Eigen::VectorXd& interior) const {
  if (interior.size() != size())
    throw DimensionMismatch("DiskAffineOperator::apply: interior size mismatch");
  return matrix * interior + shift;
}

DiskAffineOperator laplace_dirichlet_op(const DiskGrid& grid,
                                        const Eigen::VectorXd& f) {
  check_samples(grid, f, "laplace_dirichlet_op");
  const int nt = grid.n_theta;
  const int ni = (grid.rings() - 1) * nt;
  const Eigen::MatrixXd lap = polar_laplacian(grid);

  DiskAffineOperator op;
  op.kind = BoundaryKindDisk::Dirichlet;
  op.n_theta = nt;
  op.matrix = lap.block(nt, nt, ni, ni);
  op.shift = lap.block(nt, 0, ni, nt) * f;
  op.recovery_const = f;
  op.recovery_map = Eigen::MatrixXd::Zero(nt, ni);
  return op;
}

DiskAffineOperator laplace_neumann_op(const DiskGrid& grid,
                                      const Eigen::VectorXd& g) {
  check_samples(grid, g, "laplace_neumann_op");
  const int nt = grid.n_theta;
  const int ni = (grid.rings() - 1) * nt;
  const Eigen::MatrixXd lap = polar_laplacian(grid);
  const Eigen::MatrixXd p = radial_derivative_matrix(grid);

  const BoundarySolve p1(p.topLeftCorner(nt, nt));
  const Eigen::MatrixXd p1i_p2 = p1.solve(p.block(0, nt, nt, ni));
  const Eigen::VectorXd p1i_g = p1.solve(g);

  const Eigen::MatrixXd d1 = lap.block(nt, 0, ni, nt);

  DiskAffineOperator op;
  op.kind = BoundaryKindDisk::Neumann;
  op.n_theta = nt;
  op.matrix = lap.block(nt, nt, ni, ni);
  op.matrix.noalias() -= d1 * p1i_p2;
  op.shift = d1 * p1i_g;
  op.recovery_const = p1i_g;
  op.recovery_map = p1i_p2;
  return op;
}

DiskAffineOperator laplace_robin_op(const DiskGrid& grid,
                                    const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b,
                                    const Eigen::VectorXd& h) {
  check_samples(grid, a, "laplace_robin_op(a)");
  check_samples(grid, b, "laplace_robin_op(b)");
  check_samples(grid, h, "laplace_robin_op(h)");
  for (int l = 0; l < grid.n_theta; ++l)
    if (!(a(l) * b(l) > 0.0))
      throw InvalidRobin("laplace_robin_op: requires a(theta) b(theta) > 0");

  const int nt = grid.n_theta;
  const int ni = (grid.rings() - 1) * nt;
  const Eigen::MatrixXd lap = polar_laplacian(grid);
  const Eigen::MatrixXd p = radial_derivative_matrix(grid);

  // M_a + M_b P_1 and its action on M_b P_2 and h.
  Eigen::MatrixXd m = b.asDiagonal() * p.topLeftCorner(nt, nt);
  m += Eigen::MatrixXd(a.asDiagonal());
  const BoundarySolve ms(m);
  const Eigen::MatrixXd mi_bp2 =
      ms.solve(b.asDiagonal() * p.block(0, nt, nt, ni));
  const Eigen::VectorXd mi_h = ms.solve(h);

  const Eigen::MatrixXd d1 = lap.block(nt, 0, ni, nt);

  DiskAffineOperator op;
  op.kind = BoundaryKindDisk::Robin;
  op.n_theta = nt;
  op.matrix = lap.block(nt, nt, ni, ni);
  op.matrix.noalias() -= d1 * mi_bp2;
  op.shift = d1 * mi_h;
  op.recovery_const = mi_h;
  op.recovery_map = mi_bp2;
  return op;
}

DiskAffineOperator biharmonic_dirichlet_op(const DiskGrid& grid,
                                           const Eigen::VectorXd& f,
                                           const Eigen::VectorXd& g) {
  if (grid.rings() < 3)
    throw InvalidGrid("biharmonic_dirichlet_op: needs at least 3 rings");
  check_samples(grid, f, "biharmonic_dirichlet_op(f)");
  check_samples(grid, g, "biharmonic_dirichlet_op(g)");

  const int nt = grid.n_theta;
  const int ni = (grid.rings() - 2) * nt;
  const Eigen::MatrixXd bih = polar_biharmonic(grid);
  const Eigen::MatrixXd p = radial_derivative_matrix(grid);

  // g = P_1 f + P_2 u2 + P_3 u**, solved for the ring-2 values u2.
  const BoundarySolve p2(p.block(0, nt, nt, nt));
  const Eigen::MatrixXd p2i_p3 = p2.solve(p.block(0, 2 * nt, nt, ni));
  const Eigen::VectorXd p2i_rhs = p2.solve(g - p.topLeftCorner(nt, nt) * f);

  const Eigen::MatrixXd b1 = bih.block(2 * nt, 0, ni, nt);
  const Eigen::MatrixXd b2 = bih.block(2 * nt, nt, ni, nt);

  DiskAffineOperator op;
  op.kind = BoundaryKindDisk::BiharmonicDirichlet;
  op.laplacian_power = 2;
  op.n_theta = nt;
  op.matrix = bih.block(2 * nt, 2 * nt, ni, ni);
  op.matrix.noalias() -= b2 * p2i_p3;
  op.shift = b1 * f + b2 * p2i_rhs;
  op.recovery_const = p2i_rhs;
  op.recovery_map = p2i_p3;
  op.ring1_values = f;
  return op;
}

Eigen::MatrixXd recover_boundary_rings(const DiskAffineOperator& op,
                                       const Eigen::VectorXd& interior) {
  if (interior.size() != op.size())
    throw DimensionMismatch("recover_boundary_rings: interior size mismatch");

  const Eigen::VectorXd eliminated =
      op.recovery_const - op.recovery_map * interior;
  if (op.kind != BoundaryKindDisk::BiharmonicDirichlet) {
    Eigen::MatrixXd rings(1, op.n_theta);
    rings.row(0) = eliminated;
    return rings;
  }
  Eigen::MatrixXd rings(2, op.n_theta);
  rings.row(0) = op.ring1_values;
  rings.row(1) = eliminated;
  return rings;
}

}  // namespace chebdisk
