#include "chebdisk/polar.hpp"

#include <cmath>
#include <sstream>

namespace chebdisk {

namespace {

constexpr double kPi = 3.14159265358979323846;

Grid1D radial_line(const DiskGrid& grid) {
  // Full diameter [-R, R]; the 2/(b-a) mapping factor reproduces the 1/R^m
  // scaling of the radial matrices.
  return cgl_grid(grid.n_r, -grid.radius, grid.radius);
}

Eigen::VectorXd inverse_radii(const DiskGrid& grid, int power) {
  Eigen::VectorXd h(grid.rings());
  for (int i = 0; i < grid.rings(); ++i)
    h(i) = std::pow(1.0 / grid.radii(i), power);
  return h;
}

}  // namespace

std::string DiskGrid::tag() const {
  std::ostringstream os;
  os << "disk(Nr=" << n_r << ",Ntheta=" << n_theta << ",R=" << radius << ")";
  return os.str();
}

DiskGrid disk_grid(int n_r, int n_theta, double radius) {
  if (n_r < 3 || n_r % 2 == 0)
    throw InvalidGrid("disk_grid: N_r must be odd and >= 3");
  if (n_theta < 4 || n_theta % 2 != 0)
    throw InvalidGrid("disk_grid: N_theta must be even and >= 4");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidGrid("disk_grid: radius must be positive and finite");

  DiskGrid g;
  g.n_r = n_r;
  g.n_theta = n_theta;
  g.radius = radius;
  g.angles = angular_grid(n_theta);
  g.radii.resize(g.rings());
  for (int k = 0; k < g.rings(); ++k)
    g.radii(k) = radius * std::cos(k * kPi / n_r);
  return g;
}

int first_ring(FieldLayout layout) {
  switch (layout) {
    case FieldLayout::Full:
      return 1;
    case FieldLayout::Interior:
      return 2;
    default:
      return 3;
  }
}

int field_length(const DiskGrid& grid, FieldLayout layout) {
  return (grid.rings() - (first_ring(layout) - 1)) * grid.n_theta;
}

PolarField sample_disk_field(const DiskGrid& grid, FieldLayout layout,
                             const std::function<double(double, double)>& f) {
  PolarField field;
  field.grid_tag = grid.tag();
  field.layout = layout;
  field.values.resize(field_length(grid, layout));
  int idx = 0;
  for (int i = first_ring(layout) - 1; i < grid.rings(); ++i)
    for (int j = 0; j < grid.n_theta; ++j)
      field.values(idx++) = f(grid.radii(i), grid.angles.angles(j));
  return field;
}

RadialSubmatrices radial_submatrices(const DiskGrid& grid, int order) {
  if (order < 1 || order > 4)
    throw InvalidOrder("radial_submatrices: order must be 1..4");
  const Eigen::MatrixXd full = cheb_diff_matrix(radial_line(grid), order).entries;
  const int h = grid.rings();

  RadialSubmatrices sub;
  sub.aligned = full.topLeftCorner(h, h);
  sub.antipodal.resize(h, h);
  for (int j = 0; j < h; ++j)
    sub.antipodal.col(j) = full.col(grid.n_r - j).head(h);  // column N_r+2-j
  return sub;
}

Eigen::MatrixXd assemble_fold_kronecker(const Eigen::MatrixXd& aligned,
                                        const Eigen::MatrixXd& antipodal,
                                        int n_theta) {
  if (n_theta < 2 || n_theta % 2 != 0)
    throw InvalidGrid("assemble_fold_kronecker: n_theta must be even and >= 2");
  if (aligned.rows() != aligned.cols() || antipodal.rows() != antipodal.cols() ||
      aligned.rows() != antipodal.rows())
    throw DimensionMismatch("assemble_fold_kronecker: block size mismatch");

  const int h = static_cast<int>(aligned.rows());
  const int half = n_theta / 2;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(h * n_theta, h * n_theta);
  for (int i = 0; i < h; ++i)
    for (int ip = 0; ip < h; ++ip) {
      const double a = aligned(i, ip);
      const double b = antipodal(i, ip);
      for (int j = 0; j < n_theta; ++j) {
        out(i * n_theta + j, ip * n_theta + j) += a;
        out(i * n_theta + j, ip * n_theta + (j + half) % n_theta) += b;
      }
    }
  return out;
}

Eigen::MatrixXd polar_laplacian(const DiskGrid& grid) {
  const RadialSubmatrices d1 = radial_submatrices(grid, 1);
  const RadialSubmatrices d2 = radial_submatrices(grid, 2);
  const Eigen::VectorXd h1 = inverse_radii(grid, 1);
  const Eigen::VectorXd h2 = inverse_radii(grid, 2);

  Eigen::MatrixXd out = assemble_fold_kronecker(
      d2.aligned + h1.asDiagonal() * d1.aligned,
      d2.antipodal + h1.asDiagonal() * d1.antipodal, grid.n_theta);

  const Eigen::MatrixXd dt2 = fourier_diff_matrix(grid.angles, 2).entries;
  const int nt = grid.n_theta;
  for (int i = 0; i < grid.rings(); ++i)
    out.block(i * nt, i * nt, nt, nt) += h2(i) * dt2;
  return out;
}

Eigen::MatrixXd polar_biharmonic(const DiskGrid& grid) {
  if (grid.rings() < 3)
    throw InvalidGrid("polar_biharmonic: needs at least 3 rings (N_r >= 5)");

  const RadialSubmatrices r1 = radial_submatrices(grid, 1);
  const RadialSubmatrices r2 = radial_submatrices(grid, 2);
  const RadialSubmatrices r3 = radial_submatrices(grid, 3);
  const RadialSubmatrices r4 = radial_submatrices(grid, 4);
  const Eigen::VectorXd h1 = inverse_radii(grid, 1);
  const Eigen::VectorXd h2 = inverse_radii(grid, 2);
  const Eigen::VectorXd h3 = inverse_radii(grid, 3);
  const Eigen::VectorXd h4 = inverse_radii(grid, 4);

  // Pure radial part: D'''' + 2H D''' - H^2 D'' + H^3 D'.
  Eigen::MatrixXd out = assemble_fold_kronecker(
      r4.aligned + 2.0 * h1.asDiagonal() * r3.aligned -
          h2.asDiagonal() * r2.aligned + h3.asDiagonal() * r1.aligned,
      r4.antipodal + 2.0 * h1.asDiagonal() * r3.antipodal -
          h2.asDiagonal() * r2.antipodal + h3.asDiagonal() * r1.antipodal,
      grid.n_theta);

  const int nt = grid.n_theta;
  const int half = nt / 2;
  const Eigen::MatrixXd dt2 = fourier_diff_matrix(grid.angles, 2).entries;
  const Eigen::MatrixXd dt4 = fourier_diff_matrix(grid.angles, 4).entries;

  // Half-turn row permutation of Dtheta'': realizes Sw * Dtheta''.
  Eigen::MatrixXd sw_dt2(nt, nt);
  for (int j = 0; j < nt; ++j) sw_dt2.row(j) = dt2.row((j + half) % nt);

  // Mixed part: (2H^2 D'' - 2H^3 D') applied after the angular second
  // derivative, i.e. each ring block right-multiplied by Dtheta''.
  const Eigen::MatrixXd m_aligned = 2.0 * h2.asDiagonal() * r2.aligned -
                                    2.0 * h3.asDiagonal() * r1.aligned;
  const Eigen::MatrixXd m_antipodal = 2.0 * h2.asDiagonal() * r2.antipodal -
                                      2.0 * h3.asDiagonal() * r1.antipodal;
  for (int i = 0; i < grid.rings(); ++i)
    for (int ip = 0; ip < grid.rings(); ++ip)
      out.block(i * nt, ip * nt, nt, nt) +=
          m_aligned(i, ip) * dt2 + m_antipodal(i, ip) * sw_dt2;

  // Pure angular part: H^4 (x) (Dtheta'''' + 4 Dtheta'').
  const Eigen::MatrixXd ang = dt4 + 4.0 * dt2;
  for (int i = 0; i < grid.rings(); ++i)
    out.block(i * nt, i * nt, nt, nt) += h4(i) * ang;
  return out;
}

Eigen::MatrixXd radial_derivative_matrix(const DiskGrid& grid) {
  const RadialSubmatrices d1 = radial_submatrices(grid, 1);
  return assemble_fold_kronecker(d1.aligned, d1.antipodal, grid.n_theta);
}

double disk_interpolant_eval(const DiskGrid& grid,
                             const Eigen::VectorXd& full_field, double r,
                             double theta) {
  if (full_field.size() != grid.nodes())
    throw DimensionMismatch("disk_interpolant_eval: field is not a full field");
  if (r < 0.0 || r > grid.radius)
    throw OutOfDomain("disk_interpolant_eval: r outside [0, R]");

  const int nt = grid.n_theta;
  const int h = grid.rings();

  // Node fast path guarantees exact reproduction of stored values.
  for (int j = 0; j < nt; ++j) {
    if (theta != grid.angles.angles(j)) continue;
    for (int k = 0; k < h; ++k)
      if (r == grid.radii(k)) return full_field(k * nt + j);
    break;
  }

  // Radial cardinal functions on the full diameter, by the barycentric form.
  const int n_full = grid.n_r + 1;
  Eigen::VectorXd cardinal = Eigen::VectorXd::Zero(n_full);
  {
    const Grid1D line = radial_line(grid);
    int hit = -1;
    double den = 0.0;
    for (int i = 0; i < n_full; ++i) {
      const double d = r - line.nodes(i);
      if (d == 0.0) {
        hit = i;
        break;
      }
      cardinal(i) = line.bary_weights(i) / d;
      den += cardinal(i);
    }
    if (hit >= 0)
      cardinal = Eigen::VectorXd::Unit(n_full, hit);
    else
      cardinal /= den;
  }

  Eigen::VectorXd s_direct(nt), s_shifted(nt);
  const int half = nt / 2;
  for (int l = 0; l < nt; ++l) {
    s_direct(l) = dirichlet_kernel(nt, theta - grid.angles.angles(l));
    s_shifted(l) =
        dirichlet_kernel(nt, theta - grid.angles.angles((l + half) % nt));
  }

  double value = 0.0;
  for (int k = 0; k < h; ++k) {
    const auto ring = full_field.segment(k * nt, nt);
    value += cardinal(k) * ring.dot(s_direct);
    value += cardinal(grid.n_r - k) * ring.dot(s_shifted);
  }
  return value;
}

}  // namespace chebdisk
