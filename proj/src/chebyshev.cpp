#include "chebdisk/chebyshev.hpp"

#include <cmath>
#include <sstream>

namespace chebdisk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void rebalance_diagonal(Eigen::MatrixXd& m) {
  m.diagonal().setZero();
  m.diagonal() = -m.rowwise().sum();
}

}  // namespace

std::string Grid1D::tag() const {
  std::ostringstream os;
  os << "cgl(" << n_panels << ",[" << a << "," << b << "])";
  return os.str();
}

Grid1D cgl_grid(int n_panels, double a, double b) {
  if (n_panels < 2) throw InvalidGrid("cgl_grid: need N >= 2");
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw InvalidGrid("cgl_grid: endpoints must be finite");
  if (!(b > a)) throw InvalidGrid("cgl_grid: need b > a");

  Grid1D g;
  g.n_panels = n_panels;
  g.a = a;
  g.b = b;
  const int n = n_panels + 1;
  g.nodes.resize(n);
  for (int i = 0; i < n; ++i)
    g.nodes(i) = ((b - a) * std::cos(i * kPi / n_panels) + b + a) / 2.0;

  g.bary_weights.resize(n);
  for (int i = 0; i < n; ++i) g.bary_weights(i) = (i % 2 == 0) ? 1.0 : -1.0;
  g.bary_weights(0) *= 0.5;
  g.bary_weights(n - 1) *= 0.5;
  return g;
}

DiffMatrix cheb_diff_matrix(const Grid1D& grid, int order) {
  if (order < 1) throw InvalidOrder("cheb_diff_matrix: order must be >= 1");
  if (order > grid.n_panels)
    throw InvalidOrder("cheb_diff_matrix: order exceeds n_panels");

  const int N = grid.n_panels;
  const int n = N + 1;
  Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  c(0) = 2.0;
  c(N) = 2.0;

  // Off-diagonal entries (c_i/c_j)(-1)^{i+j}/(y_i - y_j).  The node difference
  // y_i - y_j = 2 sin((t_i+t_j)/2) sin((t_j-t_i)/2) with t = i*pi/N is exact in
  // this form near coincident angles; the lower anti-triangle is filled from
  // the upper one through the y -> -y reflection, which negates entries.
  Eigen::MatrixXd d1(n, n);
  for (int i = 0; i < n; ++i) {
    const double ti = i * kPi / N;
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        d1(i, j) = 0.0;
        continue;
      }
      if (i + j > N) continue;  // filled by reflection below
      const double tj = j * kPi / N;
      const double dy = 2.0 * std::sin((ti + tj) / 2) * std::sin((tj - ti) / 2);
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      d1(i, j) = sign * (c(i) / c(j)) / dy;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j > N && i != j) d1(i, j) = -d1(N - i, N - j);
  rebalance_diagonal(d1);
  d1 *= 2.0 / (grid.b - grid.a);

  Eigen::MatrixXd result = d1;
  for (int m = 2; m <= order; ++m) {
    result = (result * d1).eval();
    rebalance_diagonal(result);
  }

  DiffMatrix out;
  out.order = order;
  out.entries = std::move(result);
  out.grid_tag = grid.tag();
  return out;
}

double lagrange_eval(const Grid1D& grid, const Eigen::VectorXd& values, double x) {
  if (values.size() != grid.n_nodes())
    throw DimensionMismatch("lagrange_eval: values size != node count");
  if (x < grid.a || x > grid.b)
    throw OutOfDomain("lagrange_eval: x outside [a, b]");

  double num = 0.0, den = 0.0;
  for (int i = 0; i < grid.n_nodes(); ++i) {
    const double d = x - grid.nodes(i);
    if (d == 0.0) return values(i);
    const double t = grid.bary_weights(i) / d;
    num += t * values(i);
    den += t;
  }
  return num / den;
}

}  // namespace chebdisk
