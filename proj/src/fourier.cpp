#include "chebdisk/fourier.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace chebdisk {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_even(int n_angles) {
  if (n_angles < 4 || n_angles % 2 != 0)
    throw InvalidGrid("angular grid: N_theta must be even and >= 4");
}

// Reduces theta to (-pi, pi] and reports whether it is a multiple of 2 pi.
double reduce_angle(double theta, bool& at_origin) {
  double t = std::remainder(theta, 2.0 * kPi);
  at_origin = std::abs(t) < 1e-14;
  return t;
}

}  // namespace

double AngularGrid::spacing() const { return 2.0 * kPi / n_angles; }

std::string AngularGrid::tag() const {
  std::ostringstream os;
  os << "fourier(" << n_angles << ")";
  return os.str();
}

AngularGrid angular_grid(int n_angles) {
  require_even(n_angles);
  AngularGrid g;
  g.n_angles = n_angles;
  g.angles.resize(n_angles);
  for (int l = 1; l <= n_angles; ++l)
    g.angles(l - 1) = 2.0 * kPi * l / n_angles;
  return g;
}

double dirichlet_kernel(int n_angles, double theta) {
  require_even(n_angles);
  bool at_origin = false;
  const double t = reduce_angle(theta, at_origin);
  if (at_origin) return 1.0;
  return std::sin(n_angles * t / 2.0) / (n_angles * std::tan(t / 2.0));
}

double dirichlet_kernel_derivative(int n_angles, int order, double theta) {
  require_even(n_angles);
  if (order < 1 || order > 4)
    throw InvalidOrder("dirichlet_kernel_derivative: order must be 1..4");

  const double N = n_angles;
  bool at_origin = false;
  const double t0 = reduce_angle(theta, at_origin);
  if (at_origin) {
    switch (order) {
      case 1:
      case 3:
        return 0.0;  // S is even
      case 2:
        return -N * N / 12.0 - 1.0 / 6.0;
      default:
        return N * N * N * N / 80.0 + N * N / 12.0 - 1.0 / 30.0;
    }
  }

  // Closed forms obtained by differentiating S = sin(N t/2) cot(t/2) / N,
  // written in s = sin(N t/2), c = cos(N t/2), t = cot(t/2), u = 1 + t^2.
  const double s = std::sin(N * t0 / 2.0);
  const double c = std::cos(N * t0 / 2.0);
  const double ct = 1.0 / std::tan(t0 / 2.0);
  const double u = 1.0 + ct * ct;
  switch (order) {
    case 1:
      return 0.5 * (c * ct - s * u / N);
    case 2:
      return 0.5 * (-(N / 2.0) * s * ct - c * u + s * ct * u / N);
    case 3:
      return 0.5 * (-(N * N / 4.0) * c * ct + (3.0 * N / 4.0) * s * u +
                    1.5 * c * ct * u - s * u * u / (2.0 * N) -
                    s * ct * ct * u / N);
    default:
      return 0.5 * ((N * N * N / 8.0) * s * ct + (N * N / 2.0) * c * u -
                    (3.0 * N / 2.0) * s * ct * u - c * u * u -
                    2.0 * c * ct * ct * u + (2.0 / N) * s * ct * u * u +
                    (1.0 / N) * s * ct * ct * ct * u);
  }
}

DiffMatrix fourier_diff_matrix(const AngularGrid& grid, int order) {
  if (order < 1 || order > 4)
    throw InvalidOrder("fourier_diff_matrix: order must be 1..4");
  const int n = grid.n_angles;
  const double h = grid.spacing();
  const double parity = (order % 2 == 0) ? 1.0 : -1.0;

  // One value per offset class d = (k - l) mod n.  The complementary offsets
  // are tied together through S^(m)(2 pi - x) = (-1)^m S^(m)(x), which makes
  // the circulant and parity structure exact rather than roundoff-close.
  std::vector<double> w(n);
  w[0] = dirichlet_kernel_derivative(n, order, 0.0);
  for (int d = 1; d < n / 2; ++d) {
    w[d] = dirichlet_kernel_derivative(n, order, h * d);
    w[n - d] = parity * w[d];
  }
  w[n / 2] = (order % 2 == 1)
                 ? 0.0  // odd derivatives of S vanish at pi
                 : dirichlet_kernel_derivative(n, order, kPi);

  DiffMatrix out;
  out.order = order;
  out.grid_tag = grid.tag();
  out.entries.resize(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      out.entries(k, l) = w[((k - l) % n + n) % n];
  return out;
}

}  // namespace chebdisk
