#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <tuple>

#include "chebdisk/chebyshev.hpp"

using namespace chebdisk;

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::VectorXd sample(const Grid1D& g, const std::function<double(double)>& f) {
  Eigen::VectorXd v(g.n_nodes());
  for (int i = 0; i < g.n_nodes(); ++i) v(i) = f(g.nodes(i));
  return v;
}

double ulp_of(double x) { return std::nextafter(std::abs(x), 1e300) - std::abs(x); }

}  // namespace

TEST_CASE("cgl_grid nodes and invariants") {
  SUBCASE("N=2 on [-1,1] gives (1, 0, -1)") {
    const Grid1D g = cgl_grid(2, -1.0, 1.0);
    CHECK(g.nodes(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(g.nodes(1)) < 1e-15);
    CHECK(g.nodes(2) == doctest::Approx(-1.0).epsilon(1e-15));
  }

  SUBCASE("N=4 on [0,1]: second node is (cos(pi/4)+1)/2") {
    const Grid1D g = cgl_grid(4, 0.0, 1.0);
    const double expected = (std::cos(kPi / 4.0) + 1.0) / 2.0;  // ~0.853553
    CHECK(g.nodes(1) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(g.nodes(1) == doctest::Approx(0.85355339059327373).epsilon(1e-15));
  }

  SUBCASE("N=3 on [0,2]: interior nodes reflect to a+b") {
    const Grid1D g = cgl_grid(3, 0.0, 2.0);
    CHECK(g.nodes(1) + g.nodes(2) == doctest::Approx(2.0).epsilon(1e-15));
  }

  SUBCASE("node formula and reflection symmetry within 4 ulps") {
    for (const auto& [n, a, b] :
         {std::tuple{7, -1.0, 1.0}, {12, 0.0, 3.0}, {25, -2.5, 0.5}}) {
      const Grid1D g = cgl_grid(n, a, b);
      CHECK(g.nodes(0) == b);
      CHECK(g.nodes(n) == a);
      const double scale = std::abs(a) + std::abs(b);
      for (int i = 0; i <= n; ++i) {
        const double formula = ((b - a) * std::cos(i * kPi / n) + b + a) / 2.0;
        CHECK(std::abs(g.nodes(i) - formula) <= 4 * ulp_of(scale));
        CHECK(std::abs(g.nodes(i) + g.nodes(n - i) - (a + b)) <=
              4 * ulp_of(scale));
        if (i > 0) CHECK(g.nodes(i) < g.nodes(i - 1));
      }
    }
  }

  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(cgl_grid(1, -1.0, 1.0), InvalidGrid);
    CHECK_THROWS_AS(cgl_grid(4, 1.0, 1.0), InvalidGrid);
    CHECK_THROWS_AS(cgl_grid(4, 2.0, -2.0), InvalidGrid);
    CHECK_THROWS_AS(cgl_grid(4, 0.0, std::nan("")), InvalidGrid);
    CHECK_THROWS_AS(cgl_grid(4, -std::numeric_limits<double>::infinity(), 0.0),
                    InvalidGrid);
  }
}

TEST_CASE("cheb_diff_matrix entries and exactness") {
  SUBCASE("N=2 first-derivative rows (hand-differentiated Lagrange basis)") {
    // On nodes (1, 0, -1): L1 = y(y+1)/2, L2 = 1-y^2, L3 = y(y-1)/2, whose
    // derivative samples give rows (3/2,-2,1/2), (1/2,0,-1/2), (-1/2,2,-3/2).
    const DiffMatrix d = cheb_diff_matrix(cgl_grid(2, -1.0, 1.0), 1);
    Eigen::Matrix3d expected;
    expected << 1.5, -2.0, 0.5, 0.5, 0.0, -0.5, -0.5, 2.0, -1.5;
    CHECK((d.entries - expected).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("derivative of a constant vanishes") {
    for (int n : {2, 5, 17}) {
      const Grid1D g = cgl_grid(n, -0.3, 2.0);
      const DiffMatrix d = cheb_diff_matrix(g, 1);
      const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n + 1);
      CHECK((d.entries * ones).cwiseAbs().maxCoeff() < 1e-10 * n * n);
    }
  }

  SUBCASE("N=5 on [0,1], m=2 applied to x^3 gives 6x") {
    const Grid1D g = cgl_grid(5, 0.0, 1.0);
    const DiffMatrix d2 = cheb_diff_matrix(g, 2);
    const Eigen::VectorXd v = sample(g, [](double x) { return x * x * x; });
    const Eigen::VectorXd want = sample(g, [](double x) { return 6.0 * x; });
    CHECK((d2.entries * v - want).cwiseAbs().maxCoeff() < 1e-9);
  }

  SUBCASE("polynomial exactness for all degrees k <= N") {
    for (const auto& [n, a, b] : {std::tuple{4, -1.0, 1.0}, {8, -1.0, 1.0},
                                  {16, 0.0, 3.0}, {32, 0.0, 3.0}}) {
      const Grid1D g = cgl_grid(n, a, b);
      const DiffMatrix d = cheb_diff_matrix(g, 1);
      const double xmax = std::max(std::abs(a), std::abs(b));
      for (int k = 0; k <= n; ++k) {
        const Eigen::VectorXd v =
            sample(g, [&](double x) { return std::pow(x, k); });
        const Eigen::VectorXd want = sample(g, [&](double x) {
          return k == 0 ? 0.0 : k * std::pow(x, k - 1);
        });
        const double tol =
            1e-8 * std::pow(n, 3) * std::max(std::pow(xmax, k), 1.0);
        CHECK((d.entries * v - want).cwiseAbs().maxCoeff() <= tol);
      }
    }
  }

  SUBCASE("higher orders match the m-fold product of the order-1 matrix") {
    const Grid1D g = cgl_grid(16, -1.0, 1.0);
    const Eigen::MatrixXd d1 = cheb_diff_matrix(g, 1).entries;
    Eigen::MatrixXd product = d1;
    for (int m = 2; m <= 4; ++m) {
      product = (product * d1).eval();
      const Eigen::MatrixXd dm = cheb_diff_matrix(g, m).entries;
      const double rel = (dm - product).cwiseAbs().maxCoeff() /
                         product.cwiseAbs().maxCoeff();
      CHECK(rel < 1e-10);
    }
  }

  SUBCASE("doubling the interval halves the order-1 entries exactly") {
    const Eigen::MatrixXd d_narrow =
        cheb_diff_matrix(cgl_grid(9, 0.0, 1.0), 1).entries;
    const Eigen::MatrixXd d_wide =
        cheb_diff_matrix(cgl_grid(9, 0.0, 2.0), 1).entries;
    CHECK((d_wide * 2.0 - d_narrow).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("shape, tag, and order validation") {
    const Grid1D g = cgl_grid(6, -1.0, 1.0);
    const DiffMatrix d = cheb_diff_matrix(g, 3);
    CHECK(d.rows() == 7);
    CHECK(d.cols() == 7);
    CHECK(d.order == 3);
    CHECK(d.grid_tag == g.tag());
    CHECK_THROWS_AS(cheb_diff_matrix(g, 0), InvalidOrder);
    CHECK_THROWS_AS(cheb_diff_matrix(g, 7), InvalidOrder);
  }
}

TEST_CASE("lagrange_eval") {
  const Grid1D g = cgl_grid(4, -1.0, 1.0);

  SUBCASE("partition of unity: constant data reproduces the constant") {
    const Eigen::VectorXd v = Eigen::VectorXd::Constant(5, 7.0);
    for (double x : {-1.0, -0.77, 0.0, 0.31, 1.0})
      CHECK(lagrange_eval(g, v, x) == doctest::Approx(7.0).epsilon(1e-14));
  }

  SUBCASE("interpolation property: exact at nodes") {
    const Eigen::VectorXd v = sample(g, [](double x) { return std::sin(3 * x); });
    CHECK(lagrange_eval(g, v, g.nodes(2)) == v(2));
  }

  SUBCASE("polynomial reproduction: x^2 at 0.3") {
    const Eigen::VectorXd v = sample(g, [](double x) { return x * x; });
    CHECK(std::abs(lagrange_eval(g, v, 0.3) - 0.09) < 1e-13);
  }

  SUBCASE("domain and size checks") {
    const Eigen::VectorXd v = Eigen::VectorXd::Zero(5);
    CHECK_THROWS_AS(lagrange_eval(g, v, 1.0000001), OutOfDomain);
    CHECK_THROWS_AS(lagrange_eval(g, v, -1.1), OutOfDomain);
    CHECK_THROWS_AS(lagrange_eval(g, Eigen::VectorXd::Zero(4), 0.0),
                    DimensionMismatch);
  }

  SUBCASE("matches the direct Lagrange product form on random data") {
    const Eigen::VectorXd v = (Eigen::VectorXd::Random(5) * 3.0).eval();
    for (double x : {-0.9, -0.2, 0.55}) {
      double direct = 0.0;
      for (int i = 0; i < 5; ++i) {
        double basis = 1.0;
        for (int k = 0; k < 5; ++k)
          if (k != i) basis *= (x - g.nodes(k)) / (g.nodes(i) - g.nodes(k));
        direct += v(i) * basis;
      }
      CHECK(lagrange_eval(g, v, x) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}
