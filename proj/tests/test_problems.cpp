#include <doctest.h>

#include <cmath>
#include <vector>

#include "chebdisk/problems.hpp"

using namespace chebdisk;

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---- test-local derivative oracles ----------------------------------------

// Fourth-order central differences, adequate for second-derivative checks of
// smooth functions away from steep layers.
double fd1(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
double fd2(const std::function<double(double)>& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) -
          f(x + 2 * h)) /
         (12 * h * h);
}

// Fields of the form sum c r^p {cos,sin}(q theta), closed under the polar
// Laplacian: Delta(c r^p trig(q)) = c (p^2 - q^2) r^(p-2) trig(q).
struct TrigPolyTerm {
  double c;
  int p;
  int q;
  bool is_cos;
};
using TrigPoly = std::vector<TrigPolyTerm>;

double tp_eval(const TrigPoly& f, double r, double th) {
  double v = 0.0;
  for (const auto& t : f)
    v += t.c * std::pow(r, t.p) *
         (t.is_cos ? std::cos(t.q * th) : std::sin(t.q * th));
  return v;
}

TrigPoly tp_laplacian(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& t : f) {
    const double factor = double(t.p) * t.p - double(t.q) * t.q;
    if (factor != 0.0) out.push_back({t.c * factor, t.p - 2, t.q, t.is_cos});
  }
  return out;
}

TrigPoly tp_radial_derivative(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& t : f)
    if (t.p != 0) out.push_back({t.c * t.p, t.p - 1, t.q, t.is_cos});
  return out;
}

}  // namespace

TEST_CASE("registry lookup") {
  CHECK(all_problems().size() == 10);
  CHECK_THROWS_AS(get_problem("nosuch"), UnknownProblem);
  try {
    get_problem("nosuch");
  } catch (const UnknownProblem& e) {
    CHECK(std::string(e.what()).find("ex1-dirichlet-1d") != std::string::npos);
  }

  const NamedProblem& ex3 = get_problem("ex3-robin-1d");
  CHECK_FALSE(ex3.on_disk);
  for (double x : {0.3, 2.0, 5.5})
    CHECK(ex3.exact_1d(x) ==
          doctest::Approx(std::cos(4 * x) * std::exp(-x)).epsilon(1e-15));

  const NamedProblem& ex6 = get_problem("ex6-neumann-disk");
  CHECK(ex6.on_disk);
  CHECK(ex6.exact_disk(0.5, 1.2) ==
        doctest::Approx(0.125 * std::sin(1.2) * std::sin(1.2)).epsilon(1e-15));

  for (const NamedProblem& p : all_problems()) {
    CHECK_FALSE(p.reference_grids.empty());
    for (const ReferenceResult& r : p.reference_grids) {
      CHECK_FALSE(r.provenance.empty());
      CHECK(r.reported_max_error > 0.0);
    }
  }
}

TEST_CASE("registry 1D exact solutions satisfy their equations and data") {
  SUBCASE("layer problem: equation away from the layer, boundary data exact") {
    const auto& p = get_problem("ex1-dirichlet-1d");
    const double pp = 1e-3;
    for (double x : {0.05, 0.2, 0.3, 0.7, 0.85, 0.95}) {
      const double t = 2 * x - 1;
      const double rhs = -12 * pp * t / std::pow(pp + t * t, 2.5);
      CHECK(std::abs(fd2(p.exact_1d, x, 1e-3) - rhs) < 1e-8);
    }
    CHECK(std::abs(p.exact_1d(0.0) - 1.0) < 1e-12);
    CHECK(std::abs(p.exact_1d(1.0) - 0.0) < 1e-12);
  }

  SUBCASE("exponential Neumann problem") {
    const auto& p = get_problem("ex2-neumann-1d");
    for (double x : {0.1, 0.5, 0.9})
      CHECK(std::abs(fd2(p.exact_1d, x, 1e-3) +
                     std::exp(-2 * p.exact_1d(x))) < 1e-8);
    CHECK(std::abs(fd1(p.exact_1d, 0.0, 1e-4) - 1.0) < 1e-9);
    CHECK(std::abs(fd1(p.exact_1d, 1.0, 1e-4) - 0.5) < 1e-9);
  }

  SUBCASE("Robin problem") {
    const auto& p = get_problem("ex3-robin-1d");
    for (double x : {0.4, 2.0, 4.4, 6.0}) {
      const double lhs = -std::exp(x) * fd2(p.exact_1d, x, 5e-4);
      const double rhs = 15 * std::cos(4 * x) - 8 * std::sin(4 * x);
      CHECK(std::abs(lhs - rhs) < 1e-7 * std::exp(x));
    }
    CHECK(std::abs(p.exact_1d(0.0) - fd1(p.exact_1d, 0.0, 1e-4) - 2.0) < 1e-9);
    CHECK(std::abs(p.exact_1d(2 * kPi) + fd1(p.exact_1d, 2 * kPi, 1e-4)) <
          1e-9);
  }

  SUBCASE("clamped fourth-order problem against an independent derivation") {
    // Even solutions of eps v'''' = v with v = u + 10 are spanned by
    // cos(k x) and cosh(k x), k = eps^(-1/4).  Fit (A, B) to the clamped
    // data by a direct 2x2 solve and compare with the registry's closed
    // form; the fourth derivative then comes out analytically.
    const auto& p = get_problem("ex4-biharmonic-1d");
    const double eps = 0.005;
    const double k = std::pow(1.0 / eps, 0.25);
    Eigen::Matrix2d m;
    m << std::cos(k), std::cosh(k), -k * std::sin(k), k * std::sinh(k);
    const Eigen::Vector2d ab = m.partialPivLu().solve(Eigen::Vector2d(10.0, 0.0));
    for (double x : {-0.9, -0.4, 0.0, 0.3, 0.8}) {
      const double v = ab(0) * std::cos(k * x) + ab(1) * std::cosh(k * x);
      CHECK(std::abs(p.exact_1d(x) - (v - 10.0)) < 1e-10);
      const double v4 =
          std::pow(k, 4) * (ab(0) * std::cos(k * x) + ab(1) * std::cosh(k * x));
      CHECK(std::abs(eps * v4 - p.exact_1d(x) - 10.0) < 1e-8);
    }
    CHECK(std::abs(p.exact_1d(1.0)) < 1e-10);
    CHECK(std::abs(p.exact_1d(-1.0)) < 1e-10);
    CHECK(std::abs(fd1(p.exact_1d, 1.0, 1e-4)) < 1e-8);
    CHECK(std::abs(fd1(p.exact_1d, -1.0, 1e-4)) < 1e-8);
  }
}

TEST_CASE("registry disk exact solutions satisfy their equations and data") {
  const auto check_matches_registry = [](const NamedProblem& p,
                                         const TrigPoly& f) {
    for (double r : {0.2, 0.55, 0.9})
      for (double th : {0.3, 1.9, 4.0, 5.8})
        CHECK(std::abs(p.exact_disk(r, th) - tp_eval(f, r, th)) < 1e-13);
  };

  SUBCASE("harmonic extension of sin^3") {
    // The boundary trace must equal sin^3(theta); together with harmonicity
    // this pins the corrected closed form.
    const auto& p = get_problem("ex5-dirichlet-disk");
    const TrigPoly f{{0.75, 1, 1, false}, {-0.25, 3, 3, false}};
    check_matches_registry(p, f);
    CHECK(tp_laplacian(f).empty());
    for (double th = 0.0; th < 2 * kPi; th += 0.17)
      CHECK(std::abs(tp_eval(f, 1.0, th) - std::pow(std::sin(th), 3)) < 1e-13);
  }

  SUBCASE("Neumann problem with reaction") {
    const auto& p = get_problem("ex6-neumann-disk");
    const TrigPoly f{{0.5, 3, 0, true}, {-0.5, 3, 2, true}};
    check_matches_registry(p, f);
    const TrigPoly lap = tp_laplacian(f);
    const TrigPoly fr = tp_radial_derivative(f);
    for (double r : {0.25, 0.6, 0.95})
      for (double th : {0.4, 2.2, 5.0}) {
        const double s2 = std::sin(th) * std::sin(th);
        const double forcing = r * (2 + 5 * s2) - r * r * r * s2;
        CHECK(std::abs(tp_eval(lap, r, th) - tp_eval(f, r, th) - forcing) <
              1e-12);
      }
    for (double th = 0.0; th < 2 * kPi; th += 0.31)
      CHECK(std::abs(tp_eval(fr, 1.0, th) -
                     3 * std::sin(th) * std::sin(th)) < 1e-13);
  }

  SUBCASE("Fisher problem") {
    const auto& p = get_problem("ex7-fisher-disk");
    CHECK(p.exact_disk(0.3, 1.0) == 3.0);
    // -Delta(3) = 3*3 - 9 and 3 + 0 = 3 on the boundary.
    CHECK(3.0 * 3.0 - 3.0 * 3.0 == 0.0);
    CHECK(p.default_u0 == 2.0);
  }

  SUBCASE("biharmonic problems are biharmonic and match their data") {
    struct Case {
      const char* id;
      TrigPoly f;
      std::function<double(double)> bc_value;
      std::function<double(double)> bc_slope;
    };
    const std::vector<Case> cases = {
        {"ex8-biharmonic-disk",
         {{0.25, 1, 1, true}, {-0.25, 2, 0, true}, {-0.25, 3, 1, true}},
         [](double) { return -0.25; },
         [](double t) { return -0.5 * (1 + std::cos(t)); }},
        {"ex9-biharmonic-disk",
         {{2.0, 2, 2, true}, {-1.0, 4, 2, true}},
         [](double t) { return std::cos(2 * t); },
         [](double) { return 0.0; }},
        {"ex10-biharmonic-disk",
         {{1.0, 4, 2, true}},
         [](double t) { return std::cos(2 * t); },
         [](double t) { return 4 * std::cos(2 * t); }},
    };
    for (const Case& c : cases) {
      const auto& p = get_problem(c.id);
      check_matches_registry(p, c.f);
      const TrigPoly bilap = tp_laplacian(tp_laplacian(c.f));
      for (double r : {0.3, 0.8})
        for (double th : {0.5, 3.3})
          CHECK(std::abs(tp_eval(bilap, r, th)) < 1e-12);
      const TrigPoly fr = tp_radial_derivative(c.f);
      for (double th = 0.0; th < 2 * kPi; th += 0.43) {
        CHECK(std::abs(tp_eval(c.f, 1.0, th) - c.bc_value(th)) < 1e-13);
        CHECK(std::abs(tp_eval(fr, 1.0, th) - c.bc_slope(th)) < 1e-13);
      }
    }
  }
}

TEST_CASE("error_report") {
  SUBCASE("exact samples give zero error; two-norm follows the convention") {
    const NamedProblem& p = get_problem("ex5-dirichlet-disk");
    GridRequest req;
    req.nr_half = 5;
    req.n_theta = 8;
    const BuiltProblem built = p.build(req);
    const DiskGrid& g = built.grid_disk();

    SolveReport fake;
    fake.solution = sample_disk_field(g, FieldLayout::Interior, p.exact_disk).values;
    fake.boundary = sample_disk_field(g, FieldLayout::Full, p.exact_disk)
                        .values.head(g.n_theta);
    const ErrorSummary zero = error_report(p, built, fake);
    CHECK(zero.max_abs < 1e-14);

    // Perturb one interior entry by delta: max = delta, two-norm =
    // delta / sqrt(node count).
    const double delta = 1e-3;
    fake.solution(3) += delta;
    const ErrorSummary e = error_report(p, built, fake);
    CHECK(e.max_abs == doctest::Approx(delta).epsilon(1e-9));
    CHECK(e.two_norm ==
          doctest::Approx(delta / std::sqrt(double(g.nodes()))).epsilon(1e-9));
  }

  SUBCASE("reference grid reproduces the published accuracy class") {
    const NamedProblem& p = get_problem("ex5-dirichlet-disk");
    GridRequest req;
    req.nr_half = 51;
    req.n_theta = 60;
    const BuiltProblem built = p.build(req);
    const SolveReport r = run_problem(p, built);
    const ErrorSummary e = error_report(p, built, r, 25);
    CHECK(e.max_abs <= 1e-10);
    REQUIRE(e.refined_max_abs.has_value());
    CHECK(*e.refined_max_abs <= 1e-9);
  }

  SUBCASE("missing exact solution is an error") {
    NamedProblem p = get_problem("ex1-dirichlet-1d");
    GridRequest req;
    req.n = 16;
    const BuiltProblem built = p.build(req);
    const SolveReport r = run_problem(p, built);
    p.exact_1d = nullptr;
    CHECK_THROWS_AS(error_report(p, built, r), NoExactSolution);
  }
}

TEST_CASE("run_problem dispatch") {
  const NamedProblem& fisher = get_problem("ex7-fisher-disk");
  GridRequest req;
  req.nr_half = 6;
  req.n_theta = 8;
  const BuiltProblem built = fisher.build(req);

  SUBCASE("default start does real Newton work and converges to 3") {
    const SolveReport r = run_problem(fisher, built);
    CHECK(r.converged);
    CHECK(r.newton_iterations >= 1);
    CHECK((r.solution.array() - 3.0).abs().maxCoeff() < 1e-8);
  }

  SUBCASE("starting at the solution needs no iterations") {
    const SolveReport r = run_problem(fisher, built, 1e-8, 50, 3.0);
    CHECK(r.converged);
    CHECK(r.newton_iterations == 0);
  }

  SUBCASE("registry problems fix their domain") {
    GridRequest bad = req;
    bad.radius = 2.0;
    CHECK_THROWS_AS(fisher.build(bad), InvalidGrid);
  }
}
