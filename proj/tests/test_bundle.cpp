#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "degenspace/bundle.hpp"
#include "degenspace/numerics.hpp"

using namespace degenspace;

namespace {

bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close(const Element& a, const Element& b, double tol = 1e-12) {
  return close(a.x0, b.x0, tol) && close(a.x1, b.x1, tol) && close(a.x2, b.x2, tol);
}

template <typename F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("expected a DomainError");
  return ErrorCode::NotInvertible;
}

AdaptedCoords random_adapted(Sampler& rng) {
  AdaptedCoords c;
  c.chart = rng.sign() > 0 ? Chart::timelike : Chart::spacelike;
  c.u = rng.uniform(-10.0, 10.0);
  c.lambda = rng.uniform_signed(0.1, 3.0);
  c.phi = rng.uniform(-2.5, 2.5);
  return c;
}

}  // namespace

TEST_CASE("base projection") {
  CHECK(project_base(Element::one()) == 0.0);
  CHECK(project_base(Element{2, 1, 3}) == 1.0);
  CHECK(thrown_code([] { project_base(Element{1, -1, 5}); }) == ErrorCode::OnNullPlane);

  // Constant along fibers: invariant under left multiplication by double
  // numbers.
  Sampler rng(59);
  for (int i = 0; i < 200; ++i) {
    const double a0 = rng.uniform(-10.0, 10.0);
    const double a1 = rng.uniform(-10.0, 10.0);
    const double x0 = rng.uniform(-10.0, 10.0);
    const double x1 = rng.uniform(-10.0, 10.0);
    const double x2 = rng.uniform(-10.0, 10.0);
    if (std::abs(a0 + a1) < 0.3 || std::abs(x0 + x1) < 0.3) continue;
    const Element a{a0, a1, 0};
    const Element x{x0, x1, x2};
    CHECK(close(project_base(mul(a, x)), project_base(x), 1e-11));
  }
}

TEST_CASE("fiber membership") {
  CHECK(fiber_contains(0.0, Element::one()));
  CHECK(fiber_contains(1.0, Element{2, 1, 3}));
  CHECK_FALSE(fiber_contains(2.0, Element{2, 1, 3}));
}

TEST_CASE("adapted coordinates of the two charts") {
  const AdaptedCoords c1 = to_adapted(Element::one());
  CHECK(c1.chart == Chart::timelike);
  CHECK(c1.u == 0.0);
  CHECK(c1.lambda == 1.0);
  CHECK(c1.phi == 0.0);

  const AdaptedCoords c2 = to_adapted(Element::e1());
  CHECK(c2.chart == Chart::spacelike);
  CHECK(c2.u == 0.0);
  CHECK(c2.lambda == 1.0);
  CHECK(c2.phi == 0.0);

  const AdaptedCoords c3 = to_adapted(Element{2, 1, 3});
  CHECK(c3.chart == Chart::timelike);
  CHECK(close(c3.u, 1.0));
  CHECK(close(c3.lambda, std::sqrt(3.0)));
  CHECK(close(c3.phi, 0.5 * std::log(3.0)));

  CHECK(thrown_code([] { to_adapted(Element{1, 1, 5}); }) == ErrorCode::NullNorm);
  CHECK(thrown_code([] { to_adapted(Element{0, 0, 5}); }) == ErrorCode::NullNorm);
}

TEST_CASE("from_adapted inverts to_adapted") {
  CHECK(from_adapted({Chart::timelike, 0.0, 1.0, 0.0}) == Element::one());
  CHECK(close(from_adapted({Chart::timelike, 1.0, std::sqrt(3.0), 0.5 * std::log(3.0)}),
              Element{2, 1, 3}));
  CHECK(from_adapted({Chart::spacelike, 0.0, -1.0, 0.0}) == -Element::e1());
  CHECK_THROWS_AS(from_adapted({Chart::timelike, 0.0, 0.0, 0.0}), std::invalid_argument);

  Sampler rng(61);
  for (int i = 0; i < 300; ++i) {
    const AdaptedCoords c = random_adapted(rng);
    const AdaptedCoords back = to_adapted(from_adapted(c));
    CHECK(back.chart == c.chart);
    CHECK(close(back.u, c.u, 1e-10));
    CHECK(close(back.lambda, c.lambda, 1e-10));
    CHECK(close(back.phi, c.phi, 1e-10));
  }
}

TEST_CASE("structure group action") {
  const AdaptedCoords c{Chart::timelike, 3.0, 1.0, 0.0};
  const AdaptedCoords moved = structure_action(2.0, std::log(2.0), c);
  CHECK(moved.chart == Chart::timelike);
  CHECK(moved.u == 3.0);
  CHECK(moved.lambda == 2.0);
  CHECK(moved.phi == std::log(2.0));

  CHECK(structure_action(1.0, 0.0, c).lambda == c.lambda);
  CHECK_THROWS_AS(structure_action(0.0, 1.0, c), std::invalid_argument);

  // Group law and agreement with left multiplication.
  Sampler rng(67);
  for (int i = 0; i < 300; ++i) {
    const AdaptedCoords cc = random_adapted(rng);
    const double rho1 = rng.uniform_signed(0.2, 3.0);
    const double psi1 = rng.uniform(-2.0, 2.0);
    const double rho2 = rng.uniform_signed(0.2, 3.0);
    const double psi2 = rng.uniform(-2.0, 2.0);
    const AdaptedCoords two = structure_action(rho2, psi2, structure_action(rho1, psi1, cc));
    const AdaptedCoords one = structure_action(rho1 * rho2, psi1 + psi2, cc);
    CHECK(two.u == cc.u);
    CHECK(close(two.lambda, one.lambda));
    CHECK(close(two.phi, one.phi));

    const Element h = from_adapted({Chart::timelike, 0.0, rho1, psi1});
    const AdaptedCoords got = to_adapted(mul(h, from_adapted(cc)));
    const AdaptedCoords want = structure_action(rho1, psi1, cc);
    CHECK(got.chart == want.chart);
    CHECK(close(got.u, want.u, 1e-10));
    CHECK(close(got.lambda, want.lambda, 1e-10));
    CHECK(close(got.phi, want.phi, 1e-10));
  }
}

TEST_CASE("left multiplication by a spacelike double number swaps the charts") {
  const Element x = from_adapted({Chart::timelike, 2.0, 1.5, 0.7});
  const AdaptedCoords swapped = to_adapted(mul(Element::e1(), x));
  CHECK(swapped.chart == Chart::spacelike);
  CHECK(close(swapped.u, 2.0));
  CHECK(close(swapped.lambda, 1.5));
  CHECK(close(swapped.phi, 0.7));
}

TEST_CASE("sphere parametrization") {
  CHECK(sphere_embed({1, 0.0, 0.0}) == Element::one());
  CHECK(close(sphere_embed({1, 1.0, std::log(2.0)}), Element{1.25, 0.75, 2}, 1e-14));

  const SpherePoint p = sphere_project(Element{-1, 0, 0});
  CHECK(p.eps == -1);
  CHECK(p.u == 0.0);
  CHECK(p.phi == 0.0);

  CHECK(thrown_code([] { sphere_project(Element{2, 0, 0}); }) == ErrorCode::NotOnSphere);
  CHECK_THROWS_AS(sphere_embed({2, 0.0, 0.0}), std::invalid_argument);

  Sampler rng(71);
  for (int i = 0; i < 300; ++i) {
    SpherePoint s;
    s.eps = rng.sign();
    s.u = rng.uniform(-10.0, 10.0);
    s.phi = rng.uniform(-2.5, 2.5);
    const Element x = sphere_embed(s);
    CHECK(std::abs(norm_sq(x) - 1.0) <= 1e-12);
    // The structure group restricted to the sphere forces |lambda| = 1.
    const AdaptedCoords c = to_adapted(x);
    CHECK(close(c.lambda, static_cast<double>(s.eps)));
    const SpherePoint back = sphere_project(x);
    CHECK(back.eps == s.eps);
    CHECK(close(back.u, s.u, 1e-12));
    CHECK(close(back.phi, s.phi, 1e-12));
    // Membership in the fiber over its own base coordinate.
    CHECK(fiber_contains(project_base(x), x));
  }
}

TEST_CASE("map between the two spheres") {
  CHECK(map_between_spheres(Element::one()) == Element::e1());
  CHECK(map_between_spheres(Element::e1()) == Element::one());
  CHECK(thrown_code([] { map_between_spheres(Element{2, 0, 0}); }) == ErrorCode::NotOnSphere);

  Sampler rng(73);
  for (int i = 0; i < 200; ++i) {
    SpherePoint s;
    s.eps = rng.sign();
    s.u = rng.uniform(-10.0, 10.0);
    s.phi = rng.uniform(-2.5, 2.5);
    const Element x = sphere_embed(s);
    CHECK(close(norm_sq(map_between_spheres(x)), -norm_sq(x), 1e-12));
  }
}

TEST_CASE("geodesics of the flat degenerate space") {
  const std::vector<double> ts{0.0, 1.0, 2.0};
  const auto constant = sample_geodesic(0, 5, 0, -2, [](double) { return 0.0; }, ts);
  for (const Element& p : constant) CHECK(p == Element{5, -2, 0});

  const auto cubic = sample_geodesic(1, 0, 0, 0, [](double t) { return t * t * t; }, ts);
  CHECK(cubic[0] == Element{0, 0, 0});
  CHECK(cubic[1] == Element{1, 0, 1});
  CHECK(cubic[2] == Element{2, 0, 8});

  // Uniform parameter spacing makes the (x0, x1) second differences vanish.
  std::vector<double> uniform;
  for (int i = 0; i <= 20; ++i) uniform.push_back(-1.0 + 0.35 * i);
  const auto path =
      sample_geodesic(1.25, -0.5, 0.75, 2.0, [](double t) { return std::sin(3.0 * t); }, uniform);
  for (std::size_t i = 2; i < path.size(); ++i) {
    CHECK(std::abs(path[i].x0 - 2.0 * path[i - 1].x0 + path[i - 2].x0) <= 1e-12);
    CHECK(std::abs(path[i].x1 - 2.0 * path[i - 1].x1 + path[i - 2].x1) <= 1e-12);
  }

  // Pseudo-distance along the path grows like (a0^2 - a1^2)(t - s)^2.
  Sampler rng(79);
  for (int i = 0; i < 200; ++i) {
    const double a0 = rng.uniform(-3.0, 3.0);
    const double b0 = rng.uniform(-3.0, 3.0);
    const double a1 = rng.uniform(-3.0, 3.0);
    const double b1 = rng.uniform(-3.0, 3.0);
    const double t = rng.uniform(-2.0, 2.0);
    const double s = rng.uniform(-2.0, 2.0);
    const std::vector<double> pair{t, s};
    const auto pts = sample_geodesic(a0, b0, a1, b1, [](double v) { return std::exp(v); }, pair);
    const Element d = pts[0] - pts[1];
    CHECK(close(bilinear(d, d), (a0 * a0 - a1 * a1) * (t - s) * (t - s), 1e-10));
  }
}
