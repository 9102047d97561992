#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "degenspace/conformal.hpp"
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

}  // namespace

TEST_CASE("stereographic projection to the plane") {
  const PlanePoint p = stereo_to_plane(Element{-1, 0, 0});
  CHECK_FALSE(p.is_ideal());
  CHECK(p.x == 0.0);
  CHECK(p.y == 0.0);

  const PlanePoint q = stereo_to_plane(Element{1.25, 0.75, 2});
  CHECK(q.x == -3.0);
  CHECK(q.y == -8.0);

  const PlanePoint ideal = stereo_to_plane(Element{1, 0, 5});
  CHECK(ideal.is_ideal());
  CHECK(ideal.line.has_value());
  CHECK(*ideal.line == 5.0);

  CHECK(thrown_code([] { stereo_to_plane(Element{2, 0, 0}); }) == ErrorCode::NotOnSphere);
}

TEST_CASE("inverse stereographic projection") {
  CHECK(stereo_from_plane(PlanePoint::finite(0, 0)) == Element{-1, 0, 0});
  const Element s = stereo_from_plane(PlanePoint::finite(2, 1));
  CHECK(close(s, Element{5.0 / 3.0, -4.0 / 3.0, -2.0 / 3.0}));
  CHECK(close(norm_sq(s), 1.0));

  CHECK(thrown_code([] { stereo_from_plane(PlanePoint::finite(1, 0)); }) ==
        ErrorCode::OnBranchLine);
  CHECK(thrown_code([] { stereo_from_plane(PlanePoint::finite(-1, 3)); }) ==
        ErrorCode::OnBranchLine);
  CHECK_THROWS_AS(stereo_from_plane(PlanePoint::ideal()), std::invalid_argument);

  Sampler rng(83);
  for (int i = 0; i < 300; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y = rng.uniform(-10.0, 10.0);
    if (std::abs(x * x - 1.0) < 0.05) continue;
    const PlanePoint pt = PlanePoint::finite(x, y);
    const Element on_sphere = stereo_from_plane(pt);
    CHECK(std::abs(norm_sq(on_sphere) - 1.0) <=
          1e-12 * std::max({1.0, on_sphere.x0 * on_sphere.x0, on_sphere.x1 * on_sphere.x1}));
    const PlanePoint back = stereo_to_plane(on_sphere);
    CHECK_FALSE(back.is_ideal());
    CHECK(close(back.x, x, 1e-10));
    CHECK(close(back.y, y, 1e-10));
  }
}

TEST_CASE("adapted coordinates straight from the plane") {
  const SpherePoint a = adapted_from_plane(PlanePoint::finite(-3, -8));
  CHECK(a.eps == 1);
  CHECK(close(a.u, 1.0));
  CHECK(close(a.phi, std::log(2.0)));

  const SpherePoint b = adapted_from_plane(PlanePoint::finite(0, 0));
  CHECK(b.eps == -1);
  CHECK(b.u == 0.0);
  CHECK(b.phi == 0.0);

  CHECK(close(adapted_from_plane(PlanePoint::finite(3, -4)).u, 2.0));

  CHECK(thrown_code([] { adapted_from_plane(PlanePoint::finite(1, 0)); }) ==
        ErrorCode::OnBranchLine);

  // Agrees with sphere_project after the inverse map.
  Sampler rng(89);
  for (int i = 0; i < 300; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y = rng.uniform(-10.0, 10.0);
    if (std::abs(x * x - 1.0) < 0.05) continue;
    const PlanePoint pt = PlanePoint::finite(x, y);
    const SpherePoint direct = adapted_from_plane(pt);
    const SpherePoint via_sphere = sphere_project(stereo_from_plane(pt));
    CHECK(direct.eps == via_sphere.eps);
    CHECK(close(direct.u, via_sphere.u, 1e-10));
    CHECK(close(direct.phi, via_sphere.phi, 1e-10));
    // Component dichotomy: outer strips carry eps = +1.
    CHECK(direct.eps == (std::abs(x) > 1.0 ? 1 : -1));
  }
}

TEST_CASE("bundle map of the plane") {
  CHECK(bundle_map_p(PlanePoint::finite(0, 0)) == 0.0);
  CHECK(close(bundle_map_p(PlanePoint::finite(3, -4)), 2.0));
  CHECK(close(bundle_map_p(PlanePoint::finite(-1, 2)), -1.0));
  CHECK(thrown_code([] { bundle_map_p(PlanePoint::finite(1, 7)); }) == ErrorCode::OnBranchLine);

  // The defining diagram commutes: p = (base projection) after the inverse
  // stereographic map.
  Sampler rng(97);
  for (int i = 0; i < 300; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y = rng.uniform(-10.0, 10.0);
    if (std::abs(x * x - 1.0) < 0.05) continue;
    const PlanePoint pt = PlanePoint::finite(x, y);
    CHECK(close(bundle_map_p(pt), project_base(stereo_from_plane(pt)), 1e-12));
  }
}

TEST_CASE("conformal factor") {
  CHECK(conformal_factor(0.0) == 4.0);
  CHECK(close(conformal_factor(std::sqrt(3.0)), 1.0));
  CHECK(thrown_code([] { conformal_factor(1.0); }) == ErrorCode::OnBranchLine);

  // (dphi/dx)^2 equals the factor; dphi via central differences.
  Sampler rng(101);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-5.0, 5.0);
    if (std::abs(x * x - 1.0) < 0.3) continue;
    const double dphi = central_diff(
        [](double xi) { return adapted_from_plane(PlanePoint::finite(xi, 0.7)).phi; }, x, 1e-5);
    CHECK(std::abs(dphi * dphi - conformal_factor(x)) <= 1e-6);
  }
}

TEST_CASE("fiber parabolas") {
  CHECK(fiber_image(0.0, 17.0) == 0.0);
  CHECK(fiber_image(2.0, 3.0) == -4.0);
  // The loop closes: the parabola point maps back to its parameter.
  CHECK(close(bundle_map_p(PlanePoint::finite(3, -4)), 2.0));

  // Images of constant-u sphere curves land on the parabola.
  Sampler rng(103);
  for (int i = 0; i < 300; ++i) {
    const double c = rng.uniform(-5.0, 5.0);
    SpherePoint s;
    s.eps = rng.sign();
    s.phi = s.eps == 1 ? rng.uniform_signed(0.1, 2.5) : rng.uniform(-2.5, 2.5);
    s.u = c;
    const PlanePoint img = stereo_to_plane(sphere_embed(s));
    REQUIRE_FALSE(img.is_ideal());
    CHECK(std::abs(img.y - fiber_image(c, img.x)) <=
          1e-9 * std::max({1.0, std::abs(img.y)}));
  }
}
