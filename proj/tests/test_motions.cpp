#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "degenspace/motions.hpp"
#include "degenspace/numerics.hpp"

using namespace degenspace;

namespace {

bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close(const Element& a, const Element& b, double tol = 1e-12) {
  return close(a.x0, b.x0, tol) && close(a.x1, b.x1, tol) && close(a.x2, b.x2, tol);
}

Element random_element(Sampler& rng) {
  const double a = rng.uniform(-10.0, 10.0);
  const double b = rng.uniform(-10.0, 10.0);
  const double c = rng.uniform(-10.0, 10.0);
  return {a, b, c};
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

TEST_CASE("component classification") {
  CHECK(classify_component(Element::one()) == ComponentTag{Sign::plus, Sign::plus});
  CHECK(classify_component(-Element::one()) == ComponentTag{Sign::minus, Sign::minus});
  CHECK(classify_component(Element::e1()) == ComponentTag{Sign::plus, Sign::minus});
  CHECK(classify_component(-Element::e1()) == ComponentTag{Sign::minus, Sign::plus});
  CHECK(thrown_code([] { classify_component(Element{1, 1, 0}); }) == ErrorCode::NotInvertible);
}

TEST_CASE("rotation elements have the advertised norms") {
  CHECK(rotation_element(0.0, Sign::plus, 5.0, MotionKind::rotation) == Element::one());

  const Element r = rotation_element(1.0, Sign::plus, 0.0, MotionKind::rotation);
  CHECK(close(r, Element{std::cosh(1.0), std::sinh(1.0), 0.0}));
  CHECK(close(norm_sq(r), 1.0));

  const Element a = rotation_element(0.0, Sign::plus, 2.0, MotionKind::anti_rotation);
  CHECK(a == Element{0, 1, 2});
  CHECK(close(norm_sq(a), -1.0));

  Sampler rng(37);
  for (int i = 0; i < 200; ++i) {
    const double phi = rng.uniform(-2.0, 2.0);
    const double u = rng.uniform(-3.0, 3.0);
    const Sign branch = rng.sign() > 0 ? Sign::plus : Sign::minus;
    CHECK(close(norm_sq(rotation_element(phi, branch, u, MotionKind::rotation)), 1.0, 1e-12));
    CHECK(close(norm_sq(rotation_element(phi, branch, u, MotionKind::anti_rotation)), -1.0, 1e-12));
  }
}

TEST_CASE("proper motions") {
  const Element x{2, 1, 3};
  CHECK(proper_motion(Element::one(), Element::one(), x) == x);
  const Element a = rotation_element(1.0, Sign::plus, 0.0, MotionKind::rotation);
  CHECK(close(proper_motion(a, Element::one(), Element::one()), a));
  CHECK(thrown_code([&] { proper_motion(Element{2, 0, 0}, Element::one(), x); }) ==
        ErrorCode::NotUnitNorm);
  CHECK(thrown_code([&] { proper_motion(Element::one(), Element{2, 0, 0}, x); }) ==
        ErrorCode::NotUnitNorm);

  // (a x b, a y b) = norm_sq(a) norm_sq(b) (x, y).
  Sampler rng(41);
  for (int i = 0; i < 200; ++i) {
    const double p1 = rng.uniform(-2.0, 2.0);
    const double u1 = rng.uniform(-3.0, 3.0);
    const double p2 = rng.uniform(-2.0, 2.0);
    const double u2 = rng.uniform(-3.0, 3.0);
    const Element a2 = rotation_element(p1, Sign::plus, u1, MotionKind::rotation);
    const Element b2 = rotation_element(p2, Sign::minus, u2, MotionKind::anti_rotation);
    const Element x2 = random_element(rng);
    const Element y2 = random_element(rng);
    const double got = bilinear(proper_motion(a2, b2, x2), proper_motion(a2, b2, y2));
    CHECK(close(got, -bilinear(x2, y2), 1e-9));
  }
}

TEST_CASE("improper motions") {
  const Element x{2, 1, 3};
  CHECK(improper_motion(Element::one(), Element::one(), x) == conj(x));
  CHECK(improper_motion(Element::one(), Element::one(), x) == Element{2, -1, -3});

  // Two reflections compose to the proper motion with factors n2 conj(n1)
  // and conj(n1) n2.
  Sampler rng(43);
  for (int i = 0; i < 200; ++i) {
    const double p1 = rng.uniform(-2.0, 2.0);
    const double u1 = rng.uniform(-3.0, 3.0);
    const double p2 = rng.uniform(-2.0, 2.0);
    const double u2 = rng.uniform(-3.0, 3.0);
    const bool anti1 = rng.sign() > 0;
    const bool anti2 = rng.sign() > 0;
    const Element n1 = rotation_element(
        p1, Sign::plus, u1, anti1 ? MotionKind::anti_rotation : MotionKind::rotation);
    const Element n2 = rotation_element(
        p2, Sign::minus, u2, anti2 ? MotionKind::anti_rotation : MotionKind::rotation);
    const Element x2 = random_element(rng);
    const Element lhs = reflect(n2, reflect(n1, x2));
    const Element rhs = proper_motion(mul(n2, conj(n1)), mul(conj(n1), n2), x2);
    CHECK(close(lhs, rhs, 1e-10));
  }
}

TEST_CASE("reflections fix the orthogonal complement and flip the axis") {
  CHECK(reflect(Element::one(), Element::one()) == -Element::one());
  CHECK(reflect(Element::one(), Element::e1()) == Element::e1());
  CHECK(reflect(Element::one(), Element{2, 1, 3}) == Element{-2, 1, 3});
  CHECK(thrown_code([] { reflect(Element{2, 0, 0}, Element::one()); }) == ErrorCode::NotUnitNorm);
}

TEST_CASE("general isometries") {
  const IsometryParams id{};
  const Element x{2, 1, 3};
  CHECK(apply_isometry(id, x) == x);

  IsometryParams shift;
  shift.a0 = 1;
  shift.a1 = 2;
  shift.a2 = 3;
  CHECK(apply_isometry(shift, Element::one()) == Element{2, 2, 3});

  IsometryParams bad;
  bad.u2 = 0.0;
  CHECK(thrown_code([&] { apply_isometry(bad, x); }) == ErrorCode::DegenerateIsometry);

  // bilinear(x - y, x - y) is preserved for arbitrary parameters.
  Sampler rng(47);
  for (int i = 0; i < 200; ++i) {
    IsometryParams p;
    p.phi = rng.uniform(-3.0, 3.0);
    p.a0 = rng.uniform(-10.0, 10.0);
    p.a1 = rng.uniform(-10.0, 10.0);
    p.a2 = rng.uniform(-10.0, 10.0);
    p.u0 = rng.uniform(-5.0, 5.0);
    p.u1 = rng.uniform(-5.0, 5.0);
    p.u2 = rng.uniform_signed(0.1, 5.0);
    const Element a = random_element(rng);
    const Element b = random_element(rng);
    const Element da = apply_isometry(p, a) - apply_isometry(p, b);
    CHECK(close(bilinear(da, da), bilinear(a - b, a - b), 1e-10));
  }
}

TEST_CASE("angle of a motion is independent of the reference vector") {
  const Element a = rotation_element(1.0, Sign::plus, 0.0, MotionKind::rotation);
  CHECK(close(angle_between(Element{2, 1, 0}, a), 1.0));
  CHECK(close(angle_between(Element{5, 0, 3}, a), 1.0));
  CHECK(close(angle_between(Element{2, 1, 0}, Element::one()), 0.0));

  const Element anti = rotation_element(0.7, Sign::plus, 1.3, MotionKind::anti_rotation);
  CHECK(close(angle_between(Element{2, 1, 0}, anti, MotionKind::anti_rotation), 0.7));
  CHECK(close(angle_between(Element{5, 0, 3}, anti, MotionKind::anti_rotation), 0.7));

  CHECK(thrown_code([&] { angle_between(Element::e1(), a); }) == ErrorCode::NullVector);
  CHECK(thrown_code([&] { angle_between(Element::e2(), a); }) == ErrorCode::NullVector);
  CHECK(thrown_code([&] { angle_between(Element{2, 1, 0}, Element{2, 0, 0}); }) ==
        ErrorCode::NotUnitNorm);
  CHECK(thrown_code([&] {
    angle_between(Element{2, 1, 0}, a, MotionKind::anti_rotation);
  }) == ErrorCode::NotUnitNorm);
}

TEST_CASE("anti-rotations swap the norm sign classes") {
  Sampler rng(53);
  for (int i = 0; i < 200; ++i) {
    const double phi = rng.uniform(-2.0, 2.0);
    const double u = rng.uniform(-3.0, 3.0);
    const Element a = rotation_element(phi, Sign::plus, u, MotionKind::anti_rotation);
    const Element x = random_element(rng);
    CHECK(close(norm_sq(mul(a, x)), -norm_sq(x), 1e-10));
  }
}
