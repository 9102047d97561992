#include "degenspace/motions.hpp"

#include <algorithm>
#include <cmath>

namespace degenspace {

namespace {

void require_unit_norm(const Element& a, double tol, const char* who) {
  if (std::abs(std::abs(norm_sq(a)) - 1.0) > tol) {
    throw DomainError(ErrorCode::NotUnitNorm, std::string(who) + " must have |norm_sq| = 1");
  }
}

}  // namespace

ComponentTag classify_component(const Element& x, double eps_inv) {
  if (std::abs(norm_sq(x)) <= eps_inv) {
    throw DomainError(ErrorCode::NotInvertible, "component tag defined for invertible elements only");
  }
  return {x.x0 + x.x1 > 0.0 ? Sign::plus : Sign::minus,
          x.x0 - x.x1 > 0.0 ? Sign::plus : Sign::minus};
}

Element rotation_element(double phi, Sign branch, double u, MotionKind kind) {
  const double ch = std::cosh(phi);
  const double sh = std::sinh(phi);
  const double s = branch == Sign::plus ? 1.0 : -1.0;
  if (kind == MotionKind::rotation) {
    return {ch, s * sh, u * sh};
  }
  return {sh, s * ch, u * ch};
}

Element proper_motion(const Element& a, const Element& b, const Element& x, double tol) {
  require_unit_norm(a, tol, "left factor");
  require_unit_norm(b, tol, "right factor");
  return mul(mul(a, x), b);
}

Element improper_motion(const Element& a, const Element& b, const Element& x, double tol) {
  require_unit_norm(a, tol, "left factor");
  require_unit_norm(b, tol, "right factor");
  return mul(mul(a, conj(x)), b);
}

Element reflect(const Element& n, const Element& x, double tol) {
  require_unit_norm(n, tol, "mirror normal");
  return -mul(mul(n, conj(x)), n);
}

Element apply_isometry(const IsometryParams& p, const Element& x) {
  if (p.u2 == 0.0) {
    throw DomainError(ErrorCode::DegenerateIsometry, "u2 = 0 collapses the null direction");
  }
  const double ch = std::cosh(p.phi);
  const double sh = std::sinh(p.phi);
  return {x.x0 * ch + x.x1 * sh + p.a0,
          x.x1 * ch + x.x0 * sh + p.a1,
          p.u0 * x.x0 + p.u1 * x.x1 + p.u2 * x.x2 + p.a2};
}

double angle_between(const Element& x, const Element& a, MotionKind kind, double tol) {
  const double nx = norm_sq(x);
  if (nx <= 0.0) {
    throw DomainError(ErrorCode::NullVector, "angle is measured against norm_sq(x) > 0");
  }
  const double expected = kind == MotionKind::rotation ? 1.0 : -1.0;
  if (std::abs(norm_sq(a) - expected) > tol) {
    throw DomainError(ErrorCode::NotUnitNorm, "motion element has the wrong unit norm");
  }
  // |a*x| = |x| for rotations and sqrt(-norm_sq(a*x)) = |x| for
  // anti-rotations, so the quotient reduces to the scalar part of a.
  const double q = bilinear(x, mul(a, x)) / nx;
  if (kind == MotionKind::rotation) {
    return std::acosh(std::max(1.0, q));
  }
  return std::asinh(q);
}

}  // namespace degenspace
