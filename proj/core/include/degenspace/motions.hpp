#pragma once

// Isometries of the degenerate pseudo-Euclidean space carried by the
// algebra: rotations and anti-rotations generated by unit-norm elements,
// reflections, the two-sided motions x -> a x b and x -> a conj(x) b, the
// connected-component classification of the group of invertible elements,
// the general affine isometry family, and the hyperbolic angle of a motion.

#include "degenspace/algebra.hpp"

namespace degenspace {

enum class Sign { plus, minus };

// Connected component of an invertible element: the signs of (x0+x1, x0-x1).
// There are exactly four.
struct ComponentTag {
  Sign sign_plus;
  Sign sign_minus;

  friend bool operator==(const ComponentTag&, const ComponentTag&) = default;
};

ComponentTag classify_component(const Element& x, double eps_inv = 1e-12);

enum class MotionKind { rotation, anti_rotation };

// Unit-norm generators:
//   rotation:        cosh(phi) ± sinh(phi) e1 + u sinh(phi) e2   (norm_sq = +1)
//   anti-rotation:   sinh(phi) ± cosh(phi) e1 + u cosh(phi) e2   (norm_sq = -1)
// Anti-rotations exchange elements of positive and negative norm.
Element rotation_element(double phi, Sign branch, double u, MotionKind kind);

// x -> a x b with |norm_sq(a)| = |norm_sq(b)| = 1 (within tol); the even
// (proper) motions. Throws NotUnitNorm otherwise.
Element proper_motion(const Element& a, const Element& b, const Element& x,
                      double tol = 1e-9);

// x -> a conj(x) b; the odd (improper) motions.
Element improper_motion(const Element& a, const Element& b, const Element& x,
                        double tol = 1e-9);

// Reflection in the plane orthogonal to the unit-norm vector n:
// x -> -n conj(x) n. Fixes vectors orthogonal to n, negates multiples of n.
Element reflect(const Element& n, const Element& x, double tol = 1e-9);

// General isometry: hyperbolic rotation by phi in the (x0, x1) plane, an
// arbitrary shear onto the null direction x2 (u2 must stay nonzero), and a
// translation. Preserves bilinear(x - y, x - y) for every parameter choice.
struct IsometryParams {
  double phi = 0.0;
  double a0 = 0.0, a1 = 0.0, a2 = 0.0;
  double u0 = 0.0, u1 = 0.0, u2 = 1.0;
};

Element apply_isometry(const IsometryParams& p, const Element& x);

// Hyperbolic angle carried by a unit-norm element a, measured against any x
// with norm_sq(x) > 0; the value does not depend on x. For a rotation
// (norm_sq(a) = +1) this is arcosh of bilinear(x, a*x) / norm_sq(x); for an
// anti-rotation (norm_sq(a) = -1) it is arsinh of the same quotient.
double angle_between(const Element& x, const Element& a,
                     MotionKind kind = MotionKind::rotation, double tol = 1e-9);

}  // namespace degenspace
