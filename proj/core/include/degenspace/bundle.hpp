#pragma once

// Principal-bundle structure on the group of invertible elements and on the
// unit sphere: projection onto the base line, fiber membership, adapted
// coordinates in the timelike and spacelike charts, the action of the
// double-number structure group, the sphere parametrization, and the
// straight-line geodesics of the flat degenerate space.
//
// Convention: the base coordinate of an invertible x is u = x2/(x0+x1), and
// the fiber over u is the plane u*(x0+x1) - x2 = 0. This is the unique
// choice consistent with the adapted parametrization x2 = u*lambda*e^phi
// below, with the structure group acting by left multiplication, and with
// the conformal chart (an x2 = u*lambda*e^{-phi} parametrization would pair
// with x2/(x0-x1) and a right action instead, but would not match the
// plane-model formulas).

#include <functional>
#include <span>
#include <vector>

#include "degenspace/algebra.hpp"

namespace degenspace {

enum class Chart { timelike, spacelike };  // norm_sq(x) > 0 vs. < 0

// Bundle chart data: u is the base coordinate, (lambda, phi) are fiber
// coordinates.
//   timelike:   x = (lambda cosh phi, lambda sinh phi, u lambda e^phi)
//   spacelike:  x = (lambda sinh phi, lambda cosh phi, u lambda e^phi)
// lambda is nonzero and carries the sign of x0 (timelike) or x1 (spacelike).
struct AdaptedCoords {
  Chart chart = Chart::timelike;
  double u = 0.0;
  double lambda = 1.0;
  double phi = 0.0;
};

// u = x2/(x0+x1). Throws OnNullPlane when x0+x1 is zero within eps.
double project_base(const Element& x, double eps = 1e-12);

// Whether x lies on the fiber over u: |u*(x0+x1) - x2| <= tol*(1+|x2|).
bool fiber_contains(double u, const Element& x, double tol = 1e-9);

// Throws NullNorm when |norm_sq(x)| <= eps (the charts do not reach the
// null planes). Accuracy degrades as x approaches them; rescale first if
// sampling nearby.
AdaptedCoords to_adapted(const Element& x, double eps = 1e-12);
Element from_adapted(const AdaptedCoords& c);

// Left action of the structure group element with fiber data (rho, psi):
// (u, lambda, phi) -> (u, lambda*rho, phi + psi). Multiplication on the
// left by the double number rho*(cosh psi + sinh psi e1) realizes it.
AdaptedCoords structure_action(double rho, double psi, const AdaptedCoords& c);

// Point of the unit sphere S2(1) = {x : x0^2 - x1^2 = 1} in adapted
// coordinates; eps = ±1 selects the connected component. Restricted to the
// sphere the adapted lambda is forced to ±1.
struct SpherePoint {
  int eps = 1;
  double u = 0.0;
  double phi = 0.0;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

// eps * (cosh phi, sinh phi, u e^phi).
Element sphere_embed(const SpherePoint& p);
SpherePoint sphere_project(const Element& x, double tol = 1e-9);

// Left multiplication by e1; swaps S2(1) and S2(-1) and flips the sign of
// norm_sq. Requires |norm_sq(x)| = 1 within tol.
Element map_between_spheres(const Element& x, double tol = 1e-9);

// Geodesics of the flat degenerate space: affine in (x0, x1) with an
// arbitrary profile f along the null direction x2. Evaluates
// (a0 t + b0, a1 t + b1, f(t)) at the given parameter values.
std::vector<Element> sample_geodesic(double a0, double b0, double a1, double b1,
                                     const std::function<double(double)>& f,
                                     std::span<const double> ts);

}  // namespace degenspace
