#pragma once

// Conformal model of the unit sphere: stereographic projection from the
// pole (1, 0, 0) onto the plane x0 = 0, its inverse, recovery of adapted
// sphere coordinates from plane coordinates, the induced bundle map, the
// conformal factor 4/(x^2-1)^2 relating the two degenerate line elements
// -dphi^2 and -dx^2, and the parabola images of the fibers.
//
// The whole line x0 = 1, x1 = 0 through the pole has no finite image; the
// compactified plane adds a single ideal marker for it. The lines x = ±1
// are excluded from the inverse map (branch lines).

#include <optional>

#include "degenspace/algebra.hpp"
#include "degenspace/bundle.hpp"

namespace degenspace {

// Point of the compactified image plane. `line` optionally keeps the x2
// coordinate along the pole line an ideal point came from.
struct PlanePoint {
  enum class Kind { finite, ideal };

  Kind kind = Kind::finite;
  double x = 0.0;
  double y = 0.0;
  std::optional<double> line{};

  static PlanePoint finite(double x, double y);
  static PlanePoint ideal(std::optional<double> line = std::nullopt);
  bool is_ideal() const { return kind == Kind::ideal; }
};

// (x, y) = (x1, x2) / (1 - x0). Points with x0 = 1 (hence x1 = 0 on the
// sphere) map to the ideal marker. Requires norm_sq(s) = 1 within tol.
PlanePoint stereo_to_plane(const Element& s, double tol = 1e-9);

// (x0, x1, x2) = (-(1+x^2), 2x, 2y) / (1-x^2); lands on the sphere.
// Throws OnBranchLine when |x^2 - 1| <= eps.
Element stereo_from_plane(const PlanePoint& p, double eps = 1e-12);

// Adapted sphere coordinates straight from the plane:
//   phi = ln(eps (x-1)/(x+1)),  u = -2y/(1-x)^2,
// with eps = +1 exactly on |x| > 1 (the component x0 > 0) and -1 on
// |x| < 1. Agrees with sphere_project(stereo_from_plane(p)).
SpherePoint adapted_from_plane(const PlanePoint& p, double eps = 1e-12);

// The bundle map of the plane, u = -2y/(1-x)^2; equals
// project_base(stereo_from_plane(p)). Only x = 1 is excluded.
double bundle_map_p(const PlanePoint& p, double eps = 1e-12);

// ds_sphere^2 = conformal_factor(x) * ds_plane^2 with both line elements
// degenerate: -dphi^2 on the sphere, -dx^2 on the plane.
double conformal_factor(double x, double eps = 1e-12);

// Image of the fiber u = c: the parabola y = -c/2 (x-1)^2.
double fiber_image(double c, double x);

}  // namespace degenspace
