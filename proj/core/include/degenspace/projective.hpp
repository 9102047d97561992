#pragma once

// Projective model on the normalized plane y0 = 0, y3 != 0: the hyperquadric
// y0^2 - y1^2 - y3^2 = 0 in P^3, the stereographic chart from the pole
// (1:0:0:1), the normalization through the center (1:0:0:0), Weierstrass-
// standardized points, the induced degenerate metric and connection, the
// curvature and Ricci tensors, tangent operators of the quadric, geodesics
// in closed, two-point, and ODE form, and the parabola fiber family.

#include <array>
#include <functional>

#include "degenspace/errors.hpp"

namespace degenspace {

// Projective point (y0 : y1 : y2 : y3), identified up to nonzero scale.
struct HomogeneousPoint {
  double y0 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double y3 = 0.0;

  // Representative scaled so the first largest-magnitude coordinate is 1.
  HomogeneousPoint normalized() const;
};

// Max-norm distance of the normalized representatives; zero iff equal as
// projective points.
double projective_distance(const HomogeneousPoint& p, const HomogeneousPoint& q);

// Quadratic form of the hyperquadric and its polar bilinear form
// B(p, q) = p0 q0 - p1 q1 - p3 q3 (y2 does not enter).
double quadric_form(const HomogeneousPoint& p);
double quadric_bilinear(const HomogeneousPoint& p, const HomogeneousPoint& q);

// |quadric_form| <= tol * max(y0^2, y1^2, y2^2, y3^2, 1).
bool on_quadric(const HomogeneousPoint& p, double tol = 1e-12);

// Cartesian coordinates (x1, x2) = (y1/y3, y2/y3) on the plane y0 = 0.
struct ChartPoint {
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

// Stereographic image on the quadric: (-1-x1^2 : 2x1 : 2x2 : 1-x1^2).
HomogeneousPoint proj_stereo(const ChartPoint& c);

// Where the line from the center (1:0:0:0) through proj_stereo(c) meets the
// plane y0 = 0: (0 : 2x1 : 2x2 : 1-x1^2).
HomogeneousPoint normalization_point(const ChartPoint& c);

// Normalization point scaled so B(X, X) = -1: X / (1 + x1^2).
HomogeneousPoint weierstrass(const ChartPoint& c);

// Only nonzero metric entry, g11 = 4/(1+x1^2)^2 = -B(d1 X, d1 X) of the
// Weierstrass embedding; the x2 direction is degenerate.
double metric_g11(double x1);

// Nonzero Christoffel symbols of the normalization connection; every other
// component vanishes identically. The connection is equiaffine:
// Gamma^s_{1s} = d/dx1 ln(1/(1+x1^2)^2) and Gamma^s_{2s} = 0.
struct ConnectionData {
  double g11 = 0.0;
  double gamma1_11 = 0.0;  // = gamma2_12 = gamma2_21 = -2 x1 / (1+x1^2)
  double gamma2_12 = 0.0;
  double gamma2_21 = 0.0;
  double gamma2_11 = 0.0;  // = 2 x2 / (1+x1^2)
};

ConnectionData christoffel(const ChartPoint& c);

// Curvature under the convention
//   R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj}.
// The only nonzero components are R^2_{121} = -R^2_{112} = 4/(1+x1^2)^2,
// and the Ricci contraction R_jl = R^i_{jil} is diag(4/(1+x1^2)^2, 0).
struct CurvatureData {
  double r2_121 = 0.0;
  double ricci_11 = 0.0;
};

CurvatureData curvature(const ChartPoint& c);

// Max absolute component of nabla g and nabla R at c, built from the
// analytic connection and curvature with central-difference partials of
// step h. Both vanish: metric and curvature are covariantly constant.
struct CovariantResiduals {
  double max_grad_metric = 0.0;
  double max_grad_curvature = 0.0;
};

CovariantResiduals covariant_residuals(const ChartPoint& c, double h = 1e-5);

// Same nabla g residual for an arbitrary connection; used to confirm the
// detector reacts to a wrong connection.
double max_metric_gradient(const ChartPoint& c,
                           const std::function<ConnectionData(const ChartPoint&)>& connection,
                           double h = 1e-5);

// Coefficient vector of the quadric tangent operator L_i, i in {1, 2, 3}:
//   L1 = y0 d1 + y1 d0,  L2 = y0 d3 + y3 d0,  L3 = y1 d3 - y3 d1.
// Each is tangent to the quadric: grad(Q) . L_i = 0 at every point.
std::array<double, 4> killing_vector(int i, const HomogeneousPoint& p);

// Parametric geodesic
//   x1 = tan(omega t + phase),
//   x2 = (a cos 2 omega t + b sin 2 omega t) sec^2(omega t + phase);
// (a, b) is the real form of the complex pair c1 e^{2 i omega t} +
// c2 e^{-2 i omega t} with a = c1 + c2, b = i(c1 - c2).
struct GeodesicParams {
  double omega = 1.0;  // nonzero
  double phase = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Throws AtPole when |cos(omega t + phase)| <= pole_guard.
ChartPoint geodesic_closed_form(const GeodesicParams& p, double t,
                                double pole_guard = 1e-9);

// Position, velocity, and acceleration of the closed form, all analytic.
struct GeodesicJet {
  double x1 = 0.0, x2 = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double acc1 = 0.0, acc2 = 0.0;
};

GeodesicJet geodesic_closed_form_jet(const GeodesicParams& p, double t,
                                     double pole_guard = 1e-9);

// Unparametrized geodesic: either the graph x2 = A(x1^2 - 1) + B x1 or a
// vertical line x1 = const (vertical lines solve the geodesic equation but
// are not captured by the graph family).
struct GeodesicCoeffs {
  enum class Form { graph, vertical };

  Form form = Form::graph;
  double A = 0.0;
  double B = 0.0;
  double x1 = 0.0;

  static GeodesicCoeffs graph(double A, double B);
  static GeodesicCoeffs vertical(double x1);
};

// Geodesic through two distinct points. Equal abscissas give the vertical
// line; abscissas with x1p * x1q = -1 make the graph system singular
// (ConjugateAbscissas).
GeodesicCoeffs geodesic_through(const ChartPoint& p, const ChartPoint& q,
                                double tol = 1e-12);

// First-order geodesic system on states (x1, x2, v1, v2):
//   v1' = 2 x1 v1^2 / (1+x1^2),
//   v2' = (-2 x2 v1^2 + 4 x1 v1 v2) / (1+x1^2).
using GeodesicState = std::array<double, 4>;
GeodesicState geodesic_ode_rhs(const GeodesicState& s);

// Image of the sphere fiber with parameter v: x2 = -v/2 (x1+1)^2. Its
// stereographic image satisfies (y0 - y1) v - y2 = 0 on the quadric.
double projective_fiber_image(double v, double x1);

}  // namespace degenspace
