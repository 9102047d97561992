#include "degenspace/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string_view>

#include "degenspace/algebra.hpp"
#include "degenspace/bundle.hpp"
#include "degenspace/conformal.hpp"
#include "degenspace/motions.hpp"
#include "degenspace/projective.hpp"

namespace degenspace {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string desc(const Element& x) {
  return "(" + fmt(x.x0) + "," + fmt(x.x1) + "," + fmt(x.x2) + ")";
}

std::string desc(const ChartPoint& c) {
  return "(" + fmt(c.x1) + "," + fmt(c.x2) + ")";
}

struct Tracker {
  long cases = 0;
  double max_res = 0.0;
  std::string worst;

  template <typename DescFn>
  void observe(double r, DescFn&& describe) {
    ++cases;
    if (cases == 1 || r > max_res) {
      max_res = r;
      worst = describe();
    }
  }
};

SuiteResult finish(const char* name, const Tracker& t, double tolerance) {
  return {name, t.cases, t.max_res, tolerance, t.max_res <= tolerance, t.worst};
}

double mag(const Element& x) {
  return std::max({std::abs(x.x0), std::abs(x.x1), std::abs(x.x2), 1.0});
}

// |a - b| relative to the larger of 1, the operands, and the supplied
// problem scale (the magnitude the computation actually flows through).
double rel(double a, double b, double scale = 1.0) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b), scale});
}

double rel(const Element& a, const Element& b, double scale = 1.0) {
  return std::max({rel(a.x0, b.x0, scale), rel(a.x1, b.x1, scale), rel(a.x2, b.x2, scale)});
}

Element random_element(Sampler& rng, double lo = -10.0, double hi = 10.0) {
  const double a = rng.uniform(lo, hi);
  const double b = rng.uniform(lo, hi);
  const double c = rng.uniform(lo, hi);
  return {a, b, c};
}

// Invertible element kept away from the null planes: the stated tolerances
// presume the conditioning factor (x0^2+x1^2)/|norm_sq| stays moderate.
// Behaviour close to the planes is covered by the error-path unit tests.
Element random_invertible(Sampler& rng, double cond_max = 1e3) {
  for (;;) {
    const Element x = random_element(rng);
    const double n = std::abs(norm_sq(x));
    if (n > 1e-6 && x.x0 * x.x0 + x.x1 * x.x1 <= cond_max * n) return x;
  }
}

Element random_unit_motion(Sampler& rng) {
  const double phi = rng.uniform(-2.0, 2.0);
  const Sign branch = rng.sign() > 0 ? Sign::plus : Sign::minus;
  const double u = rng.uniform(-3.0, 3.0);
  const MotionKind kind = rng.sign() > 0 ? MotionKind::rotation : MotionKind::anti_rotation;
  return rotation_element(phi, branch, u, kind);
}

AdaptedCoords random_adapted(Sampler& rng) {
  AdaptedCoords c;
  c.chart = rng.sign() > 0 ? Chart::timelike : Chart::spacelike;
  c.u = rng.uniform(-10.0, 10.0);
  c.lambda = rng.uniform_signed(0.1, 3.0);
  c.phi = rng.uniform(-2.5, 2.5);
  return c;
}

// Plane abscissa away from the branch lines x = ±1.
double random_plane_x(Sampler& rng, double branch_guard) {
  for (;;) {
    const double x = rng.uniform(-5.0, 5.0);
    if (std::abs(x * x - 1.0) >= branch_guard) return x;
  }
}

SpherePoint random_sphere_point(Sampler& rng, double pole_guard = 0.1) {
  SpherePoint p;
  p.eps = rng.sign();
  p.u = rng.uniform(-5.0, 5.0);
  // On the eps = +1 component phi = 0 is the projection pole; keep clear.
  p.phi = p.eps == 1 ? rng.uniform_signed(pole_guard, 2.5) : rng.uniform(-2.5, 2.5);
  return p;
}

ChartPoint random_chart(Sampler& rng, double span = 5.0) {
  const double a = rng.uniform(-span, span);
  const double b = rng.uniform(-span, span);
  return {a, b};
}

GeodesicParams random_geodesic_params(Sampler& rng) {
  GeodesicParams p;
  p.omega = rng.uniform_signed(0.3, 2.0);
  p.phase = rng.uniform(-1.5, 1.5);
  p.a = rng.uniform(-2.0, 2.0);
  p.b = rng.uniform(-2.0, 2.0);
  return p;
}

// Parameter t whose angle omega t + phase stays clear of the tan poles:
// at least 0.1 away in t and 0.15 away in angle.
double random_geodesic_time(Sampler& rng, const GeodesicParams& p) {
  const double guard = std::max(0.1 * std::abs(p.omega), 0.15);
  for (;;) {
    const double t = rng.uniform(-2.0, 2.0);
    const double theta = p.omega * t + p.phase;
    if (std::abs(std::remainder(theta - M_PI_2, M_PI)) >= guard) return t;
  }
}

std::array<double, 4> as_array(const HomogeneousPoint& p) {
  return {p.y0, p.y1, p.y2, p.y3};
}

double bform(const std::array<double, 4>& p, const std::array<double, 4>& q) {
  return p[0] * q[0] - p[1] * q[1] - p[3] * q[3];
}

// Composite Simpson rule with n panels (n made even).
template <typename F>
double simpson(F&& f, double a, double b, int n) {
  if (a == b) return 0.0;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  }
  return sum * h / 3.0;
}

// Full curvature tensor assembled from the connection by central
// differences of the Christoffel symbols plus the quadratic terms; the
// independent route the analytic curvature is checked against.
using Riemann = std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>;

std::array<std::array<std::array<double, 2>, 2>, 2> gamma_at(const ChartPoint& c) {
  const ConnectionData k = christoffel(c);
  std::array<std::array<std::array<double, 2>, 2>, 2> g{};
  g[0][0][0] = k.gamma1_11;
  g[1][0][1] = k.gamma2_12;
  g[1][1][0] = k.gamma2_21;
  g[1][0][0] = k.gamma2_11;
  return g;
}

Riemann riemann_from_connection(const ChartPoint& c, double h) {
  const auto G = gamma_at(c);
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> dG{};  // dG[k][i][l][j]
  for (int k = 0; k < 2; ++k) {
    const ChartPoint plus{c.x1 + (k == 0 ? h : 0.0), c.x2 + (k == 1 ? h : 0.0)};
    const ChartPoint minus{c.x1 - (k == 0 ? h : 0.0), c.x2 - (k == 1 ? h : 0.0)};
    const auto Gp = gamma_at(plus);
    const auto Gm = gamma_at(minus);
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l)
        for (int j = 0; j < 2; ++j) dG[k][i][l][j] = (Gp[i][l][j] - Gm[i][l][j]) / (2.0 * h);
  }
  Riemann R{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          double v = dG[k][i][l][j] - dG[l][i][k][j];
          for (int m = 0; m < 2; ++m) {
            v += G[i][k][m] * G[m][l][j] - G[i][l][m] * G[m][k][j];
          }
          R[i][j][k][l] = v;
        }
      }
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// algebra

SuiteResult algebra_associativity(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const Element z = random_element(rng);
    const double scale = mag(x) * mag(y) * mag(z) * 4.0;
    const double r = rel(mul(mul(x, y), z), mul(x, mul(y, z)), scale);
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y) + " z=" + desc(z); });
  }
  return finish("algebra.associativity", t, tol.exact_rel);
}

SuiteResult algebra_matrix_homomorphism(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const TriMatrix lhs = to_matrix(mul(x, y));
    const TriMatrix rhs = to_matrix(x) * to_matrix(y);
    const double scale = mag(x) * mag(y) * 4.0;
    const double r = std::max({rel(lhs.a, rhs.a, scale), rel(lhs.b, rhs.b, scale),
                               rel(lhs.c, rhs.c, scale)});
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("algebra.matrix_homomorphism", t, tol.exact_rel);
}

SuiteResult algebra_conj_antihomomorphism(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const double r = rel(conj(mul(x, y)), mul(conj(y), conj(x)));
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("algebra.conj_antihomomorphism", t, tol.exact_rel);
}

SuiteResult algebra_bilinear_realness(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const Element s = mul(x, conj(y)) + mul(y, conj(x));
    const double scale = std::max(1.0, mag(x) * mag(y));
    const double r = std::max(std::abs(s.x1), std::abs(s.x2)) / (2.0 * scale);
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("algebra.bilinear_realness", t, tol.exact_rel);
}

SuiteResult algebra_norm_multiplicativity(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const Element z = mul(x, y);
    const double scale = std::max(z.x0 * z.x0, z.x1 * z.x1);
    const double r = rel(norm_sq(z), norm_sq(x) * norm_sq(y), scale);
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("algebra.norm_multiplicativity", t, tol.algebraic_rel);
}

SuiteResult algebra_inverse_identity(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_invertible(rng);
    const Element xi = inverse(x);
    const double r = std::max(rel(mul(x, xi), Element::one()), rel(mul(xi, x), Element::one()));
    t.observe(r, [&] { return "x=" + desc(x); });
  }
  return finish("algebra.inverse_identity", t, tol.algebraic_rel);
}

// ---------------------------------------------------------------------------
// motions

SuiteResult motions_form_equivariance(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element a = random_element(rng);
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const double want = norm_sq(a) * bilinear(x, y);
    const double scale = mag(a) * mag(a) * mag(x) * mag(y) * 4.0;
    const double r = std::max(rel(bilinear(mul(a, x), mul(a, y)), want, scale),
                              rel(bilinear(mul(x, a), mul(y, a)), want, scale));
    t.observe(r, [&] { return "a=" + desc(a) + " x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("motions.form_equivariance", t, tol.algebraic_rel);
}

SuiteResult motions_proper_motion_sign(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element a = random_unit_motion(rng);
    const Element b = random_unit_motion(rng);
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const double sign = (norm_sq(a) > 0.0 ? 1.0 : -1.0) * (norm_sq(b) > 0.0 ? 1.0 : -1.0);
    const double got = bilinear(proper_motion(a, b, x), proper_motion(a, b, y));
    const double scale = mag(a) * mag(a) * mag(b) * mag(b) * mag(x) * mag(y) * 8.0;
    const double r = rel(got, sign * bilinear(x, y), scale);
    t.observe(r, [&] { return "a=" + desc(a) + " b=" + desc(b) + " x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("motions.proper_motion_sign", t, tol.algebraic_rel);
}

SuiteResult motions_anti_rotation_sign_swap(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double phi = rng.uniform(-2.0, 2.0);
    const Sign branch = rng.sign() > 0 ? Sign::plus : Sign::minus;
    const double u = rng.uniform(-3.0, 3.0);
    const Element a = rotation_element(phi, branch, u, MotionKind::anti_rotation);
    const Element x = random_element(rng);
    const double scale = mag(a) * mag(a) * mag(x) * mag(x) * 4.0;
    const double r = rel(norm_sq(mul(a, x)), -norm_sq(x), scale);
    t.observe(r, [&] { return "a=" + desc(a) + " x=" + desc(x); });
  }
  return finish("motions.anti_rotation_sign_swap", t, tol.algebraic_rel);
}

SuiteResult motions_double_reflection(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element n1 = random_unit_motion(rng);
    const Element n2 = random_unit_motion(rng);
    const Element x = random_element(rng);
    const Element lhs = reflect(n2, reflect(n1, x));
    const Element rhs = proper_motion(mul(n2, conj(n1)), mul(conj(n1), n2), x);
    const double scale = mag(n1) * mag(n1) * mag(n2) * mag(n2) * mag(x) * 16.0;
    const double r = rel(lhs, rhs, scale);
    t.observe(r, [&] { return "n1=" + desc(n1) + " n2=" + desc(n2) + " x=" + desc(x); });
  }
  return finish("motions.double_reflection", t, tol.algebraic_rel);
}

SuiteResult motions_component_multiplicative(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  const auto pick = [&rng] {
    for (;;) {
      const Element x = random_element(rng);
      if (std::abs(x.x0 + x.x1) >= 1e-2 && std::abs(x.x0 - x.x1) >= 1e-2) return x;
    }
  };
  for (long i = 0; i < trials; ++i) {
    const Element x = pick();
    const Element y = pick();
    const ComponentTag got = classify_component(mul(x, y));
    const ComponentTag want{
        (x.x0 + x.x1 > 0.0) == (y.x0 + y.x1 > 0.0) ? Sign::plus : Sign::minus,
        (x.x0 - x.x1 > 0.0) == (y.x0 - y.x1 > 0.0) ? Sign::plus : Sign::minus};
    const double r = got == want ? 0.0 : 1.0;
    t.observe(r, [&] { return "x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("motions.component_multiplicative", t, 0.5);
}

SuiteResult motions_isometry_distance(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    IsometryParams p;
    p.phi = rng.uniform(-3.0, 3.0);
    p.a0 = rng.uniform(-10.0, 10.0);
    p.a1 = rng.uniform(-10.0, 10.0);
    p.a2 = rng.uniform(-10.0, 10.0);
    p.u0 = rng.uniform(-5.0, 5.0);
    p.u1 = rng.uniform(-5.0, 5.0);
    p.u2 = rng.uniform_signed(0.1, 5.0);
    const Element x = random_element(rng);
    const Element y = random_element(rng);
    const Element dx = x - y;
    const Element dxp = apply_isometry(p, x) - apply_isometry(p, y);
    const double scale = 8.0 * std::max(mag(dx) * mag(dx), mag(dxp) * mag(dxp));
    const double r = rel(bilinear(dxp, dxp), bilinear(dx, dx), scale);
    t.observe(r, [&] { return "phi=" + fmt(p.phi) + " x=" + desc(x) + " y=" + desc(y); });
  }
  return finish("motions.isometry_distance", t, tol.algebraic_rel);
}

SuiteResult motions_angle_independence(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double phi = rng.uniform_signed(0.1, 2.5);
    const Sign branch = rng.sign() > 0 ? Sign::plus : Sign::minus;
    const double u = rng.uniform(-3.0, 3.0);
    AdaptedCoords c;
    c.chart = Chart::timelike;
    c.u = rng.uniform(-3.0, 3.0);
    c.lambda = rng.uniform_signed(0.5, 3.0);
    c.phi = rng.uniform(-2.0, 2.0);
    const Element x = from_adapted(c);  // norm_sq(x) > 0 by construction
    const Element rot = rotation_element(phi, branch, u, MotionKind::rotation);
    const Element anti = rotation_element(phi, branch, u, MotionKind::anti_rotation);
    const double r1 = rel(angle_between(x, rot), std::abs(phi));
    const double r2 = rel(angle_between(x, anti, MotionKind::anti_rotation), phi);
    const double r = std::max(r1, r2);
    t.observe(r, [&] { return "phi=" + fmt(phi) + " x=" + desc(x); });
  }
  return finish("motions.angle_independence", t, tol.algebraic_rel);
}

// ---------------------------------------------------------------------------
// bundle

SuiteResult bundle_adapted_round_trip(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const Element x = random_invertible(rng);
    const double r1 = rel(from_adapted(to_adapted(x)), x);
    const AdaptedCoords c = random_adapted(rng);
    const AdaptedCoords back = to_adapted(from_adapted(c));
    const double r2 = back.chart != c.chart
                          ? 1.0
                          : std::max({rel(back.u, c.u), rel(back.lambda, c.lambda),
                                      rel(back.phi, c.phi)});
    const double r = std::max(r1, r2);
    t.observe(r, [&] { return "x=" + desc(x) + " u=" + fmt(c.u) + " lambda=" + fmt(c.lambda) +
                              " phi=" + fmt(c.phi); });
  }
  return finish("bundle.adapted_round_trip", t, tol.algebraic_rel);
}

SuiteResult bundle_projection_base(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    AdaptedCoords c = random_adapted(rng);
    c.chart = Chart::timelike;
    const double r1 = rel(project_base(from_adapted(c)), c.u);

    const auto away_from_plane = [&rng] {
      for (;;) {
        const Element x = random_element(rng);
        if (std::abs(x.x0 + x.x1) >= 0.3) return x;
      }
    };
    const Element x = away_from_plane();
    Element a = away_from_plane();
    a.x2 = 0.0;  // a lies in the double-number subgroup
    const double r2 = rel(project_base(mul(a, x)), project_base(x));
    const double r = std::max(r1, r2);
    t.observe(r, [&] { return "u=" + fmt(c.u) + " a=" + desc(a) + " x=" + desc(x); });
  }
  return finish("bundle.projection_base", t, tol.algebraic_rel);
}

SuiteResult bundle_structure_action_group(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const AdaptedCoords c = random_adapted(rng);
    const double rho1 = rng.uniform_signed(0.2, 3.0);
    const double psi1 = rng.uniform(-2.0, 2.0);
    const double rho2 = rng.uniform_signed(0.2, 3.0);
    const double psi2 = rng.uniform(-2.0, 2.0);
    const AdaptedCoords lhs = structure_action(rho2, psi2, structure_action(rho1, psi1, c));
    const AdaptedCoords rhs = structure_action(rho1 * rho2, psi1 + psi2, c);
    const double r = std::max({std::abs(lhs.u - c.u), rel(lhs.lambda, rhs.lambda),
                               rel(lhs.phi, rhs.phi), lhs.chart == c.chart ? 0.0 : 1.0});
    t.observe(r, [&] { return "rho=" + fmt(rho1) + "," + fmt(rho2) + " psi=" + fmt(psi1) + "," +
                              fmt(psi2); });
  }
  return finish("bundle.structure_action_group", t, tol.exact_rel);
}

SuiteResult bundle_structure_action_left_mul(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const AdaptedCoords c = random_adapted(rng);
    const double rho = rng.uniform_signed(0.2, 3.0);
    const double psi = rng.uniform(-2.0, 2.0);
    const Element a = from_adapted({Chart::timelike, 0.0, rho, psi});
    const AdaptedCoords got = to_adapted(mul(a, from_adapted(c)));
    const AdaptedCoords want = structure_action(rho, psi, c);
    const double r = got.chart != want.chart
                         ? 1.0
                         : std::max({rel(got.u, want.u), rel(got.lambda, want.lambda),
                                     rel(got.phi, want.phi)});
    t.observe(r, [&] { return "rho=" + fmt(rho) + " psi=" + fmt(psi) + " u=" + fmt(c.u) +
                              " lambda=" + fmt(c.lambda) + " phi=" + fmt(c.phi); });
  }
  return finish("bundle.structure_action_left_mul", t, tol.algebraic_rel);
}

SuiteResult bundle_sphere_embed_on_sphere(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    SpherePoint p;
    p.eps = rng.sign();
    p.u = rng.uniform(-10.0, 10.0);
    p.phi = rng.uniform(-2.5, 2.5);
    const double r = std::abs(norm_sq(sphere_embed(p)) - 1.0);
    t.observe(r, [&] { return "eps=" + fmt(p.eps) + " u=" + fmt(p.u) + " phi=" + fmt(p.phi); });
  }
  return finish("bundle.sphere_embed_on_sphere", t, tol.exact_rel);
}

SuiteResult bundle_sphere_lambda_unit(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    SpherePoint p;
    p.eps = rng.sign();
    p.u = rng.uniform(-10.0, 10.0);
    p.phi = rng.uniform(-2.5, 2.5);
    const Element x = sphere_embed(p);
    const AdaptedCoords c = to_adapted(x);
    const SpherePoint back = sphere_project(x);
    const double r = std::max({std::abs(c.lambda - p.eps), c.chart == Chart::timelike ? 0.0 : 1.0,
                               rel(c.u, p.u), rel(c.phi, p.phi),
                               back.eps == p.eps ? 0.0 : 1.0, rel(back.u, p.u),
                               rel(back.phi, p.phi)});
    t.observe(r, [&] { return "eps=" + fmt(p.eps) + " u=" + fmt(p.u) + " phi=" + fmt(p.phi); });
  }
  return finish("bundle.sphere_lambda_unit", t, tol.exact_rel);
}

// ---------------------------------------------------------------------------
// conformal

SuiteResult conformal_round_trip(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double x = random_plane_x(rng, 0.05);
    const double y = rng.uniform(-10.0, 10.0);
    const PlanePoint p = PlanePoint::finite(x, y);
    const PlanePoint p2 = stereo_to_plane(stereo_from_plane(p));
    const double r1 = p2.is_ideal() ? 1.0 : std::max(rel(p2.x, x), rel(p2.y, y));

    const SpherePoint sp = random_sphere_point(rng);
    const Element s = sphere_embed(sp);
    const PlanePoint q = stereo_to_plane(s);
    const double r2 = q.is_ideal() ? 1.0 : rel(stereo_from_plane(q), s);
    const double r = std::max(r1, r2);
    t.observe(r, [&] { return "x=" + fmt(x) + " y=" + fmt(y) + " eps=" + fmt(sp.eps) +
                              " u=" + fmt(sp.u) + " phi=" + fmt(sp.phi); });
  }
  return finish("conformal.round_trip", t, tol.algebraic_rel);
}

SuiteResult conformal_inverse_on_sphere(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double x = random_plane_x(rng, 0.05);
    const double y = rng.uniform(-10.0, 10.0);
    const Element s = stereo_from_plane(PlanePoint::finite(x, y));
    const double scale = std::max(s.x0 * s.x0, s.x1 * s.x1);
    const double r = rel(norm_sq(s), 1.0, scale);
    t.observe(r, [&] { return "x=" + fmt(x) + " y=" + fmt(y); });
  }
  return finish("conformal.inverse_on_sphere", t, tol.exact_rel);
}

SuiteResult conformal_component_dichotomy(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const SpherePoint sp = random_sphere_point(rng);
    const PlanePoint q = stereo_to_plane(sphere_embed(sp));
    bool ok = !q.is_ideal();
    if (ok) {
      ok = sp.eps == 1 ? std::abs(q.x) > 1.0 : std::abs(q.x) < 1.0;
      ok = ok && adapted_from_plane(q).eps == sp.eps;
    }
    const double r = ok ? 0.0 : 1.0;
    t.observe(r, [&] { return "eps=" + fmt(sp.eps) + " u=" + fmt(sp.u) + " phi=" + fmt(sp.phi); });
  }
  return finish("conformal.component_dichotomy", t, 0.5);
}

SuiteResult conformal_conformality_fd(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double x = random_plane_x(rng, 0.3);
    const auto phi_of = [](double xi) {
      return adapted_from_plane(PlanePoint::finite(xi, 0.0)).phi;
    };
    const double dphi = central_diff(phi_of, x, tol.fd_step);
    const double r = std::abs(dphi * dphi - conformal_factor(x));
    t.observe(r, [&] { return "x=" + fmt(x); });
  }
  return finish("conformal.conformality_fd", t, tol.fd_abs);
}

SuiteResult conformal_p_diagram(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double x = random_plane_x(rng, 0.05);
    const double y = rng.uniform(-10.0, 10.0);
    const PlanePoint p = PlanePoint::finite(x, y);
    const double r = rel(bundle_map_p(p), project_base(stereo_from_plane(p)));
    t.observe(r, [&] { return "x=" + fmt(x) + " y=" + fmt(y); });
  }
  return finish("conformal.p_diagram", t, tol.exact_rel);
}

SuiteResult conformal_fiber_parabola(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double c = rng.uniform(-5.0, 5.0);
    SpherePoint sp = random_sphere_point(rng);
    sp.u = c;
    const PlanePoint q = stereo_to_plane(sphere_embed(sp));
    const double want = fiber_image(c, q.x);
    const double r = std::abs(q.y - want) / std::max({1.0, std::abs(q.y), std::abs(want)});
    t.observe(r, [&] { return "c=" + fmt(c) + " eps=" + fmt(sp.eps) + " phi=" + fmt(sp.phi); });
  }
  return finish("conformal.fiber_parabola", t, 1e-9);
}

SuiteResult conformal_fiber_length_transport(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  const long n = std::min<long>(trials, 200);
  for (long i = 0; i < n; ++i) {
    const double c = rng.uniform(-3.0, 3.0);
    const int eps = rng.sign();
    double phi_a, phi_b;
    if (eps == 1) {
      // Stay on one plane component: the image jumps through infinity at phi = 0.
      const int side = rng.sign();
      phi_a = side * rng.uniform(0.2, 2.0);
      phi_b = side * rng.uniform(0.2, 2.0);
    } else {
      phi_a = rng.uniform(-2.0, 2.0);
      phi_b = rng.uniform(-2.0, 2.0);
    }
    const double xa = stereo_to_plane(sphere_embed({eps, c, phi_a})).x;
    const double xb = stereo_to_plane(sphere_embed({eps, c, phi_b})).x;
    const double integral =
        simpson([](double x) { return std::sqrt(conformal_factor(x)); }, xa, xb, 4000);
    const double dphi = phi_b - phi_a;
    const double r = std::abs(integral * integral - dphi * dphi) / std::max(1.0, dphi * dphi);
    t.observe(r, [&] { return "eps=" + fmt(eps) + " phi_a=" + fmt(phi_a) + " phi_b=" + fmt(phi_b); });
  }
  return finish("conformal.fiber_length_transport", t, tol.fd_abs);
}

// ---------------------------------------------------------------------------
// projective

SuiteResult projective_on_quadric(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng);
    const HomogeneousPoint X = proj_stereo(c);
    const double scale =
        std::max({X.y0 * X.y0, X.y1 * X.y1, X.y2 * X.y2, X.y3 * X.y3, 1.0});
    double r = std::abs(quadric_form(X)) / scale;
    if (!on_quadric(X, tol.exact_rel)) r = std::max(r, 1.0);
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.on_quadric", t, tol.exact_rel);
}

SuiteResult projective_weierstrass_norm(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng);
    const HomogeneousPoint W = weierstrass(c);
    const double r = std::abs(quadric_bilinear(W, W) + 1.0);
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.weierstrass_norm", t, tol.exact_rel);
}

SuiteResult projective_conjugacy_fd(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng, 3.0);
    const std::array<double, 4> W = as_array(weierstrass(c));
    const auto d1 = central_diff<4>(
        [&](double x1) { return as_array(weierstrass({x1, c.x2})); }, c.x1, tol.fd_step);
    const auto d2 = central_diff<4>(
        [&](double x2) { return as_array(weierstrass({c.x1, x2})); }, c.x2, tol.fd_step);
    const double r = std::max(std::abs(bform(W, d1)), std::abs(bform(W, d2)));
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.conjugacy_fd", t, tol.fd_abs);
}

SuiteResult projective_metric_fd(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng, 3.0);
    const auto d1 = central_diff<4>(
        [&](double x1) { return as_array(weierstrass({x1, c.x2})); }, c.x1, tol.fd_step);
    const auto d2 = central_diff<4>(
        [&](double x2) { return as_array(weierstrass({c.x1, x2})); }, c.x2, tol.fd_step);
    const double r = std::max(std::abs(metric_g11(c.x1) - (-bform(d1, d1))),
                              std::abs(-bform(d2, d2)));
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.metric_fd", t, tol.fd_abs);
}

SuiteResult projective_equiaffine(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng);
    const ConnectionData k = christoffel(c);
    const double want = -4.0 * c.x1 / (1.0 + c.x1 * c.x1);
    const double r = std::max(rel(k.gamma1_11 + k.gamma2_12, want),
                              std::abs(0.0 /* Gamma^1_21 */ + 0.0 /* Gamma^2_22 */));
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.equiaffine", t, tol.algebraic_rel);
}

SuiteResult projective_cov_const_grid(Sampler& rng, long trials, const Tolerances& tol) {
  (void)rng;
  (void)trials;
  Tracker t;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) {
      const ChartPoint c{-3.0 + 0.3 * i, -3.0 + 0.3 * j};
      const CovariantResiduals res = covariant_residuals(c, tol.fd_step);
      const double r = std::max(res.max_grad_metric, res.max_grad_curvature);
      t.observe(r, [&] { return "c=" + desc(c); });
    }
  }
  return finish("projective.cov_const_grid", t, tol.fd_abs);
}

SuiteResult projective_ricci(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const ChartPoint c = random_chart(rng, 3.0);
    const double want = 4.0 / ((1.0 + c.x1 * c.x1) * (1.0 + c.x1 * c.x1));
    const CurvatureData cur = curvature(c);
    const Riemann R = riemann_from_connection(c, tol.fd_step);
    double ricci[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int jj = 0; jj < 2; ++jj)
      for (int ll = 0; ll < 2; ++ll)
        for (int ii = 0; ii < 2; ++ii) ricci[jj][ll] += R[ii][jj][ii][ll];
    const double analytic = rel(cur.ricci_11, want) / tol.algebraic_rel * tol.fd_abs;
    const double r = std::max({std::abs(ricci[0][0] - want), std::abs(ricci[0][1]),
                               std::abs(ricci[1][0]), std::abs(ricci[1][1]),
                               std::abs(R[1][0][1][0] - cur.r2_121),
                               std::abs(R[1][0][1][0] + R[1][0][0][1]), analytic});
    t.observe(r, [&] { return "c=" + desc(c); });
  }
  return finish("projective.ricci", t, tol.fd_abs);
}

SuiteResult projective_fiber_equation(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const double v = rng.uniform(-5.0, 5.0);
    const double x1 = rng.uniform(-5.0, 5.0);
    const HomogeneousPoint X = proj_stereo({x1, projective_fiber_image(v, x1)});
    const double scale = std::max(
        {1.0, std::abs(X.y0), std::abs(X.y1), std::abs(X.y2), std::abs(v) * (1.0 + x1 * x1)});
    const double r = std::abs((X.y0 - X.y1) * v - X.y2) / scale;
    t.observe(r, [&] { return "v=" + fmt(v) + " x1=" + fmt(x1); });
  }
  return finish("projective.fiber_equation", t, 1e-10);
}

SuiteResult projective_killing_tangency(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const bool on_q = rng.sign() > 0;
    HomogeneousPoint p;
    if (on_q) {
      p = proj_stereo(random_chart(rng));
    } else {
      const double a = rng.uniform(-10.0, 10.0);
      const double b = rng.uniform(-10.0, 10.0);
      const double c = rng.uniform(-10.0, 10.0);
      const double d = rng.uniform(-10.0, 10.0);
      p = {a, b, c, d};
    }
    double r = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const std::array<double, 4> L = killing_vector(k, p);
      r = std::max(r, std::abs(2.0 * p.y0 * L[0] - 2.0 * p.y1 * L[1] - 2.0 * p.y3 * L[3]));
    }
    t.observe(r, [&] { return "y=(" + fmt(p.y0) + "," + fmt(p.y1) + "," + fmt(p.y2) + "," +
                              fmt(p.y3) + ")"; });
  }
  return finish("projective.killing_tangency", t, 0.0);
}

SuiteResult projective_geodesic_ode_residual(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const GeodesicParams p = random_geodesic_params(rng);
    const double time = random_geodesic_time(rng, p);
    const GeodesicJet jet = geodesic_closed_form_jet(p, time);
    const ConnectionData k = christoffel({jet.x1, jet.x2});
    const double res1 = jet.acc1 + k.gamma1_11 * jet.v1 * jet.v1;
    const double res2 =
        jet.acc2 + k.gamma2_11 * jet.v1 * jet.v1 + 2.0 * k.gamma2_12 * jet.v1 * jet.v2;
    const double r = std::max(std::abs(res1), std::abs(res2));
    t.observe(r, [&] { return "omega=" + fmt(p.omega) + " phase=" + fmt(p.phase) + " a=" +
                              fmt(p.a) + " b=" + fmt(p.b) + " t=" + fmt(time); });
  }
  return finish("projective.geodesic_ode_residual", t, 1e-9);
}

SuiteResult projective_geodesic_graph_form(Sampler& rng, long trials, const Tolerances& tol) {
  (void)tol;
  Tracker t;
  for (long i = 0; i < trials; ++i) {
    const GeodesicParams p = random_geodesic_params(rng);
    ChartPoint q1, q2;
    for (;;) {
      const double t1 = random_geodesic_time(rng, p);
      const double t2 = random_geodesic_time(rng, p);
      q1 = geodesic_closed_form(p, t1);
      q2 = geodesic_closed_form(p, t2);
      if (std::abs(q1.x1 - q2.x1) >= 0.1 && std::abs(q1.x1 * q2.x1 + 1.0) >= 0.1) break;
    }
    const GeodesicCoeffs g = geodesic_through(q1, q2);
    double r = 0.0;
    for (int s = 0; s < 50; ++s) {
      const double ts = random_geodesic_time(rng, p);
      const ChartPoint pt = geodesic_closed_form(p, ts);
      r = std::max(r, std::abs(g.A * (pt.x1 * pt.x1 - 1.0) + g.B * pt.x1 - pt.x2));
    }
    t.observe(r, [&] { return "omega=" + fmt(p.omega) + " phase=" + fmt(p.phase) + " a=" +
                              fmt(p.a) + " b=" + fmt(p.b); });
  }
  return finish("projective.geodesic_graph_form", t, 1e-8);
}

SuiteResult projective_geodesic_rk4_agreement(Sampler& rng, long trials, const Tolerances& tol) {
  Tracker t;
  const long n = std::min<long>(trials, 25);
  for (long i = 0; i < n; ++i) {
    GeodesicParams p;
    p.omega = rng.uniform_signed(0.3, 0.8);
    p.phase = rng.uniform(-0.2, 0.2);
    p.a = rng.uniform(-2.0, 2.0);
    p.b = rng.uniform(-2.0, 2.0);
    const GeodesicJet j0 = geodesic_closed_form_jet(p, 0.0);
    const GeodesicState y0{j0.x1, j0.x2, j0.v1, j0.v2};
    const auto traj = rk4<4>([](const GeodesicState& s) { return geodesic_ode_rhs(s); },
                             y0, 0.0, 1.0, 1000);
    double r = 0.0;
    for (const auto& [ti, yi] : traj) {
      const ChartPoint want = geodesic_closed_form(p, ti);
      r = std::max({r, std::abs(yi[0] - want.x1), std::abs(yi[1] - want.x2)});
    }
    t.observe(r, [&] { return "omega=" + fmt(p.omega) + " phase=" + fmt(p.phase) + " a=" +
                              fmt(p.a) + " b=" + fmt(p.b); });
  }
  return finish("projective.geodesic_rk4_agreement", t, tol.ode_abs);
}

// ---------------------------------------------------------------------------
// numerics

SuiteResult numerics_rk4_order(Sampler& rng, long trials, const Tolerances& tol) {
  (void)rng;
  (void)trials;
  (void)tol;
  Tracker t;
  const auto err_at = [](int steps) {
    const auto traj = rk4<1>([](const std::array<double, 1>& y) {
      return std::array<double, 1>{y[0]};
    }, {1.0}, 0.0, 1.0, steps);
    return std::abs(traj.back().second[0] - std::exp(1.0));
  };
  const double e16 = err_at(16);
  const double e32 = err_at(32);
  const double e64 = err_at(64);
  const double worst_ratio = std::min(e16 / e32, e32 / e64);
  // Order-4 scaling: halving the step must cut the error by at least 12x.
  t.observe(12.0 / worst_ratio, [&] {
    return "err16=" + fmt(e16) + " err32=" + fmt(e32) + " err64=" + fmt(e64);
  });
  return finish("numerics.rk4_order", t, 1.0);
}

SuiteResult numerics_central_diff_order(Sampler& rng, long trials, const Tolerances& tol) {
  (void)rng;
  (void)trials;
  (void)tol;
  Tracker t;
  struct Case {
    const char* label;
    std::function<double(double)> f;
    double x;
    double exact;
    double c3;  // |f'''(x)| / 6
  };
  const Case cases[] = {
      {"exp", [](double x) { return std::exp(x); }, 0.3, std::exp(0.3), std::exp(0.3) / 6.0},
      {"sin", [](double x) { return std::sin(x); }, 0.7, std::cos(0.7), std::cos(0.7) / 6.0},
      {"log-metric", [](double x) { return std::log(1.0 / ((1.0 + x * x) * (1.0 + x * x))); },
       1.0, -2.0, 2.0 / 6.0},
  };
  for (const Case& c : cases) {
    double prev_err = 0.0;
    for (const double h : {1e-2, 5e-3, 2.5e-3}) {
      const double err = std::abs(central_diff(c.f, c.x, h) - c.exact);
      // Truncation bound from the cubic term plus a round-off allowance.
      const double bound = 1.5 * c.c3 * h * h + 1e-13;
      t.observe(err / bound, [&] { return std::string(c.label) + " h=" + fmt(h); });
      if (prev_err != 0.0) {
        const double ratio = prev_err / err;
        t.observe(ratio >= 3.0 && ratio <= 5.0 ? 0.0 : 2.0,
                  [&] { return std::string(c.label) + " ratio=" + fmt(ratio); });
      }
      prev_err = err;
    }
  }
  return finish("numerics.central_diff_order", t, 1.0);
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*fn)(Sampler&, long, const Tolerances&);
};

constexpr SuiteEntry kSuites[] = {
    {"algebra.associativity", algebra_associativity},
    {"algebra.bilinear_realness", algebra_bilinear_realness},
    {"algebra.conj_antihomomorphism", algebra_conj_antihomomorphism},
    {"algebra.inverse_identity", algebra_inverse_identity},
    {"algebra.matrix_homomorphism", algebra_matrix_homomorphism},
    {"algebra.norm_multiplicativity", algebra_norm_multiplicativity},
    {"bundle.adapted_round_trip", bundle_adapted_round_trip},
    {"bundle.projection_base", bundle_projection_base},
    {"bundle.sphere_embed_on_sphere", bundle_sphere_embed_on_sphere},
    {"bundle.sphere_lambda_unit", bundle_sphere_lambda_unit},
    {"bundle.structure_action_group", bundle_structure_action_group},
    {"bundle.structure_action_left_mul", bundle_structure_action_left_mul},
    {"conformal.component_dichotomy", conformal_component_dichotomy},
    {"conformal.conformality_fd", conformal_conformality_fd},
    {"conformal.fiber_length_transport", conformal_fiber_length_transport},
    {"conformal.fiber_parabola", conformal_fiber_parabola},
    {"conformal.inverse_on_sphere", conformal_inverse_on_sphere},
    {"conformal.p_diagram", conformal_p_diagram},
    {"conformal.round_trip", conformal_round_trip},
    {"motions.angle_independence", motions_angle_independence},
    {"motions.anti_rotation_sign_swap", motions_anti_rotation_sign_swap},
    {"motions.component_multiplicative", motions_component_multiplicative},
    {"motions.double_reflection", motions_double_reflection},
    {"motions.form_equivariance", motions_form_equivariance},
    {"motions.isometry_distance", motions_isometry_distance},
    {"motions.proper_motion_sign", motions_proper_motion_sign},
    {"numerics.central_diff_order", numerics_central_diff_order},
    {"numerics.rk4_order", numerics_rk4_order},
    {"projective.conjugacy_fd", projective_conjugacy_fd},
    {"projective.cov_const_grid", projective_cov_const_grid},
    {"projective.equiaffine", projective_equiaffine},
    {"projective.fiber_equation", projective_fiber_equation},
    {"projective.geodesic_graph_form", projective_geodesic_graph_form},
    {"projective.geodesic_ode_residual", projective_geodesic_ode_residual},
    {"projective.geodesic_rk4_agreement", projective_geodesic_rk4_agreement},
    {"projective.killing_tangency", projective_killing_tangency},
    {"projective.metric_fd", projective_metric_fd},
    {"projective.on_quadric", projective_on_quadric},
    {"projective.ricci", projective_ricci},
    {"projective.weierstrass_norm", projective_weierstrass_norm},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  names.reserve(std::size(kSuites));
  for (const SuiteEntry& e : kSuites) names.emplace_back(e.name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, long trials,
                      const Tolerances& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (const SuiteEntry& e : kSuites) {
    if (name == e.name) {
      Sampler rng(seed ^ fnv1a64(e.name));
      return e.fn(rng, trials, tol);
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

VerifyReport run_verification(std::uint64_t seed, long trials, const Tolerances& tol) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  VerifyReport report;
  report.seed = seed;
  report.trials = trials;
  report.all_pass = true;
  for (const SuiteEntry& e : kSuites) {
    Sampler rng(seed ^ fnv1a64(e.name));
    report.suites.push_back(e.fn(rng, trials, tol));
    report.all_pass = report.all_pass && report.suites.back().pass;
  }
  return report;
}

}  // namespace degenspace
