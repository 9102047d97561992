#include "degenspace/projective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degenspace {

namespace {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Gamma2 = std::array<std::array<std::array<double, 2>, 2>, 2>;
using Riem2 = std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>;

// Index 0 <-> coordinate x1, index 1 <-> coordinate x2.
Mat2 metric_matrix(const ConnectionData& k) {
  Mat2 g{};
  g[0][0] = k.g11;
  return g;
}

// G[i][j][k] = Gamma^i_{jk}.
Gamma2 gamma_tensor(const ConnectionData& k) {
  Gamma2 g{};
  g[0][0][0] = k.gamma1_11;
  g[1][0][1] = k.gamma2_12;
  g[1][1][0] = k.gamma2_21;
  g[1][0][0] = k.gamma2_11;
  return g;
}

// R[i][j][k][l] = R^i_{jkl}; antisymmetric in (k, l).
Riem2 curvature_tensor(const CurvatureData& c) {
  Riem2 r{};
  r[1][0][1][0] = c.r2_121;
  r[1][0][0][1] = -c.r2_121;
  return r;
}

ChartPoint shifted(const ChartPoint& c, int axis, double d) {
  return axis == 0 ? ChartPoint{c.x1 + d, c.x2} : ChartPoint{c.x1, c.x2 + d};
}

double zero_clean(double v) { return v == 0.0 ? 0.0 : v; }

double metric_gradient_impl(const ChartPoint& c,
                            const std::function<ConnectionData(const ChartPoint&)>& connection,
                            double h) {
  const ConnectionData at_c = connection(c);
  const Gamma2 G = gamma_tensor(at_c);
  const Mat2 g = metric_matrix(at_c);
  double worst = 0.0;
  for (int k = 0; k < 2; ++k) {
    const Mat2 gp = metric_matrix(connection(shifted(c, k, h)));
    const Mat2 gm = metric_matrix(connection(shifted(c, k, -h)));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double nabla = (gp[i][j] - gm[i][j]) / (2.0 * h);
        for (int m = 0; m < 2; ++m) {
          nabla -= G[m][k][i] * g[m][j];
          nabla -= G[m][k][j] * g[i][m];
        }
        worst = std::max(worst, std::abs(nabla));
      }
    }
  }
  return worst;
}

}  // namespace

HomogeneousPoint HomogeneousPoint::normalized() const {
  const std::array<double, 4> v{y0, y1, y2, y3};
  int imax = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  }
  if (v[imax] == 0.0) {
    throw std::invalid_argument("homogeneous point must have a nonzero coordinate");
  }
  const double s = v[imax];
  return {zero_clean(y0 / s), zero_clean(y1 / s), zero_clean(y2 / s), zero_clean(y3 / s)};
}

double projective_distance(const HomogeneousPoint& p, const HomogeneousPoint& q) {
  const HomogeneousPoint a = p.normalized();
  const HomogeneousPoint b = q.normalized();
  return std::max({std::abs(a.y0 - b.y0), std::abs(a.y1 - b.y1),
                   std::abs(a.y2 - b.y2), std::abs(a.y3 - b.y3)});
}

double quadric_form(const HomogeneousPoint& p) {
  return p.y0 * p.y0 - p.y1 * p.y1 - p.y3 * p.y3;
}

double quadric_bilinear(const HomogeneousPoint& p, const HomogeneousPoint& q) {
  return p.y0 * q.y0 - p.y1 * q.y1 - p.y3 * q.y3;
}

bool on_quadric(const HomogeneousPoint& p, double tol) {
  const double scale = std::max({p.y0 * p.y0, p.y1 * p.y1, p.y2 * p.y2, p.y3 * p.y3, 1.0});
  return std::abs(quadric_form(p)) <= tol * scale;
}

HomogeneousPoint proj_stereo(const ChartPoint& c) {
  const double s = c.x1 * c.x1;
  return {-1.0 - s, 2.0 * c.x1, 2.0 * c.x2, 1.0 - s};
}

HomogeneousPoint normalization_point(const ChartPoint& c) {
  const double s = c.x1 * c.x1;
  return {0.0, 2.0 * c.x1, 2.0 * c.x2, 1.0 - s};
}

HomogeneousPoint weierstrass(const ChartPoint& c) {
  const double s = 1.0 + c.x1 * c.x1;
  return {0.0, 2.0 * c.x1 / s, 2.0 * c.x2 / s, (1.0 - c.x1 * c.x1) / s};
}

double metric_g11(double x1) {
  const double s = 1.0 + x1 * x1;
  return 4.0 / (s * s);
}

ConnectionData christoffel(const ChartPoint& c) {
  const double s = 1.0 + c.x1 * c.x1;
  const double g = -2.0 * c.x1 / s;
  return {metric_g11(c.x1), g, g, g, 2.0 * c.x2 / s};
}

CurvatureData curvature(const ChartPoint& c) {
  const double s = 1.0 + c.x1 * c.x1;
  const double r = 4.0 / (s * s);
  return {r, r};
}

CovariantResiduals covariant_residuals(const ChartPoint& c, double h) {
  CovariantResiduals out;
  out.max_grad_metric = metric_gradient_impl(
      c, [](const ChartPoint& p) { return christoffel(p); }, h);

  const Gamma2 G = gamma_tensor(christoffel(c));
  const Riem2 R = curvature_tensor(curvature(c));
  for (int m = 0; m < 2; ++m) {
    const Riem2 Rp = curvature_tensor(curvature(shifted(c, m, h)));
    const Riem2 Rm = curvature_tensor(curvature(shifted(c, m, -h)));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          for (int l = 0; l < 2; ++l) {
            double nabla = (Rp[i][j][k][l] - Rm[i][j][k][l]) / (2.0 * h);
            for (int p = 0; p < 2; ++p) {
              nabla += G[i][m][p] * R[p][j][k][l];
              nabla -= G[p][m][j] * R[i][p][k][l];
              nabla -= G[p][m][k] * R[i][j][p][l];
              nabla -= G[p][m][l] * R[i][j][k][p];
            }
            out.max_grad_curvature = std::max(out.max_grad_curvature, std::abs(nabla));
          }
        }
      }
    }
  }
  return out;
}

double max_metric_gradient(const ChartPoint& c,
                           const std::function<ConnectionData(const ChartPoint&)>& connection,
                           double h) {
  return metric_gradient_impl(c, connection, h);
}

std::array<double, 4> killing_vector(int i, const HomogeneousPoint& p) {
  switch (i) {
    case 1: return {p.y1, p.y0, 0.0, 0.0};
    case 2: return {p.y3, 0.0, 0.0, p.y0};
    case 3: return {0.0, -p.y3, 0.0, p.y1};
    default: throw std::invalid_argument("killing_vector index must be 1, 2, or 3");
  }
}

GeodesicJet geodesic_closed_form_jet(const GeodesicParams& p, double t, double pole_guard) {
  if (p.omega == 0.0) {
    throw std::invalid_argument("geodesic parameter omega must be nonzero");
  }
  const double theta = p.omega * t + p.phase;
  const double c = std::cos(theta);
  if (std::abs(c) <= pole_guard) {
    throw DomainError(ErrorCode::AtPole, "tan singularity at omega t + phase = pi/2 + k pi");
  }
  const double tn = std::tan(theta);
  const double sec2 = 1.0 / (c * c);
  const double w = p.omega;
  const double g = p.a * std::cos(2.0 * w * t) + p.b * std::sin(2.0 * w * t);
  const double gd = 2.0 * w * (-p.a * std::sin(2.0 * w * t) + p.b * std::cos(2.0 * w * t));
  const double gdd = -4.0 * w * w * g;

  GeodesicJet jet;
  jet.x1 = tn;
  jet.v1 = w * sec2;
  jet.acc1 = 2.0 * w * w * sec2 * tn;
  jet.x2 = g * sec2;
  jet.v2 = sec2 * (gd + 2.0 * w * g * tn);
  jet.acc2 = sec2 * (gdd + 4.0 * w * gd * tn + 4.0 * w * w * g * tn * tn + 2.0 * w * w * g * sec2);
  return jet;
}

ChartPoint geodesic_closed_form(const GeodesicParams& p, double t, double pole_guard) {
  const GeodesicJet jet = geodesic_closed_form_jet(p, t, pole_guard);
  return {jet.x1, jet.x2};
}

GeodesicCoeffs GeodesicCoeffs::graph(double A, double B) {
  GeodesicCoeffs g;
  g.form = Form::graph;
  g.A = A;
  g.B = B;
  return g;
}

GeodesicCoeffs GeodesicCoeffs::vertical(double x1) {
  GeodesicCoeffs g;
  g.form = Form::vertical;
  g.x1 = x1;
  return g;
}

GeodesicCoeffs geodesic_through(const ChartPoint& p, const ChartPoint& q, double tol) {
  if (p == q) {
    throw DomainError(ErrorCode::SamePoint, "two distinct points are required");
  }
  if (p.x1 == q.x1) {
    return GeodesicCoeffs::vertical(p.x1);
  }
  const double cross = p.x1 * q.x1 + 1.0;
  if (std::abs(cross) <= tol) {
    throw DomainError(ErrorCode::ConjugateAbscissas,
                      "x1p * x1q = -1: no graph-form geodesic through the pair");
  }
  // Solve A(x1^2 - 1) + B x1 = x2 at both points; the determinant factors
  // as (x1p - x1q)(x1p x1q + 1).
  const double det = (p.x1 - q.x1) * cross;
  const double A = (p.x2 * q.x1 - p.x1 * q.x2) / det;
  const double B = ((p.x1 * p.x1 - 1.0) * q.x2 - (q.x1 * q.x1 - 1.0) * p.x2) / det;
  return GeodesicCoeffs::graph(zero_clean(A), zero_clean(B));
}

GeodesicState geodesic_ode_rhs(const GeodesicState& s) {
  const double x1 = s[0], x2 = s[1], v1 = s[2], v2 = s[3];
  const double f = 1.0 + x1 * x1;
  return {v1, v2, 2.0 * x1 * v1 * v1 / f, (-2.0 * x2 * v1 * v1 + 4.0 * x1 * v1 * v2) / f};
}

double projective_fiber_image(double v, double x1) {
  return -0.5 * v * (x1 + 1.0) * (x1 + 1.0);
}

}  // namespace degenspace
