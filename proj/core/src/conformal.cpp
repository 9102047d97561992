#include "degenspace/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace degenspace {

namespace {

void require_finite_point(const PlanePoint& p) {
  if (p.is_ideal()) {
    throw std::invalid_argument("operation needs a finite plane point");
  }
}

}  // namespace

PlanePoint PlanePoint::finite(double x, double y) {
  if (!(std::isfinite(x) && std::isfinite(y))) {
    throw std::invalid_argument("finite plane point must have finite coordinates");
  }
  PlanePoint p;
  p.kind = Kind::finite;
  p.x = x;
  p.y = y;
  return p;
}

PlanePoint PlanePoint::ideal(std::optional<double> line) {
  PlanePoint p;
  p.kind = Kind::ideal;
  p.line = line;
  return p;
}

PlanePoint stereo_to_plane(const Element& s, double tol) {
  if (std::abs(norm_sq(s) - 1.0) > tol) {
    throw DomainError(ErrorCode::NotOnSphere, "stereographic map is defined on the unit sphere");
  }
  const double d = 1.0 - s.x0;
  if (std::abs(d) <= 1e-12) {
    // The whole line x0 = 1, x1 = 0 goes to the ideal marker.
    return PlanePoint::ideal(s.x2);
  }
  return PlanePoint::finite(s.x1 / d, s.x2 / d);
}

Element stereo_from_plane(const PlanePoint& p, double eps) {
  require_finite_point(p);
  const double d = 1.0 - p.x * p.x;
  if (std::abs(d) <= eps) {
    throw DomainError(ErrorCode::OnBranchLine, "the lines x = ±1 have no preimage");
  }
  return {-(1.0 + p.x * p.x) / d, 2.0 * p.x / d, 2.0 * p.y / d};
}

SpherePoint adapted_from_plane(const PlanePoint& p, double eps) {
  require_finite_point(p);
  if (std::abs(p.x * p.x - 1.0) <= eps) {
    throw DomainError(ErrorCode::OnBranchLine, "the lines x = ±1 have no preimage");
  }
  const double ratio = (p.x - 1.0) / (p.x + 1.0);
  SpherePoint s;
  s.eps = ratio > 0.0 ? 1 : -1;
  const double arg = static_cast<double>(s.eps) * ratio;
  if (!(arg > 0.0)) {
    throw DomainError(ErrorCode::BranchDomain, "log argument not positive for either component");
  }
  s.phi = std::log(arg);
  s.u = -2.0 * p.y / ((1.0 - p.x) * (1.0 - p.x));
  return s;
}

double bundle_map_p(const PlanePoint& p, double eps) {
  require_finite_point(p);
  const double d = 1.0 - p.x;
  if (std::abs(d) <= eps) {
    throw DomainError(ErrorCode::OnBranchLine, "x = 1 has no base image");
  }
  return -2.0 * p.y / (d * d);
}

double conformal_factor(double x, double eps) {
  const double d = x * x - 1.0;
  if (std::abs(d) <= eps) {
    throw DomainError(ErrorCode::OnBranchLine, "conformal factor diverges on x = ±1");
  }
  return 4.0 / (d * d);
}

double fiber_image(double c, double x) {
  return -0.5 * c * (x - 1.0) * (x - 1.0);
}

}  // namespace degenspace
