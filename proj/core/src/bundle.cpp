#include "degenspace/bundle.hpp"

#include <cmath>
#include <stdexcept>

namespace degenspace {

double project_base(const Element& x, double eps) {
  const double d = x.x0 + x.x1;
  if (std::abs(d) <= eps) {
    throw DomainError(ErrorCode::OnNullPlane, "x0 + x1 vanishes; no base coordinate");
  }
  return x.x2 / d;
}

bool fiber_contains(double u, const Element& x, double tol) {
  return std::abs(u * (x.x0 + x.x1) - x.x2) <= tol * (1.0 + std::abs(x.x2));
}

AdaptedCoords to_adapted(const Element& x, double eps) {
  const double n = norm_sq(x);
  if (std::abs(n) <= eps) {
    throw DomainError(ErrorCode::NullNorm, "adapted chart undefined on the null planes");
  }
  AdaptedCoords c;
  if (n > 0.0) {
    c.chart = Chart::timelike;
    c.lambda = std::copysign(std::sqrt(n), x.x0);
    c.phi = std::atanh(x.x1 / x.x0);
  } else {
    c.chart = Chart::spacelike;
    c.lambda = std::copysign(std::sqrt(-n), x.x1);
    c.phi = std::atanh(x.x0 / x.x1);
  }
  c.u = x.x2 / (c.lambda * std::exp(c.phi));
  return c;
}

Element from_adapted(const AdaptedCoords& c) {
  if (c.lambda == 0.0) {
    throw std::invalid_argument("AdaptedCoords requires lambda != 0");
  }
  const double ch = std::cosh(c.phi);
  const double sh = std::sinh(c.phi);
  const double x2 = c.u * c.lambda * std::exp(c.phi);
  if (c.chart == Chart::timelike) {
    return {c.lambda * ch, c.lambda * sh, x2};
  }
  return {c.lambda * sh, c.lambda * ch, x2};
}

AdaptedCoords structure_action(double rho, double psi, const AdaptedCoords& c) {
  if (rho == 0.0) {
    throw std::invalid_argument("structure group elements have rho != 0");
  }
  return {c.chart, c.u, c.lambda * rho, c.phi + psi};
}

Element sphere_embed(const SpherePoint& p) {
  if (p.eps != 1 && p.eps != -1) {
    throw std::invalid_argument("SpherePoint component eps must be ±1");
  }
  const double e = static_cast<double>(p.eps);
  return {e * std::cosh(p.phi), e * std::sinh(p.phi), e * p.u * std::exp(p.phi)};
}

SpherePoint sphere_project(const Element& x, double tol) {
  if (std::abs(norm_sq(x) - 1.0) > tol) {
    throw DomainError(ErrorCode::NotOnSphere, "x0^2 - x1^2 != 1 within tolerance");
  }
  SpherePoint p;
  p.eps = x.x0 > 0.0 ? 1 : -1;
  p.phi = std::atanh(x.x1 / x.x0);
  p.u = x.x2 / (x.x0 + x.x1);  // x0 + x1 = eps * e^phi, never zero on the sphere
  return p;
}

Element map_between_spheres(const Element& x, double tol) {
  if (std::abs(std::abs(norm_sq(x)) - 1.0) > tol) {
    throw DomainError(ErrorCode::NotOnSphere, "|norm_sq(x)| != 1 within tolerance");
  }
  return mul(Element::e1(), x);
}

std::vector<Element> sample_geodesic(double a0, double b0, double a1, double b1,
                                     const std::function<double(double)>& f,
                                     std::span<const double> ts) {
  std::vector<Element> out;
  out.reserve(ts.size());
  for (const double t : ts) {
    out.emplace_back(a0 * t + b0, a1 * t + b1, f(t));
  }
  return out;
}

}  // namespace degenspace
