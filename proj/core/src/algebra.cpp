#include "degenspace/algebra.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace degenspace {

Element::Element(double s, double c1, double c2) : x0(s), x1(c1), x2(c2) {
  if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2))) {
    throw std::invalid_argument("Element components must be finite");
  }
}

Element mul(const Element& x, const Element& y) {
  // Expansion of the multiplication table; the e2 coefficient picks up the
  // sign flip from e2*e1 = -e2.
  return {x.x0 * y.x0 + x.x1 * y.x1,
          x.x0 * y.x1 + x.x1 * y.x0,
          (x.x0 + x.x1) * y.x2 + (y.x0 - y.x1) * x.x2};
}

Element conj(const Element& x) { return {x.x0, -x.x1, -x.x2}; }

double bilinear(const Element& x, const Element& y) {
  // Scalar part of (x*conj(y) + y*conj(x)) / 2; the e1 and e2 parts vanish
  // identically.
  return x.x0 * y.x0 - x.x1 * y.x1;
}

double norm_sq(const Element& x) { return bilinear(x, x); }

Element inverse(const Element& x, double eps_inv) {
  const double n = norm_sq(x);
  if (std::abs(n) <= eps_inv) {
    throw DomainError(ErrorCode::NotInvertible, "element is not invertible (norm_sq zero within tolerance)");
  }
  return {x.x0 / n, -x.x1 / n, -x.x2 / n};
}

Element operator+(const Element& x, const Element& y) {
  return {x.x0 + y.x0, x.x1 + y.x1, x.x2 + y.x2};
}

Element operator-(const Element& x, const Element& y) {
  return {x.x0 - y.x0, x.x1 - y.x1, x.x2 - y.x2};
}

Element operator-(const Element& x) { return {-x.x0, -x.x1, -x.x2}; }

Element operator*(const Element& x, const Element& y) { return mul(x, y); }

Element operator*(double s, const Element& x) { return {s * x.x0, s * x.x1, s * x.x2}; }

Element operator*(const Element& x, double s) { return s * x; }

TriMatrix operator*(const TriMatrix& m, const TriMatrix& n) {
  return {m.a * n.a, m.b * n.b, m.a * n.c + m.c * n.b};
}

TriMatrix to_matrix(const Element& x) {
  return {x.x0 + x.x1, x.x0 - x.x1, x.x2};
}

Element from_matrix(const TriMatrix& m) {
  return {(m.a + m.b) / 2.0, (m.a - m.b) / 2.0, m.c};
}

std::ostream& operator<<(std::ostream& os, const Element& x) {
  return os << "(" << x.x0 << ", " << x.x1 << ", " << x.x2 << ")";
}

}  // namespace degenspace
