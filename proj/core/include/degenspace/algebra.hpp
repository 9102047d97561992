#pragma once

// Arithmetic of the 3-dimensional unital associative algebra with basis
// {1, e1, e2} and multiplication table
//
//   e1*e1 = 1,   e2*e2 = 0,   e1*e2 = -e2*e1 = e2,
//
// together with its conjugation, the degenerate scalar product
// (x, y) = x0*y0 - x1*y1 it induces, and the faithful representation by
// 2x2 upper-triangular matrices. The subalgebra spanned by {1, e1} is the
// split-complex (double) numbers, the one spanned by {1, e2} the dual
// numbers.

#include <iosfwd>

#include "degenspace/errors.hpp"

namespace degenspace {

struct Element {
  double x0 = 0.0;  // scalar part
  double x1 = 0.0;  // e1 coefficient
  double x2 = 0.0;  // e2 coefficient

  Element() = default;
  Element(double s, double c1, double c2);  // rejects non-finite components

  static Element one() { return {1.0, 0.0, 0.0}; }
  static Element e1() { return {0.0, 1.0, 0.0}; }
  static Element e2() { return {0.0, 0.0, 1.0}; }

  friend bool operator==(const Element&, const Element&) = default;
};

Element mul(const Element& x, const Element& y);
Element conj(const Element& x);
double bilinear(const Element& x, const Element& y);
double norm_sq(const Element& x);

// conj(x) / norm_sq(x). Throws NotInvertible when |norm_sq(x)| <= eps_inv,
// i.e. x lies on one of the two transversal null 2-planes x0 = ±x1.
Element inverse(const Element& x, double eps_inv = 1e-12);

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);
Element operator*(double s, const Element& x);
Element operator*(const Element& x, double s);

// [[a, c], [0, b]]; closed under multiplication.
struct TriMatrix {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;
};

TriMatrix operator*(const TriMatrix& m, const TriMatrix& n);

// x -> x0*I + x1*diag(1,-1) + x2*E12, i.e. a = x0+x1, b = x0-x1, c = x2.
// Bijective and multiplication-preserving.
TriMatrix to_matrix(const Element& x);
Element from_matrix(const TriMatrix& m);

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace degenspace
