#pragma once

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"
#include "hesse/dynamics/extended_param.hpp"

namespace hesse {

/// Discriminant of 2x^3 + c x^2 + 1, which is -108 - 4c^3.
inline BigRational hesse_form_discriminant(const BigRational& c) { return BigRational(-108) - 4 * c * c * c; }
inline double hesse_form_discriminant(double c) { return -108.0 - 4.0 * c * c * c; }

/// Number of connected components of the real curve x^3+y^3+z^3+cxyz = 0:
/// two when 2x^3 + c x^2 + 1 has three real roots (positive discriminant),
/// one when it has a single real root.
inline int component_count_hesse_form(const ExtendedParam& c) {
  if (c.is_infinite()) throw Error(ErrorKind::DegenerateCurve, "c = infinity gives the triangle xyz = 0");
  int s = 0;
  if (c.is_rational()) {
    s = sgn(hesse_form_discriminant(c.rational()));
  } else {
    const double d = hesse_form_discriminant(c.real());
    s = d > 0 ? 1 : (d < 0 ? -1 : 0);
  }
  if (s == 0) throw Error(ErrorKind::DegenerateCurve, "c = -3 gives a degenerate curve");
  return s > 0 ? 2 : 1;
}

}  // namespace hesse
