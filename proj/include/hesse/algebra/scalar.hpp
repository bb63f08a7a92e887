#pragma once

#include <complex>

#include "hesse/algebra/bigrational.hpp"

namespace hesse {

/// Conversion between coefficient types. Specialise for types that have no
/// implicit conversion (GMP rationals, the quadratic field).
template <class To, class From>
struct ScalarCast {
  static To apply(const From& v) { return To(v); }
};

template <>
struct ScalarCast<double, BigRational> {
  static double apply(const BigRational& v) { return v.get_d(); }
};

template <>
struct ScalarCast<std::complex<double>, BigRational> {
  static std::complex<double> apply(const BigRational& v) { return {v.get_d(), 0.0}; }
};

template <class To, class From>
To scalar_cast(const From& v) {
  return ScalarCast<To, From>::apply(v);
}

}  // namespace hesse
