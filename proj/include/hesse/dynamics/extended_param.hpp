#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <variant>

#include "hesse/algebra/bigrational.hpp"
#include "hesse/algebra/errors.hpp"

namespace hesse {

struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) { return true; }
};

/// A point of R u {inf}: exact rational, floating real, or infinity.
class ExtendedParam {
 public:
  ExtendedParam() : v_(BigRational(0)) {}
  ExtendedParam(Infinity) : v_(Infinity{}) {}  // NOLINT(google-explicit-constructor)
  ExtendedParam(const BigRational& q) : v_(q) {}  // NOLINT(google-explicit-constructor)
  ExtendedParam(int q) : v_(BigRational(q)) {}  // NOLINT(google-explicit-constructor)
  ExtendedParam(double x) : v_(x) {  // NOLINT(google-explicit-constructor)
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "finite parameter expected; use Infinity");
  }

  static ExtendedParam infinity() { return ExtendedParam(Infinity{}); }

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  bool is_rational() const { return std::holds_alternative<BigRational>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }

  const BigRational& rational() const { return std::get<BigRational>(v_); }
  double real() const {
    if (is_infinite()) throw Error(ErrorKind::InvalidArgument, "infinite parameter has no real value");
    return is_rational() ? rational().get_d() : std::get<double>(v_);
  }

  std::string to_string() const {
    if (is_infinite()) return "∞";
    if (is_rational()) return hesse::to_string(rational());
    std::ostringstream os;
    os.precision(17);
    os << std::get<double>(v_);
    return os.str();
  }

  friend bool operator==(const ExtendedParam& a, const ExtendedParam& b) { return a.v_ == b.v_; }

 private:
  std::variant<Infinity, BigRational, double> v_;
};

}  // namespace hesse
