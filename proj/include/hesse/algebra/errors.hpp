#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hesse {

enum class ErrorKind {
  ZeroPolynomial,
  DegenerateLeadingCoefficient,
  IdenticallyZeroHessian,
  NotDegenerate,
  RankZero,
  NonRealLines,
  LineIsComponent,
  DegenerateCurve,
  SingularInput,
  PoleAtZero,
  NotOnHesseDerivative,
  BudgetExceeded,
  NotEven,
  SingularParameter,
  DegenerateParameter,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorKind::IdenticallyZeroHessian: return "IdenticallyZeroHessian";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::NonRealLines: return "NonRealLines";
    case ErrorKind::LineIsComponent: return "LineIsComponent";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::NotOnHesseDerivative: return "NotOnHesseDerivative";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::SingularParameter: return "SingularParameter";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hesse
