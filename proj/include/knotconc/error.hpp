#pragma once

#include <stdexcept>
#include <string>

namespace knotconc {

/// Exit-code families of the command-line tool.
enum class ErrorClass { input = 2, hypothesis = 3, internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(std::string kind, ErrorClass cls, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)), class_(cls) {}

  const std::string& kind() const noexcept { return kind_; }
  ErrorClass error_class() const noexcept { return class_; }

 private:
  std::string kind_;
  ErrorClass class_;
};

#define KNOTCONC_DEFINE_ERROR(Name, Cls)                                   \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(#Name, Cls, what) {}    \
  };

KNOTCONC_DEFINE_ERROR(ParseError, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(ValidationError, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(UnknownKnot, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(BadFlag, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(MultiComponent, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(NonClosed, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(ZeroPolynomial, ErrorClass::input)
KNOTCONC_DEFINE_ERROR(OmegaIsOne, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(SingularAtOmega, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(MissingSeifert, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(MissingAlexander, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(MissingTau, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(HypothesisNotMet, ErrorClass::hypothesis)
KNOTCONC_DEFINE_ERROR(InternalError, ErrorClass::internal)

#undef KNOTCONC_DEFINE_ERROR

/// Raised when a tracked homology relation fails; carries the residual
/// element in the canonical coordinates of the group.
class ClassMismatch : public Error {
 public:
  ClassMismatch(const std::string& what, std::string residual)
      : Error("ClassMismatch", ErrorClass::hypothesis, what),
        residual_(std::move(residual)) {}
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

}  // namespace knotconc
