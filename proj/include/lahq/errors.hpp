#pragma once

#include <stdexcept>
#include <string>

namespace lahq {

// Base for every error raised by the library. Verification failures are not
// errors; they are reported as data by the verify module.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LAHQ_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

LAHQ_DEFINE_ERROR(DivisionByZero);
LAHQ_DEFINE_ERROR(NonExactDivision);
LAHQ_DEFINE_ERROR(NonInvertibleConstantTerm);
LAHQ_DEFINE_ERROR(InvalidOrder);
LAHQ_DEFINE_ERROR(NegativeArgument);
LAHQ_DEFINE_ERROR(ScaleExceeded);
LAHQ_DEFINE_ERROR(InvalidAlpha);
LAHQ_DEFINE_ERROR(InvalidRange);
LAHQ_DEFINE_ERROR(DuplicateBValues);
LAHQ_DEFINE_ERROR(NoConvergence);
LAHQ_DEFINE_ERROR(UnknownIdentity);
LAHQ_DEFINE_ERROR(ParamsOutOfDomain);

#undef LAHQ_DEFINE_ERROR

}  // namespace lahq
