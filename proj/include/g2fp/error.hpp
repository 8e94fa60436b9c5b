#pragma once

#include <stdexcept>

namespace g2fp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define G2FP_DEFINE_ERROR(Name)      \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

G2FP_DEFINE_ERROR(MalformedScalar);
G2FP_DEFINE_ERROR(MalformedData);
G2FP_DEFINE_ERROR(InvalidGenerator);
G2FP_DEFINE_ERROR(IndexOutOfRange);
G2FP_DEFINE_ERROR(NotAManifold);
G2FP_DEFINE_ERROR(DegenerateGamma);
G2FP_DEFINE_ERROR(InconsistentExpansion);
G2FP_DEFINE_ERROR(IntegralityViolation);
G2FP_DEFINE_ERROR(InvalidRingDimension);
G2FP_DEFINE_ERROR(MismatchedTables);
G2FP_DEFINE_ERROR(RingMismatch);
G2FP_DEFINE_ERROR(DegenerateProfile);
G2FP_DEFINE_ERROR(InconsistentProfile);
G2FP_DEFINE_ERROR(InvalidProfile);

#undef G2FP_DEFINE_ERROR

}  // namespace g2fp
