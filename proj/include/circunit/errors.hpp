#pragma once

#include <stdexcept>
#include <string>

namespace circunit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CIRCUNIT_ERROR(Name)                  \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

CIRCUNIT_ERROR(InvalidLevel);
CIRCUNIT_ERROR(LevelMismatch);
CIRCUNIT_ERROR(LevelTooSmall);
CIRCUNIT_ERROR(EvenGaloisIndex);
CIRCUNIT_ERROR(InternalInconsistency);
CIRCUNIT_ERROR(NotAUnit);
CIRCUNIT_ERROR(NotReal);
CIRCUNIT_ERROR(NotIntegral);
CIRCUNIT_ERROR(IndexOutOfRange);
CIRCUNIT_ERROR(IndexNotInPartition);
CIRCUNIT_ERROR(NonRealWord);
CIRCUNIT_ERROR(DisagreementError);
CIRCUNIT_ERROR(ParseError);

#undef CIRCUNIT_ERROR

}  // namespace circunit
