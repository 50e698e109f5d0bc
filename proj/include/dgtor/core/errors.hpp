#pragma once

#include <stdexcept>
#include <string>

namespace dgtor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DGTOR_DECLARE_ERROR(Name)         \
  class Name : public Error {             \
   public:                                \
    explicit Name(const std::string& msg) \
        : Error(#Name ": " + msg) {}      \
  }

DGTOR_DECLARE_ERROR(CompositionNotZero);
DGTOR_DECLARE_ERROR(NotACycle);
DGTOR_DECLARE_ERROR(CutoffMismatch);
DGTOR_DECLARE_ERROR(CutoffTooSmall);
DGTOR_DECLARE_ERROR(CutoffTooLarge);
DGTOR_DECLARE_ERROR(DegreeMismatch);
DGTOR_DECLARE_ERROR(NotAChainMap);
DGTOR_DECLARE_ERROR(NotOneConnected);
DGTOR_DECLARE_ERROR(NotCocomplete);
DGTOR_DECLARE_ERROR(InvalidTwistingCochain);
DGTOR_DECLARE_ERROR(InvalidHomotopy);
DGTOR_DECLARE_ERROR(EndpointMismatch);
DGTOR_DECLARE_ERROR(SourceNotCobar);
DGTOR_DECLARE_ERROR(NotCommutative);
DGTOR_DECLARE_ERROR(OddGeneratorInBase);
DGTOR_DECLARE_ERROR(SquaresDoNotCommute);
DGTOR_DECLARE_ERROR(ParseError);
DGTOR_DECLARE_ERROR(ValidationError);
DGTOR_DECLARE_ERROR(ResourceLimit);

#undef DGTOR_DECLARE_ERROR

}  // namespace dgtor
