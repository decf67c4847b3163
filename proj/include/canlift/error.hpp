#ifndef CANLIFT_ERROR_HPP
#define CANLIFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace canlift {

// Error codes are shared with the C API (see canlift.h).
enum class ErrorCode : int {
  Ok = 0,
  InvalidType = 1,
  IndexOutOfRange = 2,
  NotSameElement = 3,
  PathSearchExhausted = 4,
  NotDominant = 5,
  NotReduced = 6,
  LengthMismatch = 7,
  NonPositiveParameter = 8,
  ZeroTorusParameter = 9,
  NotInG0 = 10,
  UnsupportedRank2Type = 11,
  ParseError = 12,
  SubtractionForbidden = 13,
  NonPositivePoint = 14,
  ArityMismatch = 15,
  SizeBound = 16,
  ResidueNotHighest = 17,
  NotUnique = 18,
  Usage = 19,
  VerificationFailed = 20,
  Internal = 21,
  UnsupportedType = 22,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace canlift

#endif
