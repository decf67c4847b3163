#include "canlift/rational.hpp"

namespace canlift {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    fail(ErrorCode::ParseError, "bad rational: " + s);
  }
}

}  // namespace canlift
