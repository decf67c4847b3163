#ifndef CANLIFT_RATIONAL_HPP
#define CANLIFT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "canlift/error.hpp"

namespace canlift {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& q) {
  return q.str();
}

// Accepts "p", "p/q" and an optional leading '-'.
Rat rat_from_string(const std::string& s);

using RatVec = std::vector<Rat>;

}  // namespace canlift

#endif
