#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace glw {

// Exact arithmetic everywhere: integers for weight polynomials, rationals for
// the enveloping-algebra layer and the k!-divided deframing sum.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an internal invariant is violated (inconsistent linear solve,
// non-integer coefficient where an integer is guaranteed, broken pairing).
// The CLI maps this to its "internal invariant breach" exit code.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int rat_to_int(const Rat& r, const char* context) {
  if (boost::multiprecision::denominator(r) != 1)
    throw internal_error(std::string(context) + ": value " + r.str() + " is not an integer");
  return boost::multiprecision::numerator(r);
}

}  // namespace glw
