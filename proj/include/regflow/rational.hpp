#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "regflow/errors.hpp"

namespace regflow {

// Exact arithmetic only. The whole library is built on these two types;
// no floating point appears anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVector = std::vector<Rational>;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Canonical text form: "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& q);

/// Parse "p", "-p", or "p/q". Throws ValidationError on anything else
/// (including a zero denominator).
Rational parse_rational(const std::string& token);

}  // namespace regflow
