#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tnnlag {

using Rational = mpq_class;

// Accepts "p", "p/q" and "-p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace tnnlag
