#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace twolevel {

// GMP keeps mpq_class canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;
using IntMatrix = std::vector<IntVector>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws Error(BadInput) on anything else or q == 0.
Rational parse_rational(std::string_view text);

Integer gcd_of(const IntVector& v);
Integer lcm_of_denominators(const RatVector& v);

/// Scales a rational vector by a positive factor so that it becomes a primitive
/// integer vector (gcd 1). The zero vector maps to the zero vector.
IntVector primitive_integer(const RatVector& v);

RatVector to_rational(const IntVector& v);
RatVector to_rational(const std::vector<int>& v);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

/// Lexicographic comparison; GMP types have no operator<=> so std::vector's
/// default ordering is not available under C++20 rules.
bool lex_less(const RatVector& a, const RatVector& b);
bool lex_less(const IntVector& a, const IntVector& b);

struct RatVectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const { return lex_less(a, b); }
};
struct IntVectorLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

}  // namespace twolevel
