#include "twolevel/rational.hpp"

#include <algorithm>
#include <cctype>

#include "twolevel/error.hpp"

namespace twolevel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DimensionGuardExceeded: return "DimensionGuardExceeded";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonInjectiveOnHull: return "NonInjectiveOnHull";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::SharedElementInvalid: return "SharedElementInvalid";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonBinaryIntegerPoints: return "NonBinaryIntegerPoints";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorKind::BadInput, "not a rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) fail(ErrorKind::BadInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

IntVector primitive_integer(const RatVector& v) {
  const Integer l = lcm_of_denominators(v);
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer z = x.get_num() * (l / x.get_den());
    out.push_back(std::move(z));
  }
  const Integer g = gcd_of(out);
  if (g > 1)
    for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

RatVector to_rational(const std::vector<int>& v) {
  RatVector out;
  out.reserve(v.size());
  for (int z : v) out.emplace_back(z);
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += Rational(a[i]) * b[i];
  return s;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace twolevel
