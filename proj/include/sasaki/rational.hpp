#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sasaki {

using Int = boost::multiprecision::cpp_int;

// Always reduced, denominator > 0, canonical zero 0/1 (guaranteed by cpp_rational).
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

// cpp_rational's two-argument constructor rejects negative denominators.
inline Rational rat(long long n, long long d = 1) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

// Serialized as "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Positive power of two 2^k, used for isolation widths ("1/2^k" strings).
Rational pow2_inverse(unsigned k);

}  // namespace sasaki
