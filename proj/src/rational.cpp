#include "sasaki/rational.hpp"

namespace sasaki {

std::string to_string(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += "/";
    s += den(q).str();
  }
  return s;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d <= 0) throw std::invalid_argument("denominator must be positive");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

Rational pow2_inverse(unsigned k) {
  Int d = Int(1) << k;
  return Rational(Int(1), d);
}

}  // namespace sasaki
