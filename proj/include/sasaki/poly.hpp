#pragma once

#include "sasaki/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
  explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static PolyQ constant(const Rational& a) { return PolyQ{a}; }
  // x - a
  static PolyQ linear_root(const Rational& a) { return PolyQ{-a, Rational(1)}; }
  static PolyQ monomial(int degree, const Rational& a);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;  // 0 beyond the stored range
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign_of(eval(x)); }

  PolyQ derivative() const;

  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator-() const;
  PolyQ scaled(const Rational& s) const;
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  // Quotient and remainder with deg(rem) < deg(divisor).
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;
  // Division known to be exact; throws std::logic_error on a nonzero remainder.
  PolyQ exact_div(const PolyQ& divisor) const;

  // Monic gcd over Q.
  static PolyQ gcd(PolyQ a, PolyQ b);

  // p / gcd(p, p'): same roots, all simple.
  PolyQ squarefree_part() const;

  // Integer coefficients, content 1, positive leading coefficient.
  PolyQ primitive_integer() const;

  // 1 + max |a_i / a_n|; every real root lies in (-bound, bound).
  Rational cauchy_root_bound() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

}  // namespace sasaki
