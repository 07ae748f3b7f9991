#include "sasaki/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sasaki {

namespace {
const Rational kZero(0);
}

void PolyQ::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::monomial(int degree, const Rational& a) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = a;
  return PolyQ(std::move(c));
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return PolyQ{};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(d));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = -x;
  return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return PolyQ{};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyQ(std::move(r));
}

PolyQ PolyQ::scaled(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= s;
  return PolyQ(std::move(r));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  PolyQ rem = *this;
  if (rem.degree() < divisor.degree()) return {PolyQ{}, rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational f = rem.leading() / lead;
    q[static_cast<size_t>(shift)] = f;
    rem = rem - divisor * PolyQ::monomial(shift, f);
  }
  return {PolyQ(std::move(q)), rem};
}

PolyQ PolyQ::exact_div(const PolyQ& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

PolyQ PolyQ::squarefree_part() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no square-free part");
  if (degree() == 0) return PolyQ::constant(Rational(1));
  PolyQ g = gcd(*this, derivative());
  return exact_div(g);
}

PolyQ PolyQ::primitive_integer() const {
  if (is_zero()) return *this;
  Int l(1);
  for (const auto& a : c_) l = boost::multiprecision::lcm(l, den(a));
  Int content(0);
  std::vector<Int> ic(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    ic[i] = num(c_[i] * Rational(l));
    content = boost::multiprecision::gcd(content, ic[i]);
  }
  if (ic.back() < 0) content = -content;
  std::vector<Rational> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = Rational(ic[i] / content);
  return PolyQ(std::move(r));
}

Rational PolyQ::cauchy_root_bound() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no root bound");
  Rational m(0);
  for (int i = 0; i < degree(); ++i) {
    Rational a = abs(coeff(i) / leading());
    if (a > m) m = a;
  }
  return m + 1;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    Rational a = coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    Rational mag = abs(a);
    if (i == 0 || mag != 1) os << sasaki::to_string(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace sasaki
