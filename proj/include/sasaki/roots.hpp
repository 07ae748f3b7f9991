#pragma once

#include "sasaki/poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sasaki {

// Sturm chain of the square-free part of a nonzero polynomial.
class SturmChain {
 public:
  explicit SturmChain(const PolyQ& p);

  // Sign variations of the chain at x, zeros skipped.
  int variations_at(const Rational& x) const;

  // Distinct real roots in (a, b] (half-open convention).
  int count_halfopen(const Rational& a, const Rational& b) const;
  // Distinct real roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const;

  const PolyQ& squarefree() const { return chain_.front(); }

 private:
  std::vector<PolyQ> chain_;
};

// Number of distinct real roots of p in (a, b].
int sturm_sign_changes(const PolyQ& p, const Rational& a, const Rational& b);

// A real algebraic number: square-free defining polynomial with exactly one
// root in [lo, hi]. lo == hi encodes an exactly-known rational root.
struct IsolatingInterval {
  PolyQ defining_poly;
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }

  // Bisect until hi - lo <= width (collapses to a point when the root is hit).
  void refine_to(const Rational& width);

  // True if the rational q is the root described by this interval.
  bool equals(const Rational& q) const;

  double approx() const;
};

// One interval per distinct real root of p in the open interval (a, b),
// pairwise disjoint, widths <= width, sorted ascending.
std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p, const Rational& a,
                                                  const Rational& b, const Rational& width);

// All rational roots of p, sorted ascending, each verified by exact evaluation.
std::vector<Rational> rational_roots(const PolyQ& p);

enum class Positivity { StrictlyPositive, VanishesInside, NegativeSomewhere };

// Exact sign behaviour of p on the open interval (a, b).
Positivity positive_on_open_interval(const PolyQ& p, const Rational& a, const Rational& b);

// Exactly-known rational, or an isolating interval for an irrational root.
using Algebraic = std::variant<Rational, IsolatingInterval>;

bool algebraic_is_rational(const Algebraic& x);
double algebraic_approx(const Algebraic& x);
// Strict order; the two values must be distinct unless both rational.
bool algebraic_less(const Algebraic& a, const Algebraic& b);

// Default isolation width 2^-40, overridable via SASAKI_ISOLATION_WIDTH
// (a "1/2^k" string).
Rational default_isolation_width();

}  // namespace sasaki
