#include "sasaki/curvature.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sasaki {

int PiLinear::sign() const {
  int sa = sign_of(pi_coeff), sb = sign_of(const_term);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Mixed signs: compare pi_coeff * pi against -const_term with rational
  // bounds 333/106 < pi < 355/113.
  Rational lo = pi_coeff * ((sa > 0) ? Rational(333, 106) : Rational(355, 113));
  Rational hi = pi_coeff * ((sa > 0) ? Rational(355, 113) : Rational(333, 106));
  // pi lies strictly between the bounds, so equality already decides the sign.
  if (lo + const_term >= 0) return 1;
  if (hi + const_term <= 0) return -1;
  throw std::logic_error("pi bounds too coarse to decide sign");
}

double PiLinear::approx() const {
  return pi_coeff.convert_to<double>() * 3.14159265358979323846 +
         const_term.convert_to<double>();
}

std::string PiLinear::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (pi_coeff != 0) {
    if (pi_coeff == 1)
      os << "pi";
    else if (pi_coeff == -1)
      os << "-pi";
    else
      os << sasaki::to_string(pi_coeff) << "*pi";
    if (const_term > 0) os << " + " << sasaki::to_string(const_term);
    if (const_term < 0) os << " - " << sasaki::to_string(-const_term);
  } else {
    os << sasaki::to_string(const_term);
  }
  return os.str();
}

std::optional<ScalarPair> scalar_coefficients(const JoinParams& params,
                                              const WeightVector& v) {
  Rational g(params.g), l(params.l), w1(params.w1), w2(params.w2);
  Rational v1(v.v1), v2(v.v2);
  if (w1 * v2 == w2 * v1) return std::nullopt;  // product ray

  Rational quad = v2 * v2 * w1 * w1 + 4 * v1 * v2 * w1 * w2 + v1 * v1 * w2 * w2;
  ScalarPair sp;
  sp.A.pi_coeff =
      24 * (v1 * w2 * (1 - g + l * w1) + v2 * w1 * (1 - g + l * w2)) / (l * quad);
  sp.A.const_term = 0;
  sp.B.pi_coeff = 24 *
                  (l * v2 * v2 * v2 * w1 * w1 - v1 * v1 * v2 * w2 * (g - 1 + 2 * l * w1) -
                   l * v1 * v1 * v1 * w2 * w2 + v1 * v2 * v2 * w1 * (g - 1 + 2 * l * w2)) /
                  (l * v1 * v2 * quad);
  sp.B.const_term = 0;
  return sp;
}

std::string to_string(CscType t) {
  switch (t) {
    case CscType::AboveMinus4: return "Above(-4)";
    case CscType::EqualMinus4: return "Equal(-4)";
    case CscType::BelowMinus4: return "Below(-4)";
  }
  return "?";
}

std::optional<ScalarReport> sasaki_scalar(const JoinParams& params, const WeightVector& v) {
  auto sp = scalar_coefficients(params, v);
  if (!sp) return std::nullopt;
  ScalarReport report;
  report.A = sp->A;
  report.B = sp->B;
  if (sp->B.is_zero()) {
    report.sasaki_const = sp->A - PiLinear{Rational(0), Rational(4)};
    // Compare s = A - 4 against -4, i.e. take the sign of A.
    int s = sp->A.sign();
    report.type = (s > 0)   ? CscType::AboveMinus4
                  : (s < 0) ? CscType::BelowMinus4
                            : CscType::EqualMinus4;
  }
  return report;
}

PiLinear transverse_homothety(const PiLinear& s, const Rational& a) {
  if (!(a > 0)) throw std::invalid_argument("homothety parameter must be positive");
  return (s + PiLinear{Rational(0), Rational(4)}).scaled(1 / a) -
         PiLinear{Rational(0), Rational(4)};
}

std::vector<NullScalarSolution> null_scalar_solutions(long long g, long long bound) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  if (bound < 1) throw std::invalid_argument("search bound must be positive");
  std::vector<NullScalarSolution> out;
  if (g == 2) return out;  // A cannot vanish for genus 2

  long long target = (g - 1) * (g - 1);
  for (long long l = 1; l <= bound; ++l) {
    if (target % (l * l) != 0) continue;
    long long prod = target / (l * l);  // w1 * w2
    for (long long w1 = 1; w1 <= bound; ++w1) {
      if (prod % w1 != 0) continue;
      long long w2 = prod / w1;
      if (w2 > w1 || std::gcd(w1, w2) != 1) continue;
      if (!(l * w2 < g - 1 && g - 1 < l * w1)) continue;

      // The A = 0 ray: v2/v1 = ((l w1 - (g-1)) w2) / (((g-1) - l w2) w1).
      long long nv = (l * w1 - (g - 1)) * w2;
      long long dv = ((g - 1) - l * w2) * w1;
      long long gg = std::gcd(nv, dv);
      WeightVector v = make_weight_vector(dv / gg, nv / gg);

      JoinParams params = make_join_params(g, l, w1, w2);
      auto sp = scalar_coefficients(params, v);
      if (!sp || !sp->A.is_zero() || !sp->B.is_zero())
        throw std::logic_error("null-scalar candidate failed the exact A = B = 0 check");
      out.push_back(NullScalarSolution{l, w1, w2, v,
                                       contact_invariants(params).bundle_type});
    }
  }
  return out;
}

}  // namespace sasaki
