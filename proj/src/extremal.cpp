#include "sasaki/extremal.hpp"

#include <stdexcept>

namespace sasaki {

namespace {

void check_r(const Rational& r) {
  if (!(r > -1 && r < 1) || r == 0)
    throw std::invalid_argument("r must lie in (-1, 1) and be nonzero");
}

}  // namespace

std::string to_string(Strength s) {
  switch (s) {
    case Strength::AdmissibleExtremal: return "AdmissibleExtremal";
    case Strength::NoAdmissibleExtremal: return "NoAdmissibleExtremal";
    case Strength::GenuinelyNonExtremal: return "GenuinelyNonExtremal";
    case Strength::ProductRay: return "ProductRay";
  }
  return "?";
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::StrictlyPositive: return "StrictlyPositive";
    case Positivity::VanishesInside: return "VanishesInside";
    case Positivity::NegativeSomewhere: return "NegativeSomewhere";
  }
  return "?";
}

PolyQ smooth_h(const Rational& r, const Rational& s_sigma) {
  check_r(r);
  Rational r2 = r * r;
  return PolyQ{12 - 8 * r2 + 2 * r2 * r * s_sigma,  //
                4 * r * (3 - r2),                    //
                2 * r2 * (2 - r * s_sigma)};
}

PolyQ orbifold_h(long long p, long long q, const Rational& r, const Rational& s_sigma) {
  check_r(r);
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  Rational P(p), Q(q);
  Rational r2 = r * r;
  Rational pq_r3s = 2 * P * Q * r2 * r * s_sigma;
  Rational c0 = Q * (6 - 3 * r - 4 * r2 + r2 * r) + P * (6 + 3 * r - 4 * r2 - r2 * r) + pq_r3s;
  Rational c1 = 2 * (3 - r2) * (Q * (r - 1) + P * (1 + r));
  Rational c2 = r * (P * (3 + 2 * r - r2) - Q * (3 - 2 * r - r2)) - pq_r3s;
  return PolyQ{c0, c1, c2};
}

std::optional<ExtremalProfile> extremal_profile(const JoinParams& params,
                                                const WeightVector& v) {
  auto orb = quotient_orbifold(params, v);
  if (!orb) return std::nullopt;
  ExtremalProfile prof;
  prof.r = orb->r;
  prof.p = orb->p;
  prof.q = orb->q;
  prof.s_sigma = orb->s_sigma;
  prof.h = orbifold_h(prof.p, prof.q, prof.r, prof.s_sigma);
  PolyQ one_minus_z2{Rational(1), Rational(0), Rational(-1)};
  Rational denom = 4 * Rational(prof.p) * Rational(prof.q) * (3 - prof.r * prof.r);
  prof.F = (one_minus_z2 * prof.h).scaled(1 / denom);
  return prof;
}

ExtremalVerdict classify_profile(const ExtremalProfile& profile, bool regular_ray) {
  ExtremalVerdict verdict;
  verdict.positivity = positive_on_open_interval(profile.h, Rational(-1), Rational(1));
  if (verdict.positivity == Positivity::StrictlyPositive) {
    verdict.strength = Strength::AdmissibleExtremal;
  } else {
    verdict.strength =
        regular_ray ? Strength::GenuinelyNonExtremal : Strength::NoAdmissibleExtremal;
  }
  Rational a2 = profile.h.coeff(2);
  if (a2 > 0) {
    Rational vertex = -profile.h.coeff(1) / (2 * a2);
    if (vertex > -1 && vertex < 1) {
      verdict.min_location = vertex;
      verdict.min_value = profile.h.eval(vertex);
    }
  }
  return verdict;
}

ExtremalVerdict ray_verdict(const JoinParams& params, const WeightVector& v) {
  auto prof = extremal_profile(params, v);
  if (!prof) {
    ExtremalVerdict verdict;
    verdict.positivity = Positivity::StrictlyPositive;
    verdict.strength = Strength::ProductRay;
    return verdict;
  }
  bool regular = (v.v1 == 1 && v.v2 == 1);
  return classify_profile(*prof, regular);
}

RegularRayResult regular_ray_extremal(long long g, long long k, long long m,
                                      BundleType bundle) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1");
  if (k < 1 || m < 0 || m >= k)
    throw std::invalid_argument("m < k required: not a Kahler class");

  Int G(g), K(k), Mm(m);
  RegularRayResult result;
  if (bundle == BundleType::Trivial) {
    result.M = 3 * K * K * K * (2 * G + K - 2) +
               (2 * G - G * G + 6 * K - 6 * G * K - 2 * K * K - 1) * Mm * Mm -
               Mm * Mm * Mm * Mm;
    if (m == 0) {
      // n = 0: the product Sigma_g x S^3 with its CSC metric; the admissible
      // machinery (r = 0) is not defined here.
      result.verdict.positivity = Positivity::StrictlyPositive;
      result.verdict.strength = Strength::AdmissibleExtremal;
      return result;
    }
    Rational r(m, k);
    Rational s(1 - g, m);
    ExtremalProfile prof{smooth_h(r, s), PolyQ{}, r, 1, 1, s};
    PolyQ one_minus_z2{Rational(1), Rational(0), Rational(-1)};
    prof.F = (one_minus_z2 * prof.h).scaled(1 / (4 * (3 - r * r)));
    result.verdict = classify_profile(prof, true);
    result.profile = std::move(prof);
    return result;
  }

  // n = 2m + 1 odd. The minimum of h is 4M/((1+2k)^3 (g+2k)) with M as below.
  result.M = -G * G + 24 * G * K * K * K + 36 * G * K * K + 12 * G * K + 2 * G +
             12 * K * K * K * K - 20 * K * K - 8 * K - 1 +
             Mm * (-4 * G * G - 24 * G * K - 4 * G - 8 * K * K + 16 * K + 4) +
             Mm * Mm * (-4 * G * G - 24 * G * K - 4 * G - 8 * K * K + 16 * K) -
             8 * Mm * Mm * Mm - 4 * Mm * Mm * Mm * Mm;
  Rational r(2 * m + 1, 2 * k + 1);
  Rational s(2 * (1 - g), 2 * m + 1);
  ExtremalProfile prof{smooth_h(r, s), PolyQ{}, r, 1, 1, s};
  PolyQ one_minus_z2{Rational(1), Rational(0), Rational(-1)};
  prof.F = (one_minus_z2 * prof.h).scaled(1 / (4 * (3 - r * r)));
  result.verdict = classify_profile(prof, true);
  result.profile = std::move(prof);
  return result;
}

ExhaustionReport exhaustion_bound(const JoinParams& params) {
  ExhaustionReport report;
  report.threshold = 1 + 3 * params.l * params.w2;
  report.exhausted = params.g <= report.threshold;
  ContactInvariants ci = km_from_params(params);
  report.k = ci.k;
  report.m = ci.m;
  report.km_bound = Rational(ci.m) + Rational(params.g - 1, 3);
  return report;
}

WeightVector weight_from_slope(const Rational& c) {
  if (!(c > 0)) throw std::invalid_argument("ray slope must be positive");
  return make_weight_vector(static_cast<long long>(den(c)), static_cast<long long>(num(c)));
}

}  // namespace sasaki
