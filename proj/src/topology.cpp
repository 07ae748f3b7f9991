#include "sasaki/topology.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace sasaki {

std::string to_string(BundleType b) {
  return b == BundleType::Trivial ? "Trivial" : "NonTrivial";
}

WeightVector make_weight_vector(long long v1, long long v2) {
  if (v1 < 1 || v2 < 1) throw std::invalid_argument("weights must be positive");
  if (std::gcd(v1, v2) != 1) throw std::invalid_argument("weights must be coprime");
  return WeightVector{v1, v2};
}

JoinParams make_join_params(long long g, long long l, long long w1, long long w2) {
  if (g < 1) throw std::invalid_argument("genus must be at least 1: the genus 0 case is not treated");
  if (l < 1) throw std::invalid_argument("l must be a positive integer");
  if (w1 < 1 || w2 < 1) throw std::invalid_argument("weights must be positive");
  if (std::gcd(w1, w2) != 1) throw std::invalid_argument("weights must be coprime");
  bool swapped = false;
  if (w1 < w2) {
    std::swap(w1, w2);
    swapped = true;
  }
  return JoinParams{g, l, w1, w2, swapped};
}

LW params_from_km(long long k, long long m, BundleType bundle) {
  if (k < 1 || m < 0 || m >= k)
    throw std::invalid_argument("m < k required: not a Kahler class");
  long long a = (bundle == BundleType::Trivial) ? k + m : k + m + 1;
  long long b = k - m;
  long long l = std::gcd(a, b);
  return LW{l, a / l, b / l};
}

ContactInvariants km_from_params(const JoinParams& params) {
  long long lw = params.l * (params.w1 + params.w2);
  long long n = params.l * (params.w1 - params.w2);
  ContactInvariants ci;
  ci.n = n;
  ci.bundle_type = (lw % 2 == 0) ? BundleType::Trivial : BundleType::NonTrivial;
  ci.k = (lw % 2 == 0) ? lw / 2 : (lw - 1) / 2;
  ci.m = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  ci.c1_coefficient = 2 - 2 * params.g - lw;
  return ci;
}

ContactInvariants contact_invariants(const JoinParams& params) {
  return km_from_params(params);
}

BouquetTable bouquet_table(long long g, long long k, BundleType bundle) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  BouquetTable table;
  table.bundle = bundle;
  table.bouquet_asserted = (bundle == BundleType::Trivial);
  for (long long m = 0; m < k; ++m) {
    LW lw = params_from_km(k, m, bundle);
    table.rows.push_back(BouquetRow{m, lw.l, lw.w1, lw.w2});
    long long c1 = 2 - 2 * g - lw.l * (lw.w1 + lw.w2);
    if (m == 0)
      table.c1_coefficient = c1;
    else if (c1 != table.c1_coefficient)
      throw std::logic_error("bouquet rows disagree on c1");
  }
  return table;
}

std::optional<QuotientOrbifold> quotient_orbifold(const JoinParams& params,
                                                  const WeightVector& v) {
  long long d = params.w1 * v.v2 - params.w2 * v.v1;
  if (d == 0) return std::nullopt;  // v proportional to coprime w means v = w

  QuotientOrbifold o;
  o.n = params.l * d;
  o.ramification_zero = v.v1;
  o.ramification_infinity = v.v2;
  long long wsum = params.w1 * v.v2 + params.w2 * v.v1;  // |w'| for w' = (w1 v2, w2 v1)
  long long lw = params.l * wsum;
  o.k = (lw % 2 == 0) ? lw / 2 : (lw - 1) / 2;
  o.r = Rational(d, wsum);
  o.p = v.v2;
  o.q = v.v1;
  o.s_sigma = rat(2 * (1 - params.g), o.n);
  return o;
}

}  // namespace sasaki
