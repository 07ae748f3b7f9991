#pragma once

#include "sasaki/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sasaki {

enum class BundleType { Trivial, NonTrivial };

std::string to_string(BundleType b);

// A Reeb ray selector: coprime positive (v1, v2), slope c = v2/v1.
struct WeightVector {
  long long v1;
  long long v2;
};

// Validates positivity and coprimality.
WeightVector make_weight_vector(long long v1, long long v2);

// The join M^3_g *_{l,1} S^3_w. Weights are stored with w1 >= w2; inputs in
// the other order are swapped (Weyl group action) and the swap is recorded.
struct JoinParams {
  long long g;
  long long l;
  long long w1;
  long long w2;
  bool swapped = false;
};

// Validates g >= 1 (genus 0 is not treated), l >= 1, coprime positive weights.
JoinParams make_join_params(long long g, long long l, long long w1, long long w2);

struct ContactInvariants {
  long long c1_coefficient;  // coefficient of the generator gamma
  BundleType bundle_type;
  long long k;
  long long m;
  long long n;
};

struct LW {
  long long l;
  long long w1;
  long long w2;
};

// Inverse of km_from_params for fixed bundle type; requires 0 <= m < k
// (the Kaehler condition), otherwise throws std::invalid_argument.
LW params_from_km(long long k, long long m, BundleType bundle);

ContactInvariants km_from_params(const JoinParams& params);

ContactInvariants contact_invariants(const JoinParams& params);

struct BouquetRow {
  long long m;
  long long l;
  long long w1;
  long long w2;
};

struct BouquetTable {
  std::vector<BouquetRow> rows;  // m = 0 .. k-1
  long long c1_coefficient;      // shared by every row
  BundleType bundle;
  // Non-conjugacy of the tori is only proved for the trivial bundle; the
  // non-trivial table is emitted with this caveat set.
  bool bouquet_asserted;
};

BouquetTable bouquet_table(long long g, long long k, BundleType bundle);

// Quasi-regular quotient data (S_n, Delta_v) for the ray v.
struct QuotientOrbifold {
  long long n;  // l(w1 v2 - w2 v1); may be negative
  long long ramification_zero;      // v1 over the zero section
  long long ramification_infinity;  // v2 over the infinity section
  long long k;
  Rational r;   // (w1 v2 - w2 v1)/(w1 v2 + w2 v1), in (-1, 1) \ {0}
  long long p;  // = v2
  long long q;  // = v1
  Rational s_sigma;
};

// nullopt encodes the product ray v = w, where the admissible profile is
// undefined (the ray is still extremal).
std::optional<QuotientOrbifold> quotient_orbifold(const JoinParams& params,
                                                  const WeightVector& v);

}  // namespace sasaki
