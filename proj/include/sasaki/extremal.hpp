#pragma once

#include "sasaki/poly.hpp"
#include "sasaki/roots.hpp"
#include "sasaki/topology.hpp"

#include <optional>
#include <string>

namespace sasaki {

// Degree-2 momentum polynomial h(z) of the smooth construction, with
// coefficients (12 - 8r^2 + 2r^3 s), 4r(3 - r^2), 2r^2(2 - rs).
// Requires r in (-1, 1) \ {0}.
PolyQ smooth_h(const Rational& r, const Rational& s_sigma);

// Orbifold h(z) for ramifications (p, q); reduces to smooth_h at p = q = 1.
PolyQ orbifold_h(long long p, long long q, const Rational& r, const Rational& s_sigma);

struct ExtremalProfile {
  PolyQ h;  // degree <= 2 in z
  PolyQ F;  // (1 - z^2) h(z) / (4pq(3 - r^2))
  Rational r;
  long long p;
  long long q;
  Rational s_sigma;
};

enum class Strength {
  AdmissibleExtremal,
  NoAdmissibleExtremal,
  GenuinelyNonExtremal,  // only on the regular ray, where uniqueness applies
  ProductRay,            // v = w: extremal, but the admissible profile is undefined
};

std::string to_string(Strength s);
std::string to_string(Positivity p);

struct ExtremalVerdict {
  Positivity positivity;
  Strength strength;
  // Vertex of h when h is convex with vertex inside (-1, 1).
  std::optional<Rational> min_location;
  std::optional<Rational> min_value;
};

// nullopt encodes the product ray v = w.
std::optional<ExtremalProfile> extremal_profile(const JoinParams& params,
                                                const WeightVector& v);

ExtremalVerdict classify_profile(const ExtremalProfile& profile, bool regular_ray);

// Full ray decision including the product-ray case.
ExtremalVerdict ray_verdict(const JoinParams& params, const WeightVector& v);

struct RegularRayResult {
  ExtremalVerdict verdict;
  Int M;  // minimum numerator invariant of the smooth construction
  std::optional<ExtremalProfile> profile;  // absent for the m = 0 product case
};

// Regular ray v = (1,1) in (k, m) coordinates; Trivial bundle means n = 2m,
// NonTrivial means n = 2m+1.
RegularRayResult regular_ray_extremal(long long g, long long k, long long m,
                                      BundleType bundle);

struct ExhaustionReport {
  bool exhausted;       // g <= 1 + 3 l w2
  long long threshold;  // 1 + 3 l w2
  long long k;
  long long m;
  Rational km_bound;  // m + (g-1)/3; exhausted iff k >= km_bound
};

ExhaustionReport exhaustion_bound(const JoinParams& params);

// The slope c = v2/v1 of a ray as a coprime weight vector.
WeightVector weight_from_slope(const Rational& c);

}  // namespace sasaki
