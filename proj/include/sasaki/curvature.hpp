#pragma once

#include "sasaki/rational.hpp"
#include "sasaki/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sasaki {

// Exact scalar of the form pi_coeff * pi + const_term.
struct PiLinear {
  Rational pi_coeff;
  Rational const_term;

  PiLinear operator+(const PiLinear& o) const {
    return {pi_coeff + o.pi_coeff, const_term + o.const_term};
  }
  PiLinear operator-(const PiLinear& o) const {
    return {pi_coeff - o.pi_coeff, const_term - o.const_term};
  }
  PiLinear scaled(const Rational& s) const { return {pi_coeff * s, const_term * s}; }
  bool operator==(const PiLinear& o) const = default;
  bool is_zero() const { return pi_coeff == 0 && const_term == 0; }

  // Exact sign, using rational bounds 333/106 < pi < 355/113.
  int sign() const;
  double approx() const;
  std::string to_string() const;  // e.g. "8/3*pi - 4"
};

// Transverse scalar curvature of the admissible metric is A + B*z.
struct ScalarPair {
  PiLinear A;
  PiLinear B;
};

// nullopt encodes the product ray v = w, where the admissible metric (and
// these formulas) are undefined.
std::optional<ScalarPair> scalar_coefficients(const JoinParams& params,
                                              const WeightVector& v);

enum class CscType { AboveMinus4, EqualMinus4, BelowMinus4 };

std::string to_string(CscType t);

struct ScalarReport {
  PiLinear A;
  PiLinear B;
  // Sasaki scalar s = A - 4 and its type, present iff B = 0 (CSC).
  std::optional<PiLinear> sasaki_const;
  std::optional<CscType> type;
};

std::optional<ScalarReport> sasaki_scalar(const JoinParams& params, const WeightVector& v);

// s |-> a^{-1}(s + 4) - 4 (transverse homothety, 2n = 4 in dimension 5).
PiLinear transverse_homothety(const PiLinear& s, const Rational& a);

struct NullScalarSolution {
  long long l;
  long long w1;
  long long w2;
  WeightVector v;
  BundleType bundle;
};

// All (l, w1, w2) with l^2 w1 w2 = (g-1)^2, coprime weights, l w2 < g-1,
// l <= bound and w1 <= bound, each with the ray v making A = B = 0 (so the
// whole ray has Sasaki scalar curvature -4). Empty for g = 2 (A cannot
// vanish); requires g >= 2.
std::vector<NullScalarSolution> null_scalar_solutions(long long g, long long bound);

}  // namespace sasaki
