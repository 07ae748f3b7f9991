#pragma once

#include "sasaki/extremal.hpp"

#include <optional>
#include <vector>

namespace sasaki {

// Coefficients of P(z, c) = l(c w1 + w2)^3 / (4 v1) * h(z) as polynomials in
// the ray slope c: P = A0(c) + A1(c) z + A2(c) z^2. The prefactor is positive,
// so P and h have the same sign behaviour on (-1, 1).
struct RegionCPolys {
  PolyQ A0;
  PolyQ A1;
  PolyQ A2;
};

RegionCPolys region_c_polys(const JoinParams& params);

enum class RegionVerdict { Admissible, NotAdmissible };

std::string to_string(RegionVerdict v);

enum class CriticalKind {
  VerdictChange,  // verdict differs on the two sides
  Boundary,       // h >= 0 with an interior tangency at this exact c
  ProductRay,     // c = w2/w1 (extremal, admissible machinery undefined)
  Absorbed,       // a generator vanishes but the verdict does not change
};

std::string to_string(CriticalKind k);

struct CriticalPoint {
  Algebraic value;
  // Primitive integer polynomial vanishing at the point, with rational roots
  // other than the point itself divided out.
  PolyQ defining_poly;
  CriticalKind kind;
};

struct RegionPiece {
  Algebraic lo;                 // Rational(0) for the first piece
  std::optional<Algebraic> hi;  // nullopt = +infinity
  RegionVerdict verdict;
};

struct RegionReport {
  // Maximal open intervals of constant verdict covering (0, inf) minus the
  // non-absorbed critical points, ascending.
  std::vector<RegionPiece> pieces;
  // Every critical point of the decomposition, ascending (absorbed ones too).
  std::vector<CriticalPoint> points;
};

RegionReport extremal_region(const JoinParams& params);

// Pointwise verdict at a rational slope c != w2/w1.
RegionVerdict region_verdict_at(const JoinParams& params, const Rational& c);

}  // namespace sasaki
