#include "sasaki/region.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace sasaki {

namespace {

// Generator order fixed for reporting: concavity, discriminant, endpoint slopes.
enum GenIndex { kA2 = 0, kD = 1, kSp = 2, kSm = 3 };

// Square-free part with all rational roots divided out; constant when the
// generator has no irrational roots.
PolyQ deflate_irrational(const PolyQ& gen) {
  PolyQ q = gen.squarefree_part();
  for (const Rational& root : rational_roots(q)) q = q.exact_div(PolyQ::linear_root(root));
  if (q.degree() < 1) return PolyQ::constant(Rational(1));
  return q.primitive_integer();
}

struct Pt {
  bool rational;
  Rational rvalue;       // when rational
  IsolatingInterval iv;  // when irrational
  bool is_product = false;
  PolyQ defining;
  std::array<bool, 4> vanishes{};
  CriticalKind kind = CriticalKind::Absorbed;

  Algebraic value() const {
    if (rational) return rvalue;
    return iv;
  }
};

PolyQ p_of_z_at(const RegionCPolys& rp, const Rational& c) {
  return PolyQ{rp.A0.eval(c), rp.A1.eval(c), rp.A2.eval(c)};
}

RegionVerdict verdict_at(const RegionCPolys& rp, const Rational& c) {
  return positive_on_open_interval(p_of_z_at(rp, c), Rational(-1), Rational(1)) ==
                 Positivity::StrictlyPositive
             ? RegionVerdict::Admissible
             : RegionVerdict::NotAdmissible;
}

// Sign of gen at the algebraic point isolated by pt.iv, where gen does not
// vanish there: refine until gen is root-free over the interval.
int sign_at_point(const PolyQ& gen, Pt& pt) {
  SturmChain chain(gen);
  while (chain.squarefree().sign_at(pt.iv.lo) == 0 ||
         chain.count_halfopen(pt.iv.lo, pt.iv.hi) > 0)
    pt.iv.refine_to(pt.iv.width() / 2);
  return gen.sign_at(pt.iv.lo);
}

}  // namespace

std::string to_string(RegionVerdict v) {
  return v == RegionVerdict::Admissible ? "Admissible" : "NotAdmissible";
}

std::string to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::VerdictChange: return "VerdictChange";
    case CriticalKind::Boundary: return "Boundary";
    case CriticalKind::ProductRay: return "ProductRay";
    case CriticalKind::Absorbed: return "Absorbed";
  }
  return "?";
}

RegionCPolys region_c_polys(const JoinParams& params) {
  Rational g(params.g), l(params.l), w1(params.w1), w2(params.w2);
  Rational a = 7 * l * w1 + 1 - g;
  Rational b = 1 - g - l * w1;
  Rational u = g - 1 + 2 * l * (w1 + w2);
  Rational v = l * (w2 - w1);
  Rational t = 1 - g - l * (w1 + w2);
  Rational e = 1 - g + 7 * l * w2;
  Rational f = g - 1 + l * w2;
  Rational w1_2 = w1 * w1, w2_2 = w2 * w2;
  Rational w1_3 = w1_2 * w1, w2_3 = w2_2 * w2;

  RegionCPolys rp;
  rp.A0 = PolyQ{l * w2_3, a * w2_2, 2 * w1 * w2 * u, e * w1_2, l * w1_3};
  rp.A1 = PolyQ{-2 * l * w2_3, (b - a) * w2_2, 2 * w1 * w2 * v, (e + f) * w1_2, 2 * l * w1_3};
  rp.A2 = PolyQ{l * w2_3, -b * w2_2, 2 * w1 * w2 * t, f * w1_2, l * w1_3};
  return rp;
}

RegionVerdict region_verdict_at(const JoinParams& params, const Rational& c) {
  if (!(c > 0)) throw std::invalid_argument("ray slope must be positive");
  if (c == Rational(params.w2, params.w1))
    throw std::invalid_argument("product ray: admissible machinery undefined");
  return verdict_at(region_c_polys(params), c);
}

RegionReport extremal_region(const JoinParams& params) {
  RegionCPolys rp = region_c_polys(params);
  std::array<PolyQ, 4> gens;
  gens[kA2] = rp.A2;
  gens[kD] = rp.A1 * rp.A1 - (rp.A0 * rp.A2).scaled(Rational(4));
  gens[kSp] = rp.A1 + rp.A2.scaled(Rational(2));  // P'(1)
  gens[kSm] = rp.A1 - rp.A2.scaled(Rational(2));  // P'(-1)

  const Rational c_product(params.w2, params.w1);

  // Rational critical candidates.
  std::set<Rational> rational_pts{c_product};
  for (const PolyQ& gen : gens) {
    if (gen.is_zero()) continue;
    for (const Rational& root : rational_roots(gen))
      if (root > 0) rational_pts.insert(root);
  }

  // Irrational candidates, deduped via the square-free product of the
  // deflated generators.
  std::array<PolyQ, 4> defl;
  PolyQ combined = PolyQ::constant(Rational(1));
  for (size_t i = 0; i < 4; ++i) {
    defl[i] = gens[i].is_zero() ? PolyQ::constant(Rational(1)) : deflate_irrational(gens[i]);
    if (defl[i].degree() >= 1) combined = combined * defl[i];
  }

  std::vector<Pt> pts;
  for (const Rational& r : rational_pts) {
    Pt pt;
    pt.rational = true;
    pt.rvalue = r;
    pt.is_product = (r == c_product);
    pt.defining = PolyQ(std::vector<Rational>{-Rational(num(r)), Rational(den(r))});
    pts.push_back(std::move(pt));
  }

  if (combined.degree() >= 1) {
    PolyQ wsq = combined.squarefree_part().primitive_integer();
    Rational bound = wsq.cauchy_root_bound();
    for (IsolatingInterval& iv : isolate_real_roots(wsq, Rational(0), bound,
                                                    default_isolation_width())) {
      // Pull the interval off 0 and off every rational candidate.
      auto clean = [&] {
        if (iv.lo <= 0) return false;
        for (const Rational& r : rational_pts)
          if (iv.lo <= r && r <= iv.hi) return false;
        return true;
      };
      while (!clean()) iv.refine_to(iv.width() / 2);

      Pt pt;
      pt.rational = false;
      pt.iv = iv;
      for (size_t i = 0; i < 4; ++i) {
        if (defl[i].degree() < 1) continue;
        SturmChain chain(defl[i]);
        pt.vanishes[i] = chain.count_halfopen(iv.lo, iv.hi) > 0;
        if (pt.vanishes[i] && pt.defining.is_zero()) pt.defining = defl[i];
      }
      if (pt.defining.is_zero())
        throw std::logic_error("critical point matches no generator");
      // Rebind the interval to the matched generator: its roots are a subset
      // of the combined polynomial's, so the interval still isolates.
      pt.iv.defining_poly = pt.defining;
      pts.push_back(std::move(pt));
    }
  }

  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return algebraic_less(a.value(), b.value()); });

  // One rational sample per gap between consecutive critical points.
  auto sample_between = [&](Pt* prev, Pt* next) -> Rational {
    if (!prev) {
      if (next->rational) return next->rvalue / 2;
      return next->iv.lo / 2;
    }
    if (!next) {
      if (prev->rational) return prev->rvalue + 1;
      return prev->iv.hi + 1;
    }
    if (prev->rational && next->rational) return (prev->rvalue + next->rvalue) / 2;
    if (prev->rational) {
      while (next->iv.lo <= prev->rvalue) next->iv.refine_to(next->iv.width() / 2);
      return (prev->rvalue + next->iv.lo) / 2;
    }
    if (next->rational) {
      while (prev->iv.hi >= next->rvalue) prev->iv.refine_to(prev->iv.width() / 2);
      return (prev->iv.hi + next->rvalue) / 2;
    }
    while (prev->iv.hi >= next->iv.lo) {
      prev->iv.refine_to(prev->iv.width() / 2);
      next->iv.refine_to(next->iv.width() / 2);
    }
    return (prev->iv.hi + next->iv.lo) / 2;
  };

  const size_t n = pts.size();
  std::vector<RegionVerdict> gap(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    Pt* prev = (i == 0) ? nullptr : &pts[i - 1];
    Pt* next = (i == n) ? nullptr : &pts[i];
    gap[i] = verdict_at(rp, sample_between(prev, next));
  }

  for (size_t i = 0; i < n; ++i) {
    Pt& pt = pts[i];
    bool sides_differ = gap[i] != gap[i + 1];
    if (pt.is_product) {
      pt.kind = CriticalKind::ProductRay;
    } else if (pt.rational) {
      Positivity here =
          positive_on_open_interval(p_of_z_at(rp, pt.rvalue), Rational(-1), Rational(1));
      if (here == Positivity::VanishesInside)
        pt.kind = CriticalKind::Boundary;
      else
        pt.kind = sides_differ ? CriticalKind::VerdictChange : CriticalKind::Absorbed;
    } else if (pt.vanishes[kD] && !pt.vanishes[kA2] && !pt.vanishes[kSp] &&
               !pt.vanishes[kSm] && sign_at_point(gens[kA2], pt) > 0 &&
               sign_at_point(gens[kSp], pt) > 0 && sign_at_point(gens[kSm], pt) < 0) {
      // Discriminant zero with the vertex strictly inside (-1, 1): tangency.
      pt.kind = CriticalKind::Boundary;
    } else {
      pt.kind = sides_differ ? CriticalKind::VerdictChange : CriticalKind::Absorbed;
    }
  }

  RegionReport report;
  Algebraic piece_lo = Rational(0);
  for (size_t i = 0; i < n; ++i) {
    if (pts[i].kind == CriticalKind::Absorbed && gap[i] == gap[i + 1]) continue;
    report.pieces.push_back(RegionPiece{piece_lo, pts[i].value(), gap[i]});
    piece_lo = pts[i].value();
  }
  report.pieces.push_back(RegionPiece{piece_lo, std::nullopt, gap[n]});

  for (const Pt& pt : pts)
    report.points.push_back(CriticalPoint{pt.value(), pt.defining, pt.kind});
  return report;
}

}  // namespace sasaki
