#include "sasaki/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sasaki {

namespace {

// Largest square divisor: n = s^2 * d with d square-free.
void extract_square(const Int& n, Int& s, Int& d) {
  s = 1;
  d = n;
  for (Int f = 2; f * f <= d; ++f)
    while (d % (f * f) == 0) {
      d /= f * f;
      s *= f;
    }
}

}  // namespace

Json jsonify(const Rational& q) { return to_string(q); }

Json jsonify(const PolyQ& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Json jsonify(const IsolatingInterval& iv) {
  return Json{{"poly", jsonify(iv.defining_poly)},
              {"lo", to_string(iv.lo)},
              {"hi", to_string(iv.hi)}};
}

Json jsonify(const Algebraic& x) {
  if (std::holds_alternative<Rational>(x)) return jsonify(std::get<Rational>(x));
  return jsonify(std::get<IsolatingInterval>(x));
}

Json jsonify(const ContactInvariants& ci) {
  return Json{{"c1_coefficient", ci.c1_coefficient},
              {"bundle_type", to_string(ci.bundle_type)},
              {"k", ci.k},
              {"m", ci.m},
              {"n", ci.n}};
}

Json jsonify(const BouquetTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows)
    rows.push_back(Json{{"m", row.m}, {"l", row.l}, {"w", {row.w1, row.w2}}});
  return Json{{"rows", rows},
              {"c1_coefficient", table.c1_coefficient},
              {"bundle_type", to_string(table.bundle)},
              {"bouquet_asserted", table.bouquet_asserted}};
}

Json jsonify(const QuotientOrbifold& orb) {
  return Json{{"n", orb.n},
              {"ramification", {orb.ramification_zero, orb.ramification_infinity}},
              {"k", orb.k},
              {"r", to_string(orb.r)},
              {"p", orb.p},
              {"q", orb.q},
              {"s_sigma", to_string(orb.s_sigma)}};
}

Json jsonify(const ExtremalVerdict& verdict) {
  Json j{{"positivity", to_string(verdict.positivity)},
         {"strength", to_string(verdict.strength)}};
  if (verdict.min_location) j["min_location"] = to_string(*verdict.min_location);
  if (verdict.min_value) j["min_value"] = to_string(*verdict.min_value);
  return j;
}

Json jsonify(const CscRay& ray) {
  Json j{{"cubic", jsonify(ray.cubic)},
         {"root", jsonify(ray.root)},
         {"regularity", to_string(ray.regularity)}};
  if (ray.v) j["v"] = {ray.v->v1, ray.v->v2};
  return j;
}

Json jsonify(const PiLinear& s) {
  return Json{{"pi", to_string(s.pi_coeff)},
              {"const", to_string(s.const_term)},
              {"decimal", decimal12(s.approx())}};
}

Json jsonify(const ScalarReport& report) {
  Json j{{"A", jsonify(report.A)}, {"B", jsonify(report.B)}};
  if (report.sasaki_const) j["sasaki_scalar"] = jsonify(*report.sasaki_const);
  if (report.type) j["type"] = to_string(*report.type);
  return j;
}

Json jsonify(const RegionReport& report) {
  Json pieces = Json::array();
  for (const auto& piece : report.pieces) {
    Json p{{"lo", jsonify(piece.lo)}, {"verdict", to_string(piece.verdict)}};
    if (piece.hi)
      p["hi"] = jsonify(*piece.hi);
    else
      p["hi"] = "inf";
    p["pretty"] = pretty_piece(piece);
    pieces.push_back(std::move(p));
  }
  Json points = Json::array();
  for (const auto& point : report.points)
    points.push_back(Json{{"value", jsonify(point.value)},
                          {"pretty", pretty_algebraic(point.value)},
                          {"defining_poly", jsonify(point.defining_poly)},
                          {"kind", to_string(point.kind)}});
  return Json{{"pieces", pieces}, {"critical_points", points}};
}

Json jsonify(const NullScalarSolution& sol) {
  return Json{{"l", sol.l},
              {"w", {sol.w1, sol.w2}},
              {"v", {sol.v.v1, sol.v.v2}},
              {"bundle_type", to_string(sol.bundle)}};
}

std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string pretty_algebraic(const Algebraic& x) {
  if (std::holds_alternative<Rational>(x)) return to_string(std::get<Rational>(x));
  const auto& iv = std::get<IsolatingInterval>(x);
  if (iv.is_exact()) return to_string(iv.lo);
  const PolyQ& p = iv.defining_poly;
  if (p.degree() == 2) {
    // Root (-b +- sqrt(b^2 - 4ac)) / (2a) written as u +- t*sqrt(d).
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc > 0) {
      Int sn, dn, sd, dd;
      extract_square(num(disc), sn, dn);
      extract_square(den(disc), sd, dd);
      if (dd == 1) {  // sqrt(disc) = (sn/(sd*dd)) * sqrt(dn*dd) with dd = 1
        Rational u = -b / (2 * a);
        Rational t = abs(Rational(sn, sd) / (2 * a));
        if (iv.midpoint() < u) t = -t;  // pick the branch matching the interval
        std::ostringstream os;
        os << to_string(u) << (t > 0 ? " + " : " - ");
        if (abs(t) != 1) os << to_string(abs(t)) << "*";
        os << "sqrt(" << dn.str() << ")";
        return os.str();
      }
    }
  }
  return "~" + decimal12(iv.approx());
}

std::string pretty_piece(const RegionPiece& piece) {
  std::string hi = piece.hi ? pretty_algebraic(*piece.hi) : "+inf";
  return "(" + pretty_algebraic(piece.lo) + ", " + hi + ")";
}

}  // namespace sasaki
