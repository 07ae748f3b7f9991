#pragma once

#include "sasaki/csc.hpp"
#include "sasaki/curvature.hpp"
#include "sasaki/extremal.hpp"
#include "sasaki/region.hpp"
#include "sasaki/topology.hpp"

#include <json.hpp>

#include <string>

namespace sasaki {

using Json = nlohmann::json;

// JSON payloads carry a "schema" version field at the top level (added by the
// CLI); these helpers serialize the individual value types.
Json jsonify(const Rational& q);  // "p/q" string
Json jsonify(const PolyQ& p);     // array of coefficient strings, lowest first
Json jsonify(const IsolatingInterval& iv);
Json jsonify(const Algebraic& x);
Json jsonify(const ContactInvariants& ci);
Json jsonify(const BouquetTable& table);
Json jsonify(const QuotientOrbifold& orb);
Json jsonify(const ExtremalVerdict& verdict);
Json jsonify(const CscRay& ray);
Json jsonify(const PiLinear& s);  // {"pi": "p/q", "const": "p/q", "decimal": ...}
Json jsonify(const ScalarReport& report);
Json jsonify(const RegionReport& report);
Json jsonify(const NullScalarSolution& sol);

// Decimal with 12 significant digits (presentation only; all arithmetic is exact).
std::string decimal12(double x);

// "13 - 2*sqrt(42)"-style rendering for roots of quadratic defining
// polynomials; falls back to a decimal approximation otherwise.
std::string pretty_algebraic(const Algebraic& x);

// Human-readable interval notation, e.g. "(0, 13 - 2*sqrt(42))".
std::string pretty_piece(const RegionPiece& piece);

}  // namespace sasaki
