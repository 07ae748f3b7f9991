#pragma once

#include "sasaki/poly.hpp"
#include "sasaki/roots.hpp"
#include "sasaki/topology.hpp"

#include <optional>
#include <string>

namespace sasaki {

enum class Regularity { Regular, QuasiRegular, Irregular };

std::string to_string(Regularity r);

struct CscRay {
  PolyQ cubic;
  Algebraic root;  // the unique positive root c_w
  Regularity regularity;
  std::optional<WeightVector> v;  // (denominator, numerator) of a rational root
};

// l w1^2 c^3 + (g-1+2l w2) w1 c^2 - (g-1+2l w1) w2 c - l w2^2.
PolyQ csc_cubic(const JoinParams& params);

// Unique positive root of the cubic (asserted by a Sturm count, which throws
// std::logic_error if it is not 1), with regularity classification.
CscRay csc_ray(const JoinParams& params);

}  // namespace sasaki
