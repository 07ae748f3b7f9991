#include "sasaki/csc.hpp"

#include "sasaki/curvature.hpp"

#include <stdexcept>

namespace sasaki {

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "Regular";
    case Regularity::QuasiRegular: return "QuasiRegular";
    case Regularity::Irregular: return "Irregular";
  }
  return "?";
}

PolyQ csc_cubic(const JoinParams& params) {
  Rational g(params.g), l(params.l), w1(params.w1), w2(params.w2);
  return PolyQ{-l * w2 * w2,                 //
                -(g - 1 + 2 * l * w1) * w2,   //
                (g - 1 + 2 * l * w2) * w1,    //
                l * w1 * w1};
}

CscRay csc_ray(const JoinParams& params) {
  CscRay ray;
  ray.cubic = csc_cubic(params);

  // There is provably precisely one positive solution; assert it.
  Rational bound = ray.cubic.cauchy_root_bound();
  if (sturm_sign_changes(ray.cubic, Rational(0), bound) != 1)
    throw std::logic_error("CSC cubic does not have a unique positive root");

  Rational lo(params.w2, params.w1);  // proved bracket c_w in (w2/w1, 1)
  Rational hi(1);

  std::optional<Rational> rational_root;
  for (const Rational& root : rational_roots(ray.cubic))
    if (root > 0) rational_root = root;

  if (rational_root) {
    const Rational& c = *rational_root;
    if (params.w1 > params.w2 && !(lo < c && c < hi))
      throw std::logic_error("CSC root outside the proved bracket");
    ray.root = c;
    ray.v = make_weight_vector(static_cast<long long>(den(c)),
                               static_cast<long long>(num(c)));
    ray.regularity =
        (ray.v->v1 == 1 && ray.v->v2 == 1) ? Regularity::Regular : Regularity::QuasiRegular;
    // Cross-check: constant scalar curvature means B = 0 on this ray. For
    // w = (1, 1) the CSC ray is the product ray, where B is undefined.
    auto sp = scalar_coefficients(params, *ray.v);
    if (sp && !sp->B.is_zero())
      throw std::logic_error("rational CSC root fails the B = 0 cross-check");
    return ray;
  }

  if (params.w1 == params.w2)
    throw std::logic_error("w = (1,1) must have the rational root c = 1");
  auto intervals = isolate_real_roots(ray.cubic, lo, hi, default_isolation_width());
  if (intervals.size() != 1)
    throw std::logic_error("CSC root bracket does not isolate a single root");
  ray.root = intervals.front();
  ray.regularity = Regularity::Irregular;
  return ray;
}

}  // namespace sasaki
