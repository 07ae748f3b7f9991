#include "sasaki/roots.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace sasaki {

namespace {

// Positive rescale to integer coefficients with content 1 (sign preserved).
PolyQ positive_primitive(const PolyQ& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& a : p.coeffs()) l = boost::multiprecision::lcm(l, den(a));
  Int content(0);
  for (const auto& a : p.coeffs())
    content = boost::multiprecision::gcd(content, num(a * Rational(l)));
  return p.scaled(Rational(l, content));
}

Int floor_of(const Rational& x) {
  Int n = num(x), d = den(x);  // d > 0
  Int q = n / d;               // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

// The rational with smallest denominator in [lo, hi] (continued fractions).
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Rational f(floor_of(lo));
  if (f == lo) return lo;
  if (hi >= f + 1) return f + 1;
  return f + 1 / simplest_between(1 / (hi - f), 1 / (lo - f));
}

// Any rational root of the primitive integer polynomial q has denominator at
// most |leading|; once the interval is narrower than 1/(2 leading^2) it can
// hold at most one such fraction, namely the simplest one it contains.
void snap_rational_root(const PolyQ& q, IsolatingInterval& iv) {
  if (iv.is_exact()) return;
  Int an = abs(num(q.leading()));
  IsolatingInterval probe = iv;
  probe.refine_to(1 / Rational(2 * an * an));
  if (probe.is_exact()) {
    iv = probe;
    return;
  }
  Rational cand = simplest_between(probe.lo, probe.hi);
  if (q.sign_at(cand) == 0) iv.lo = iv.hi = cand;
}

}  // namespace

SturmChain::SturmChain(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no Sturm chain");
  PolyQ p0 = positive_primitive(p.squarefree_part());
  chain_.push_back(p0);
  if (p0.degree() == 0) return;
  chain_.push_back(positive_primitive(p0.derivative()));
  while (chain_.back().degree() > 0) {
    PolyQ r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;  // cannot happen for square-free input, kept defensive-free
    chain_.push_back(positive_primitive(-r));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int variations = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmChain::count_halfopen(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw std::invalid_argument("empty interval");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
  int n = count_halfopen(a, b);
  if (squarefree().sign_at(b) == 0) --n;
  return n;
}

int sturm_sign_changes(const PolyQ& p, const Rational& a, const Rational& b) {
  return SturmChain(p).count_halfopen(a, b);
}

void IsolatingInterval::refine_to(const Rational& width) {
  if (is_exact()) return;
  int slo = defining_poly.sign_at(lo);
  if (slo == 0) {
    hi = lo;
    return;
  }
  if (defining_poly.sign_at(hi) == 0) {
    lo = hi;
    return;
  }
  while (hi - lo > width) {
    Rational mid = midpoint();
    int sm = defining_poly.sign_at(mid);
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

bool IsolatingInterval::equals(const Rational& q) const {
  if (is_exact()) return lo == q;
  return lo <= q && q <= hi && defining_poly.sign_at(q) == 0;
}

double IsolatingInterval::approx() const {
  IsolatingInterval t = *this;
  t.refine_to(pow2_inverse(60));
  return t.midpoint().convert_to<double>();
}

std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p, const Rational& a,
                                                  const Rational& b, const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no roots to isolate");
  if (!(a < b)) throw std::invalid_argument("empty interval");
  if (!(width > 0)) throw std::invalid_argument("width must be positive");
  SturmChain chain(p);
  const PolyQ& q = chain.squarefree();
  std::vector<IsolatingInterval> out;

  std::function<void(const Rational&, const Rational&)> subdivide =
      [&](const Rational& lo, const Rational& hi) {
        int n = chain.count_open(lo, hi);
        if (n == 0) return;
        if (n == 1) {
          int slo = q.sign_at(lo), shi = q.sign_at(hi);
          if (slo != 0 && shi != 0 && slo != shi) {
            IsolatingInterval iv{q, lo, hi};
            iv.refine_to(width);
            out.push_back(std::move(iv));
            return;
          }
        }
        Rational mid = (lo + hi) / 2;
        subdivide(lo, mid);
        if (q.sign_at(mid) == 0) out.push_back(IsolatingInterval{q, mid, mid});
        subdivide(mid, hi);
      };
  subdivide(a, b);

  // Collapse intervals that contain a rational root to exact points.
  for (auto& iv : out) snap_rational_root(q, iv);

  // Shrink any intervals that touch until they are pairwise disjoint.
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i].hi >= out[i + 1].lo) {
        Rational w = out[i].width() + out[i + 1].width();
        out[i].refine_to(w / 4);
        out[i + 1].refine_to(w / 4);
        again = true;
      }
    }
  }
  return out;
}

std::vector<Rational> rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (p.degree() == 0) return {};
  std::set<Rational> roots;
  // Isolate every real root of the square-free part and snap each interval to
  // the unique rational candidate it can contain; exact hits are the roots.
  PolyQ q = p.squarefree_part().primitive_integer();
  Rational bound = q.cauchy_root_bound();
  for (IsolatingInterval& iv : isolate_real_roots(q, -bound, bound, Rational(1, 2)))
    if (iv.is_exact()) roots.insert(iv.lo);
  return {roots.begin(), roots.end()};
}

Positivity positive_on_open_interval(const PolyQ& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  if (!(a < b)) throw std::invalid_argument("empty interval");
  if (p.degree() == 0)
    return p.leading() > 0 ? Positivity::StrictlyPositive : Positivity::NegativeSomewhere;

  auto roots = isolate_real_roots(p, a, b, (b - a) / 8);
  // Pull every interval strictly inside (a, b).
  for (auto& iv : roots) {
    Rational w = iv.width();
    while (iv.lo <= a || iv.hi >= b) {
      w /= 2;
      iv.refine_to(w);
    }
  }

  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back((a + b) / 2);
  } else {
    samples.push_back((a + roots.front().lo) / 2);
    for (size_t i = 0; i + 1 < roots.size(); ++i)
      samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    samples.push_back((roots.back().hi + b) / 2);
  }
  for (const auto& x : samples) {
    int s = p.sign_at(x);
    if (s == 0) throw std::logic_error("sample hit a root");
    if (s < 0) return Positivity::NegativeSomewhere;
  }
  return roots.empty() ? Positivity::StrictlyPositive : Positivity::VanishesInside;
}

bool algebraic_is_rational(const Algebraic& x) {
  if (std::holds_alternative<Rational>(x)) return true;
  return std::get<IsolatingInterval>(x).is_exact();
}

double algebraic_approx(const Algebraic& x) {
  if (std::holds_alternative<Rational>(x))
    return std::get<Rational>(x).convert_to<double>();
  return std::get<IsolatingInterval>(x).approx();
}

bool algebraic_less(const Algebraic& a, const Algebraic& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return std::get<Rational>(a) < std::get<Rational>(b);
  if (std::holds_alternative<Rational>(a)) {
    const Rational& r = std::get<Rational>(a);
    IsolatingInterval iv = std::get<IsolatingInterval>(b);
    if (iv.equals(r)) return false;
    while (iv.lo <= r && r <= iv.hi) iv.refine_to(iv.width() / 2);
    return r < iv.lo;
  }
  if (std::holds_alternative<Rational>(b)) {
    const Rational& r = std::get<Rational>(b);
    IsolatingInterval iv = std::get<IsolatingInterval>(a);
    if (iv.equals(r)) return false;
    while (iv.lo <= r && r <= iv.hi) iv.refine_to(iv.width() / 2);
    return iv.hi < r;
  }
  IsolatingInterval x = std::get<IsolatingInterval>(a);
  IsolatingInterval y = std::get<IsolatingInterval>(b);
  for (int iter = 0; iter < 4096; ++iter) {
    if (x.hi < y.lo) return true;
    if (y.hi < x.lo) return false;
    if (x.is_exact() && y.is_exact()) return x.lo < y.lo;
    x.refine_to(x.width() / 2);
    y.refine_to(y.width() / 2);
  }
  throw std::logic_error("could not separate algebraic numbers");
}

Rational default_isolation_width() {
  if (const char* env = std::getenv("SASAKI_ISOLATION_WIDTH")) {
    std::string s(env);
    if (s.rfind("1/2^", 0) == 0) {
      unsigned k = static_cast<unsigned>(std::stoul(s.substr(4)));
      return pow2_inverse(k);
    }
    Rational w = parse_rational(s);
    if (!(w > 0)) throw std::invalid_argument("SASAKI_ISOLATION_WIDTH must be positive");
    return w;
  }
  return pow2_inverse(40);
}

}  // namespace sasaki
