#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sasaki/poly.hpp"
#include "sasaki/roots.hpp"

#include <cstdlib>
#include <random>

using namespace sasaki;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(n, d); }

PolyQ from_ints(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long x : coeffs) c.emplace_back(x);
  return PolyQ(std::move(c));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(Q(1, 2)) == "1/2");
  CHECK(to_string(Q(-3)) == "-3");
  CHECK(to_string(Q(4, 2)) == "2");
  CHECK(parse_rational("22/7") == Q(22, 7));
  CHECK(parse_rational("-5") == Q(-5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(pow2_inverse(3) == Q(1, 8));
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational a = Q(6, 4);
  CHECK(num(a) == 3);
  CHECK(den(a) == 2);
  Rational b = a * Q(2, 3);
  CHECK(num(b) == 1);
  CHECK(den(b) == 1);
}

TEST_CASE("polynomial basics") {
  PolyQ z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  PolyQ p = from_ints({-1, 0, 1});  // z^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Q(2)) == Q(3));
  CHECK(p.sign_at(Q(0)) == -1);
  CHECK(p.derivative() == from_ints({0, 2}));
  CHECK((p * p).degree() == 4);
  CHECK(p - p == PolyQ{});
  auto [q, r] = (p * p).divmod(p);
  CHECK(q == p);
  CHECK(r.is_zero());
  CHECK_THROWS_AS(p.divmod(PolyQ{}), std::invalid_argument);
}

TEST_CASE("gcd and square-free part") {
  PolyQ root1 = PolyQ::linear_root(Q(1));
  PolyQ p = root1 * root1 * PolyQ::linear_root(Q(-2));  // (z-1)^2 (z+2)
  PolyQ sf = p.squarefree_part();
  CHECK(sf.degree() == 2);
  CHECK(sf.sign_at(Q(1)) == 0);
  CHECK(sf.sign_at(Q(-2)) == 0);
  CHECK(PolyQ::gcd(p, p.derivative()).degree() == 1);
}

TEST_CASE("primitive integer normalization") {
  PolyQ p{Q(-1, 6), Q(1, 2)};
  PolyQ prim = p.primitive_integer();
  CHECK(prim == from_ints({-1, 3}));
  // Negative leading coefficient is flipped.
  CHECK((-p).primitive_integer() == from_ints({-1, 3}));
}

TEST_CASE("sturm counts match the worked examples") {
  CHECK(sturm_sign_changes(from_ints({1, 0, 1}), Q(-1), Q(1)) == 0);
  CHECK(sturm_sign_changes(from_ints({-1, -4, 4, 4}), Q(0), Q(1)) == 1);
  CHECK(sturm_sign_changes(from_ints({-1, 0, 1}), Q(-1), Q(1)) == 1);  // root at +1, half-open
  CHECK_THROWS_AS(sturm_sign_changes(PolyQ{}, Q(0), Q(1)), std::invalid_argument);
}

TEST_CASE("sturm handles repeated roots via the square-free part") {
  PolyQ p = PolyQ::linear_root(Q(0)) * PolyQ::linear_root(Q(0));  // z^2
  CHECK(sturm_sign_changes(p, Q(-1), Q(1)) == 1);
  SturmChain chain(p);
  CHECK(chain.count_open(Q(-1), Q(1)) == 1);
  CHECK(chain.count_open(Q(0), Q(1)) == 0);
}

TEST_CASE("root isolation golden examples") {
  auto sqrt2 = isolate_real_roots(from_ints({-2, 0, 1}), Q(0), Q(10), Q(1, 1024));
  REQUIRE(sqrt2.size() == 1);
  CHECK(sqrt2[0].width() <= Q(1, 1024));
  CHECK(sqrt2[0].lo < Q(142, 100));
  CHECK(sqrt2[0].hi > Q(141, 100));

  auto g23 = isolate_real_roots(from_ints({-1, -46, 288, 144}), Q(0), Q(1), pow2_inverse(20));
  REQUIRE(g23.size() == 1);
  CHECK(g23[0].equals(Q(1, 6)));

  auto quartic = isolate_real_roots(from_ints({37, 5820, 197748, -1528416, 1622592}),
                                    Q(1, 4), Q(1), pow2_inverse(20));
  REQUIRE(quartic.size() == 1);
  CHECK(quartic[0].lo > Q(77, 100));
  CHECK(quartic[0].hi < Q(79, 100));
}

TEST_CASE("isolation returns exact points for rational roots") {
  PolyQ p = PolyQ::linear_root(Q(1, 2)) * from_ints({-2, 0, 1});
  auto roots = isolate_real_roots(p, Q(0), Q(10), Q(1, 4096));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].is_exact());
  CHECK(roots[0].lo == Q(1, 2));
  CHECK_FALSE(roots[1].is_exact());
  // Pairwise disjoint and sorted.
  CHECK(roots[0].hi < roots[1].lo);
}

TEST_CASE("rational root test") {
  CHECK(rational_roots(from_ints({-1, -4, 4, 4})).empty());
  auto roots = rational_roots(from_ints({-1, -25, 36, 144}));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Q(1, 3));
  auto unit = rational_roots(from_ints({-1, 1}));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == Q(1));
  auto with_zero = rational_roots(from_ints({0, 0, -1, 1}));
  REQUIRE(with_zero.size() == 2);
  CHECK(with_zero[0] == Q(0));
  CHECK(with_zero[1] == Q(1));
}

TEST_CASE("positivity verdicts") {
  CHECK(positive_on_open_interval(PolyQ{Q(39, 4), Q(11, 2), Q(5, 4)}, Q(-1), Q(1)) ==
        Positivity::StrictlyPositive);
  CHECK(positive_on_open_interval(from_ints({0, 0, 1}), Q(-1), Q(1)) ==
        Positivity::VanishesInside);
  CHECK(positive_on_open_interval(from_ints({-1, 0, 1}), Q(-1), Q(1)) ==
        Positivity::NegativeSomewhere);
  CHECK_THROWS_AS(positive_on_open_interval(PolyQ{}, Q(-1), Q(1)), std::invalid_argument);
}

TEST_CASE("positivity tangency at a double root") {
  PolyQ p = PolyQ::linear_root(Q(1, 3)) * PolyQ::linear_root(Q(1, 3));
  CHECK(positive_on_open_interval(p, Q(-1), Q(1)) == Positivity::VanishesInside);
  // Root at the endpoint does not count as an interior zero.
  PolyQ q = PolyQ::linear_root(Q(1)) * PolyQ::linear_root(Q(1));
  CHECK(positive_on_open_interval(q, Q(-1), Q(1)) == Positivity::StrictlyPositive);
}

TEST_CASE("sampling oracle never contradicts the sturm verdict") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    int deg = 1 + trial % 5;
    for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
    PolyQ p(std::move(c));
    if (p.is_zero()) continue;
    Positivity verdict = positive_on_open_interval(p, Q(-1), Q(1));
    bool found_negative = false, found_zero = false;
    const int grid = 2000;
    for (int i = 1; i < grid; ++i) {
      int s = p.sign_at(Q(-1) + Q(2 * i, grid));
      if (s < 0) found_negative = true;
      if (s == 0) found_zero = true;
    }
    if (found_negative) CHECK(verdict == Positivity::NegativeSomewhere);
    if (!found_negative && found_zero) CHECK(verdict != Positivity::StrictlyPositive);
    if (verdict == Positivity::StrictlyPositive) CHECK_FALSE(found_negative);
  }
}

TEST_CASE("isolation count agrees with sturm count") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i <= 4; ++i) c.emplace_back(coeff(rng));
    PolyQ p(std::move(c));
    if (p.degree() < 1) continue;
    SturmChain chain(p);
    auto roots = isolate_real_roots(p, Q(-20), Q(20), Q(1, 1 << 12));
    CHECK(static_cast<int>(roots.size()) == chain.count_open(Q(-20), Q(20)));
    for (const Rational& r : rational_roots(p)) {
      if (r <= Q(-20) || r >= Q(20)) continue;
      bool found = false;
      for (const auto& iv : roots) found = found || iv.equals(r);
      CHECK(found);
    }
  }
}

TEST_CASE("isolating interval refinement and comparison") {
  PolyQ p = from_ints({-2, 0, 1});
  IsolatingInterval iv{p, Q(1), Q(2)};
  iv.refine_to(pow2_inverse(30));
  CHECK(iv.width() <= pow2_inverse(30));
  CHECK(iv.approx() == doctest::Approx(1.41421356237).epsilon(1e-9));

  Algebraic a = iv;
  Algebraic b = Q(3, 2);
  CHECK(algebraic_less(a, b));
  CHECK_FALSE(algebraic_less(b, a));
  CHECK_FALSE(algebraic_is_rational(a));
  CHECK(algebraic_is_rational(b));

  IsolatingInterval jv{from_ints({-3, 0, 1}), Q(1), Q(2)};
  CHECK(algebraic_less(Algebraic{iv}, Algebraic{jv}));
}

TEST_CASE("default isolation width env override") {
  unsetenv("SASAKI_ISOLATION_WIDTH");
  CHECK(default_isolation_width() == pow2_inverse(40));
  setenv("SASAKI_ISOLATION_WIDTH", "1/2^12", 1);
  CHECK(default_isolation_width() == pow2_inverse(12));
  unsetenv("SASAKI_ISOLATION_WIDTH");
}
