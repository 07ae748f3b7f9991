#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sasaki/topology.hpp"

#include <numeric>

using namespace sasaki;

TEST_CASE("join parameter validation") {
  CHECK_THROWS_AS(make_join_params(0, 1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_join_params(2, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_join_params(2, 1, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_join_params(2, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_weight_vector(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_weight_vector(0, 1), std::invalid_argument);

  JoinParams p = make_join_params(2, 1, 3, 5);  // reordered to w1 >= w2
  CHECK(p.w1 == 5);
  CHECK(p.w2 == 3);
  CHECK(p.swapped);
  CHECK_FALSE(make_join_params(2, 1, 5, 3).swapped);
}

TEST_CASE("contact invariants golden examples") {
  ContactInvariants even = contact_invariants(make_join_params(2, 1, 11, 1));
  CHECK(even.c1_coefficient == -14);
  CHECK(even.bundle_type == BundleType::Trivial);
  CHECK(even.k == 6);
  CHECK(even.m == 5);
  CHECK(even.n == 10);

  ContactInvariants odd = contact_invariants(make_join_params(2, 1, 12, 1));
  CHECK(odd.c1_coefficient == -15);
  CHECK(odd.bundle_type == BundleType::NonTrivial);
  CHECK(odd.k == 6);
  CHECK(odd.m == 5);
  CHECK(odd.n == 11);
}

TEST_CASE("bouquet table for k = 4, trivial bundle") {
  BouquetTable t = bouquet_table(2, 4, BundleType::Trivial);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.c1_coefficient == -10);
  CHECK(t.bouquet_asserted);
  const long long expect[4][4] = {{0, 4, 1, 1}, {1, 1, 5, 3}, {2, 2, 3, 1}, {3, 1, 7, 1}};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i].m == expect[i][0]);
    CHECK(t.rows[i].l == expect[i][1]);
    CHECK(t.rows[i].w1 == expect[i][2]);
    CHECK(t.rows[i].w2 == expect[i][3]);
  }
}

TEST_CASE("bouquet table for k = 4, non-trivial bundle") {
  BouquetTable t = bouquet_table(2, 4, BundleType::NonTrivial);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.c1_coefficient == -11);
  CHECK_FALSE(t.bouquet_asserted);
  const long long expect[4][4] = {{0, 1, 5, 4}, {1, 3, 2, 1}, {2, 1, 7, 2}, {3, 1, 8, 1}};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(t.rows[i].m == expect[i][0]);
    CHECK(t.rows[i].l == expect[i][1]);
    CHECK(t.rows[i].w1 == expect[i][2]);
    CHECK(t.rows[i].w2 == expect[i][3]);
  }
}

TEST_CASE("(k, m) and (l, w) coordinates are inverse to each other") {
  for (long long k = 1; k <= 50; ++k)
    for (long long m = 0; m < k; ++m)
      for (BundleType b : {BundleType::Trivial, BundleType::NonTrivial}) {
        LW lw = params_from_km(k, m, b);
        CHECK(std::gcd(lw.w1, lw.w2) == 1);
        CHECK(lw.w1 >= lw.w2);
        ContactInvariants ci = km_from_params(make_join_params(3, lw.l, lw.w1, lw.w2));
        CHECK(ci.k == k);
        CHECK(ci.m == m);
        CHECK(ci.bundle_type == b);
        CHECK(ci.n == (b == BundleType::Trivial ? 2 * m : 2 * m + 1));
      }
  CHECK_THROWS_AS(params_from_km(4, 4, BundleType::Trivial), std::invalid_argument);
  CHECK_THROWS_AS(params_from_km(0, 0, BundleType::Trivial), std::invalid_argument);
}

TEST_CASE("quotient orbifold golden examples") {
  auto orb = quotient_orbifold(make_join_params(23, 1, 12, 1), make_weight_vector(6, 1));
  REQUIRE(orb.has_value());
  CHECK(orb->n == 6);
  CHECK(orb->r == Rational(1, 3));
  CHECK(orb->p == 1);
  CHECK(orb->q == 6);
  CHECK(orb->s_sigma == Rational(-22, 3));
  CHECK(orb->k == 9);
  CHECK(orb->ramification_zero == 6);
  CHECK(orb->ramification_infinity == 1);

  auto small = quotient_orbifold(make_join_params(2, 1, 2, 1), make_weight_vector(1, 1));
  REQUIRE(small.has_value());
  CHECK(small->n == 1);
  CHECK(small->r == Rational(1, 3));
  CHECK(small->s_sigma == Rational(-2));
}

TEST_CASE("product ray is reported as nullopt") {
  JoinParams p = make_join_params(5, 2, 7, 3);
  CHECK_FALSE(quotient_orbifold(p, make_weight_vector(7, 3)).has_value());
  CHECK(quotient_orbifold(p, make_weight_vector(3, 7)).has_value());
}

TEST_CASE("quotient r always lies in (-1, 1) minus zero") {
  for (long long w1 : {1, 2, 5, 12})
    for (long long w2 : {1, 3, 7}) {
      if (std::gcd(w1, w2) != 1) continue;
      JoinParams p = make_join_params(4, 2, w1, w2);
      for (long long v1 : {1, 2, 3, 11})
        for (long long v2 : {1, 4, 9}) {
          if (std::gcd(v1, v2) != 1) continue;
          auto orb = quotient_orbifold(p, make_weight_vector(v1, v2));
          if (!orb) continue;
          CHECK(orb->r > -1);
          CHECK(orb->r < 1);
          CHECK(orb->r != 0);
          CHECK(orb->n == p.l * (p.w1 * v2 - p.w2 * v1));
          CHECK(orb->s_sigma * Rational(orb->n) == Rational(2 * (1 - p.g)));
        }
    }
}
