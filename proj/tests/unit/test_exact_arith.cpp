#include <random>

#include "doctest.h"
#include "idealorder/arith/factor.hpp"
#include "idealorder/error.hpp"
#include "test_support.hpp"

using namespace idealorder;
using namespace idealorder::arith;
using test_support::kDecic;
using test_support::kDedekindCubic;

namespace {

ModPoly mp(long p, std::initializer_list<long> c) { return ModPoly(IntPoly(c), Integer(p)); }

ModPoly expand(const std::vector<ModFactor>& fs, const Integer& p) {
  ModPoly r = ModPoly::one(p);
  for (const auto& f : fs)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.factor;
  return r;
}

}  // namespace

TEST_CASE("discriminant") {
  CHECK(discriminant(kDedekindCubic) == -2012);
  CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
  Integer expected = ipow(3, 12) * ipow(5, 5) * ipow(41, 8) * ipow(2141, 2) * ipow(26641, 2);
  CHECK(discriminant(kDecic) == expected);
  CHECK_THROWS_AS(discriminant(IntPoly{1, 0, 2}), InvalidInput);
  CHECK_THROWS_AS(discriminant(IntPoly{5}), InvalidInput);
}

TEST_CASE("resultant sign convention and Karatsuba agree with schoolbook") {
  CHECK(resultant(IntPoly{-1, 1}, IntPoly{-2, 1}) == -1);  // Res(X-1, X-2) = 1 - 2
  std::mt19937_64 rng(7);
  IntPoly a = test_support::random_monic(rng, 70, 1000);
  IntPoly b = test_support::random_monic(rng, 45, 1000);
  std::vector<Integer> naive(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) naive[i + j] += a.coeffs()[i] * b.coeffs()[j];
  CHECK((a * b).coeffs() == naive);
}

TEST_CASE("factor_mod_p examples") {
  auto f2 = factor_mod_p(kDedekindCubic, 2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == ModFactor{mp(2, {0, 1}), 2});
  CHECK(f2[1] == ModFactor{mp(2, {1, 1}), 1});
  CHECK(expand(f2, 2) == ModPoly(kDedekindCubic, 2));

  auto gauss = factor_mod_p(IntPoly{1, 0, 1}, 2);
  REQUIRE(gauss.size() == 1);
  CHECK(gauss[0] == ModFactor{mp(2, {1, 1}), 2});

  auto f503 = factor_mod_p(kDedekindCubic, 503);
  REQUIRE(f503.size() == 2);
  CHECK(f503[0] == ModFactor{mp(503, {108, 1}), 2});
  CHECK(f503[1] == ModFactor{mp(503, {286, 1}), 1});
  // The published 503-adic factors reduce to these.
  CHECK(mp(503, {191929, 1}) == f503[1].factor);
  CHECK(mp(503, {87617, 61079, 1}) == f503[0].factor * f503[0].factor);

  CHECK_THROWS_AS(factor_mod_p(kDedekindCubic, 4), InvalidInput);
  CHECK_THROWS_AS(factor_mod_p(IntPoly{1, 2}, 3), InvalidInput);
}

TEST_CASE("decic factors mod 3 into three squarefree clusters") {
  auto f3 = factor_mod_p(kDecic, 3);
  REQUIRE(f3.size() == 3);
  CHECK(f3[0] == ModFactor{mp(3, {1, 0, 1}), 1});
  CHECK(f3[1] == ModFactor{mp(3, {2, 1, 1}), 2});
  CHECK(f3[2] == ModFactor{mp(3, {2, 2, 1}), 2});
}

TEST_CASE("poly_gcd_mod_p") {
  CHECK(poly_gcd_mod_p(mp(503, {95, 216, 1}), mp(503, {108, 1})) == mp(503, {108, 1}));
  CHECK(poly_gcd_mod_p(mp(7, {3, 0, 2}), mp(7, {})) == mp(7, {5, 0, 1}));  // 2X^2+3 scaled by 4
  CHECK(poly_gcd_mod_p(mp(3, {1, 1}), mp(3, {2, 1})).is_one());
  CHECK_THROWS_AS(poly_gcd_mod_p(mp(9, {1, 1}), mp(9, {2, 1})), InvalidInput);
}

TEST_CASE("hensel_lift") {
  auto lifted = hensel_lift(IntPoly{-1, 0, 1}, {mp(3, {1, 1}), mp(3, {2, 1})}, 3, 2);
  REQUIRE(lifted.size() == 2);
  CHECK(lifted[0] == mp(9, {1, 1}));
  CHECK(lifted[1] == mp(9, {8, 1}));

  std::vector<ModPoly> clusters;
  for (const auto& f : factor_mod_p(kDecic, 3)) {
    ModPoly c = ModPoly::one(3);
    for (unsigned i = 0; i < f.multiplicity; ++i) c = c * f.factor;
    clusters.push_back(c);
  }
  auto decic = hensel_lift(kDecic, clusters, 3, 3);
  ModPoly product = ModPoly::one(27);
  for (std::size_t i = 0; i < decic.size(); ++i) {
    CHECK(decic[i].reduce(3) == clusters[i]);
    CHECK(decic[i].is_monic());
    product = product * decic[i];
  }
  CHECK(product == ModPoly(kDecic, 27));

  CHECK_THROWS_AS(hensel_lift(kDedekindCubic, {mp(2, {0, 1}), mp(2, {1, 1})}, 2, 2), NotCoprime);
  CHECK_THROWS_AS(hensel_lift(IntPoly{-1, 0, 1}, {mp(3, {1, 1}), mp(3, {1, 1})}, 3, 2), NotCoprime);
}

TEST_CASE("newton_split lifts a non-coprime approximate split") {
  // (X - 1)(X - 1 - 27) = X^2 - 29X + 28: the roots agree mod 27.
  IntPoly c{28, -29, 1};
  // Start from factors known mod 3^7 with Res valuation 3.
  LiftedPair r = newton_split(c, IntPoly{-1, 1}, IntPoly{-28, 1}, 3, 7, 12);
  CHECK(r.precision == 9);
  Integer m = ipow(3, 9);
  CHECK(r.a.reduce(m) == IntPoly{-1, 1}.reduce(m));
  CHECK(r.b.reduce(m) == IntPoly{-28, 1}.reduce(m));
  CHECK_THROWS_AS(newton_split(c, IntPoly{-1, 1}, IntPoly{-28, 1}, 3, 6, 12), InvalidInput);
}

TEST_CASE("factor_mod_p property: product identity and irreducibility") {
  std::mt19937_64 rng(20240611);
  auto primes = test_support::small_primes(97);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    IntPoly f = test_support::random_monic(rng, deg(rng), 50);
    Integer p = primes[pick(rng)];
    auto factors = factor_mod_p(f, p);
    CHECK(expand(factors, p) == ModPoly(f, p));
    bool repeated = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(factors[i].factor.is_monic());
      CHECK(test_support::is_irreducible_mod_p(factors[i].factor));
      if (factors[i].multiplicity > 1) repeated = true;
      if (i > 0) CHECK(degree_lex_less(factors[i - 1].factor, factors[i].factor));
    }
    if (f.degree() >= 2) CHECK((mod(discriminant(f), p) == 0) == repeated);
    CHECK(factor_mod_p(f, p, 99) == factors);
  }
}

TEST_CASE("hensel_lift property: reduction and product identity") {
  std::mt19937_64 rng(99);
  for (long p : {2L, 3L, 5L, 7L, 11L, 101L}) {
    for (int trial = 0; trial < 20; ++trial) {
      IntPoly f = test_support::random_monic(rng, 6, 30);
      std::vector<ModPoly> parts;
      bool squarefree = true;
      for (const auto& mf : factor_mod_p(f, p)) {
        if (mf.multiplicity > 1) squarefree = false;
        parts.push_back(mf.factor);
      }
      if (!squarefree) continue;
      const unsigned k = 5;
      auto lifted = hensel_lift(f, parts, p, k);
      Integer m = ipow(p, k);
      ModPoly product = ModPoly::one(m);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(lifted[i].reduce(p) == parts[i]);
        product = product * lifted[i];
      }
      CHECK(product == ModPoly(f, m));
    }
  }
}

TEST_CASE("integer factorization and parsing") {
  Factorization f = factor_integer(Integer("24952891341003125"));
  CHECK(f == Factorization{{5, 5}, {41, 8}});
  Integer big = Integer("1000000007") * Integer("998244353");
  CHECK(factor_integer(big) == Factorization{{Integer("998244353"), 1}, {Integer("1000000007"), 1}});
  CHECK(as_prime_power(27) == PrimePower{3, 3});
  CHECK(!as_prime_power(12));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK(!parse_integer("007"));
  CHECK(parse_poly("X^3 - X^2 + 2*X + 8") == kDedekindCubic);
  CHECK(parse_poly("x^2+1") == IntPoly{1, 0, 1});
  CHECK(kDedekindCubic.to_string() == "X^3 - X^2 + 2*X + 8");
}
