#include <algorithm>
#include <random>

#include "doctest.h"
#include "idealorder/error.hpp"
#include "idealorder/ideals/ideal_order.hpp"
#include "idealorder/primes/prime_order.hpp"

using namespace idealorder;
using namespace idealorder::ideals;
using arith::Integer;

namespace {

field::FieldData load(const std::string& name) {
  return field::load_fixture_file(std::string(IDEALORDER_FIXTURE_DIR) + "/" + name + ".json");
}

// 2 = p1 p2 p3 with f = 1, 1, 2 and 3 = q1 q2 with f = 1, 3.
FixedProfiles two_three_field() {
  return FixedProfiles({{2, {{1, 1}, {1, 1}, {1, 2}}}, {3, {{1, 1}, {1, 3}}}}, 4);
}

const SplittingProfile kFourPrimes{7, {{1, 1}, {1, 1}, {1, 1}, {1, 2}}};

Ideal ideal(const FixedProfiles& src, ExponentVector at2, ExponentVector at3) {
  return make_ideal(src, {{2, std::move(at2)}, {3, std::move(at3)}});
}

// Number of ideals of norm n in Z[i]: sum over d | n of chi_{-4}(d).
long gaussian_count(long n) {
  long total = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0 && d % 2 == 1) total += (d % 4 == 1) ? 1 : -1;
  return total;
}

Ideal random_ideal(const ProfileSource& src, std::mt19937_64& rng, long max_norm) {
  std::uniform_int_distribution<long> norm(1, max_norm);
  for (;;) {
    Integer n = norm(rng);
    Integer c = count_norm(src, n);
    if (c == 0) continue;
    std::uniform_int_distribution<unsigned long> idx(1, c.get_ui());
    return unrank(src, IdealLabel{n, idx(rng)});
  }
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight({2, 0, 0, 0}) == 2);
  CHECK(weight({0, 0, 0, 1}) == 1);
  CHECK(weight({0, 0, 0}) == 0);
}

TEST_CASE("prime-power chains with f = (1,1,1,2)") {
  CHECK(enumerate_prime_power(kFourPrimes, 1) == std::vector<ExponentVector>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(enumerate_prime_power(kFourPrimes, 2) ==
        std::vector<ExponentVector>{{0, 0, 0, 1}, {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0},
                                    {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}});
  CHECK(enumerate_prime_power(kFourPrimes, 3) ==
        std::vector<ExponentVector>{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {3, 0, 0, 0}, {2, 1, 0, 0},
                                    {2, 0, 1, 0}, {1, 2, 0, 0}, {1, 1, 1, 0}, {1, 0, 2, 0}, {0, 3, 0, 0},
                                    {0, 2, 1, 0}, {0, 1, 2, 0}, {0, 0, 3, 0}});
  CHECK(count_prime_power(kFourPrimes, 3) == 13);
  CHECK(cmp_prime_power(kFourPrimes, {0, 0, 0, 1}, {2, 0, 0, 0}) < 0);
  CHECK(cmp_prime_power(kFourPrimes, {1, 0, 0, 0}, {1, 0, 0, 0}) == 0);
  CHECK_THROWS_AS((void)cmp_prime_power(kFourPrimes, {1, 0}, {1, 0, 0, 0}), InvalidInput);
  for (unsigned n = 0; n <= 8; ++n) {
    auto all = enumerate_prime_power(kFourPrimes, n);
    CHECK(Integer(all.size()) == count_prime_power(kFourPrimes, n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(rank_prime_power(kFourPrimes, all[i]) == Integer(i));
      CHECK(unrank_prime_power(kFourPrimes, n, i) == all[i]);
    }
  }
}

TEST_CASE("norms 18 and 108") {
  auto src = two_three_field();
  auto n18 = enumerate_norm(src, Integer(18));
  CHECK(n18 == std::vector<Ideal>{ideal(src, {1, 0, 0}, {2, 0}), ideal(src, {0, 1, 0}, {2, 0})});
  CHECK(cmp_ideals(src, n18[0], n18[1]) < 0);

  std::vector<Ideal> expected;
  for (ExponentVector a : std::vector<ExponentVector>{{0, 0, 1}, {2, 0, 0}, {1, 1, 0}, {0, 2, 0}})
    for (ExponentVector b : std::vector<ExponentVector>{{0, 1}, {3, 0}}) expected.push_back(ideal(src, a, b));
  CHECK(enumerate_norm(src, Integer(108)) == expected);
  CHECK(count_norm(src, Integer(108)) == 8);
  CHECK(count_norm(src, Integer(1)) == 1);

  CHECK(rank(src, ideal(src, {2, 0, 0}, {3, 0})).to_string() == "108.4");
  CHECK(unrank(src, IdealLabel::parse("18.2")) == ideal(src, {0, 1, 0}, {2, 0}));
  CHECK(unrank(src, IdealLabel::parse("108.1")) == ideal(src, {0, 0, 1}, {0, 1}));
  CHECK(rank(src, unit_ideal()).to_string() == "1.1");
  CHECK(unrank(src, IdealLabel{1, 1}) == unit_ideal());
  CHECK_THROWS_WITH_AS(unrank(src, IdealLabel{108, 9}), doctest::Contains("valid indices 1..8"), NoSuchIdeal);
  CHECK_THROWS_AS(unrank(src, IdealLabel{1, 2}), NoSuchIdeal);
}

TEST_CASE("norm 108 where 2 splits with f = (1,1,2) and 3 with f = (1,3)") {
  primes::PrimeCatalog catalog(load("field-3-2"));
  CHECK(catalog.profile(2) == SplittingProfile{2, {{1, 1}, {1, 1}, {1, 2}}});
  CHECK(catalog.profile(3) == SplittingProfile{3, {{1, 1}, {1, 3}}});
  std::vector<std::string> got;
  for (const auto& a : enumerate_norm(catalog, Integer(108))) got.push_back(format_factorization(catalog, a));
  CHECK(got == std::vector<std::string>{"4.1*27.1", "3.1^3*4.1", "2.1^2*27.1", "2.1^2*3.1^3", "2.1*2.2*27.1",
                                        "2.1*2.2*3.1^3", "2.2^2*27.1", "2.2^2*3.1^3"});
  CHECK(rank(catalog, parse_factorization(catalog, "2.1^2*3.1^3")).to_string() == "108.4");
  CHECK(rank(catalog, parse_factorization(catalog, "2.1*3.1^2")).to_string() == "18.1");
  CHECK(format_factorization(catalog, unrank(catalog, IdealLabel{18, 2})) == "2.2*3.1^2");
}

TEST_CASE("inert norms and missing profiles") {
  FixedProfiles src({{3, {{1, 2}}}});
  CHECK(enumerate_norm(src, Integer(3)).empty());
  CHECK(count_norm(src, Integer(3)) == 0);
  CHECK(count_norm(src, Integer(9)) == 1);
  CHECK_THROWS_AS(count_norm(src, Integer(10)), FixtureRequired);
}

TEST_CASE("label grammar") {
  CHECK(IdealLabel::parse("108.4") == IdealLabel{108, 4});
  CHECK(IdealLabel{Integer("123456789012345678901234567890"), 2}.to_string() == "123456789012345678901234567890.2");
  for (const char* bad : {"108", "108.", ".4", "0.1", "5.0", "05.1", "5.01", "-5.1", "5.-1", "5.1.1", "a.1", "5 .1"})
    CHECK_THROWS_AS(IdealLabel::parse(bad), InvalidInput);
}

TEST_CASE("factorization strings") {
  auto src = two_three_field();
  auto a = ideal(src, {0, 0, 2}, {0, 1});
  CHECK(format_factorization(src, a) == "4.1^2*27.1");
  CHECK(parse_factorization(src, "27.1*4.1^2") == a);
  CHECK(parse_factorization(src, "4.1*4.1*27.1") == a);
  CHECK(format_factorization(src, ideal(src, {1, 1, 0}, {3, 0})) == "2.1*2.2*3.1^3");
  CHECK(format_factorization(src, unit_ideal()) == "(1)");
  CHECK(parse_factorization(src, "(1)") == unit_ideal());
  CHECK_THROWS_AS(parse_factorization(src, "2.3"), NoSuchIdeal);
  CHECK_THROWS_AS(parse_factorization(src, "6.1"), NoSuchIdeal);
  CHECK_THROWS_AS(parse_factorization(src, "2.1^0"), InvalidInput);
  CHECK_THROWS_AS(parse_factorization(src, "2.1**3.1"), InvalidInput);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto x = random_ideal(src, rng, 5000);
    CHECK(parse_factorization(src, format_factorization(src, x)) == x);
  }
}

TEST_CASE("multiplication") {
  auto src = two_three_field();
  auto p1 = prime_ideal(src, 2, 0);
  CHECK(multiply(src, p1, p1) == ideal(src, {2, 0, 0}, {0, 0}));
  auto a = ideal(src, {1, 0, 0}, {2, 0});
  CHECK(multiply(src, a, unit_ideal()) == a);
  CHECK(multiply(src, a, prime_ideal(src, 3, 0)) == ideal(src, {1, 0, 0}, {3, 0}));
  CHECK(multiply(src, a, prime_ideal(src, 3, 0)).norm == 54);
}

TEST_CASE("third prime of norm 9 in the decic") {
  auto d = load("decic");
  primes::PrimeCatalog catalog(d);
  auto a = unrank(catalog, IdealLabel::parse("9.3"));
  REQUIRE(a.components.size() == 1);
  const auto& above = catalog.primes_above(3);
  auto v = a.components.at(3);
  auto pos = static_cast<std::size_t>(std::find(v.begin(), v.end(), 1u) - v.begin());
  CHECK(above.primes[pos].prime.name == "a");
}

TEST_CASE("Gaussian ideal counts") {
  primes::PrimeCatalog catalog(load("gaussian"));
  for (long n = 1; n <= 1000; ++n) {
    INFO("N = " << n);
    CHECK(count_norm(catalog, Integer(n)) == gaussian_count(n));
  }
}

TEST_CASE("rank agrees with enumeration and unrank inverts it") {
  struct Case {
    const char* fixture;
    long limit;
  };
  for (auto [name, limit] : {Case{"gaussian", 5000}, Case{"eisenstein", 5000}, Case{"golden", 5000},
                             Case{"dedekind-cubic", 2000}, Case{"field-3-2", 2000}}) {
    primes::PrimeCatalog catalog(load(name));
    for (long n = 1; n <= limit; ++n) {
      auto all = enumerate_norm(catalog, Integer(n));
      REQUIRE(Integer(all.size()) == count_norm(catalog, Integer(n)));
      for (std::size_t i = 0; i < all.size(); ++i) {
        IdealLabel label{n, i + 1};
        if (rank(catalog, all[i]) != label) FAIL_CHECK(name << ": rank of entry " << i << " of norm " << n);
        if (unrank(catalog, label) != all[i]) FAIL_CHECK(name << ": unrank " << label.to_string());
        if (i > 0 && cmp_ideals(catalog, all[i - 1], all[i]) >= 0)
          FAIL_CHECK(name << ": enumeration out of order at norm " << n);
      }
    }
  }
}

TEST_CASE("primes come first in their norm") {
  for (const char* name : {"dedekind-cubic", "decic", "gaussian"}) {
    auto d = load(name);
    primes::PrimeCatalog catalog(d);
    std::vector<Integer> ps;
    for (const auto& [p, b] : d.primes) ps.push_back(p);
    for (long p : {2, 3, 5, 7, 11, 13}) ps.push_back(p);
    for (const auto& p : ps) {
      const auto& above = catalog.primes_above(p);
      for (const auto& lp : above.primes) {
        auto label = rank(catalog, prime_ideal(catalog, p, &lp - above.primes.data()));
        CHECK(label.norm == lp.label.norm);
        CHECK(label.index == lp.label.index);
      }
    }
  }
}

TEST_CASE("monoid law and order axioms") {
  std::mt19937_64 rng(99);
  auto synthetic = two_three_field();
  primes::PrimeCatalog gaussian(load("gaussian"));
  primes::PrimeCatalog cubic(load("dedekind-cubic"));
  for (const ProfileSource* src : std::initializer_list<const ProfileSource*>{&synthetic, &gaussian, &cubic}) {
    int strict = 0;
    for (int t = 0; t < 500; ++t) {
      auto a = random_ideal(*src, rng, 1000);
      auto b = random_ideal(*src, rng, 1000);
      auto c = random_ideal(*src, rng, 1000);
      auto ab = cmp_ideals(*src, a, b);
      CHECK((cmp_ideals(*src, b, a) <=> 0) == (0 <=> ab));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) {
        ++strict;
        CHECK(cmp_ideals(*src, multiply(*src, a, c), multiply(*src, b, c)) < 0);
        if (cmp_ideals(*src, b, c) < 0) CHECK(cmp_ideals(*src, a, c) < 0);
      }
    }
    CHECK(strict > 100);
  }
}
