#include <algorithm>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "idealorder/error.hpp"
#include "idealorder/padic/padic_sort.hpp"
#include "test_support.hpp"

using namespace idealorder;
using arith::Integer;
using arith::IntPoly;
using padic::PadicFactorApprox;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(IDEALORDER_FIXTURE_DIR) + "/" + name + ".json";
}

PadicFactorApprox approx(long p, unsigned k, std::vector<long> coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return PadicFactorApprox{p, k, c, padic::Provenance::InternalHensel};
}

std::vector<unsigned> key(const PadicFactorApprox& h) { return padic::digit_key(h).digits; }

std::multiset<std::vector<Integer>> coeff_set(const std::vector<PadicFactorApprox>& fs) {
  std::multiset<std::vector<Integer>> out;
  for (const auto& f : fs) out.insert(f.coeffs);
  return out;
}

// The five degree-2 factors of the decic over Z_3, modulo 27, in the
// numbering h_1..h_5 used throughout.
const std::vector<std::vector<long>> kDecicMod27{{1, 3}, {5, 5}, {11, 7}, {23, 23}, {14, 13}};

int decic_index(const PadicFactorApprox& h) {
  for (std::size_t i = 0; i < kDecicMod27.size(); ++i) {
    Integer pk = arith::ipow(3, h.k);
    if (arith::mod(kDecicMod27[i][0], pk) == h.coeffs[0] && arith::mod(kDecicMod27[i][1], pk) == h.coeffs[1])
      return static_cast<int>(i) + 1;
  }
  return 0;
}

Integer product_residue_check(const IntPoly& g, const std::vector<PadicFactorApprox>& fs, const Integer& p,
                              unsigned k) {
  Integer pk = arith::ipow(p, k);
  IntPoly prod{1};
  for (const auto& f : fs) prod = (prod * f.poly()).reduce(pk);
  return (prod - g.reduce(pk)).reduce(pk).is_zero() ? 1 : 0;
}

}  // namespace

TEST_CASE("digit keys") {
  CHECK(key(approx(3, 3, {1, 3})) == std::vector<unsigned>{1, 0, 0, 1, 0, 0});
  CHECK(key(approx(3, 3, {14, 13})) == std::vector<unsigned>{2, 1, 1, 1, 1, 1});
  CHECK(key(approx(7, 4, {0})) == std::vector<unsigned>{0, 0, 0, 0});
  CHECK(key(approx(3, 3, {5, 5})).size() == 6);
}

TEST_CASE("sorting factors") {
  CHECK(padic::sort_factors({approx(5, 2, {3})}) == std::vector<PadicFactorApprox>{approx(5, 2, {3})});
  // Degree first, then key.
  auto sorted = padic::sort_factors({approx(5, 1, {0, 0}), approx(5, 1, {4}), approx(5, 1, {1})});
  CHECK(sorted[0].coeffs == std::vector<Integer>{1});
  CHECK(sorted[1].coeffs == std::vector<Integer>{4});
  CHECK(sorted[2].degree() == 2);
  CHECK_THROWS_AS(padic::sort_factors({approx(5, 1, {1}), approx(5, 1, {1})}), NeedsMorePrecision);
  CHECK_THROWS_AS(padic::sort_factors({approx(5, 1, {1}), approx(5, 2, {2})}), InvalidInput);
}

TEST_CASE("Dedekind cubic factors") {
  auto two = padic::padic_factors(test_support::kDedekindCubic, 2, 2);
  CHECK(coeff_set(two) == std::multiset<std::vector<Integer>>{{0}, {2}, {1}});
  auto big = padic::padic_factors(test_support::kDedekindCubic, 503, 2);
  CHECK(coeff_set(big) == std::multiset<std::vector<Integer>>{{191929}, {87617, 61079}});
  for (const auto& f : big) CHECK(f.provenance == padic::Provenance::InternalHensel);
}

TEST_CASE("degree-10 field above 3") {
  const IntPoly& g = test_support::kDecic;
  SUBCASE("k = 1") {
    auto fs = padic::padic_factors(g, 3, 1);
    CHECK(coeff_set(fs) == std::multiset<std::vector<Integer>>{{1, 0}, {2, 2}, {2, 1}, {2, 2}, {2, 1}});
    std::multiset<std::vector<unsigned>> keys;
    for (const auto& f : fs) keys.insert(key(f));
    CHECK(keys == std::multiset<std::vector<unsigned>>{{1, 0}, {2, 2}, {2, 1}, {2, 2}, {2, 1}});
  }
  SUBCASE("k = 2") {
    auto fs = padic::padic_factors(g, 3, 2);
    CHECK(coeff_set(fs) == std::multiset<std::vector<Integer>>{{1, 3}, {5, 5}, {2, 7}, {5, 5}, {5, 4}});
    std::map<int, std::vector<unsigned>> by_index;
    for (const auto& f : fs) by_index[decic_index(f)] = key(f);
    CHECK(by_index[1] == std::vector<unsigned>{1, 0, 0, 1});
    CHECK(by_index[2] == std::vector<unsigned>{2, 2, 1, 1});
    CHECK(by_index[3] == std::vector<unsigned>{2, 1, 0, 2});
    CHECK(by_index[5] == std::vector<unsigned>{2, 1, 1, 1});
    try {
      padic::sort_factors(fs);
      FAIL("h_2 and h_4 should tie mod 9");
    } catch (const NeedsMorePrecision& e) {
      CHECK(e.precision() == 2);
    }
  }
  SUBCASE("k = 3") {
    auto fs = padic::padic_factors(g, 3, 3);
    std::map<int, std::vector<unsigned>> by_index;
    for (const auto& f : fs) by_index[decic_index(f)] = key(f);
    REQUIRE(by_index.size() == 5);
    CHECK(by_index[1] == std::vector<unsigned>{1, 0, 0, 1, 0, 0});
    CHECK(by_index[2] == std::vector<unsigned>{2, 2, 1, 1, 0, 0});
    CHECK(by_index[3] == std::vector<unsigned>{2, 1, 0, 2, 1, 0});
    CHECK(by_index[4] == std::vector<unsigned>{2, 2, 1, 1, 2, 2});
    CHECK(by_index[5] == std::vector<unsigned>{2, 1, 1, 1, 1, 1});
    std::vector<int> order;
    for (const auto& f : padic::sort_factors(fs)) order.push_back(decic_index(f));
    CHECK(order == std::vector<int>{1, 3, 5, 2, 4});
  }
  SUBCASE("escalation") {
    auto sorted = padic::sorted_padic_factors(g, 3);
    CHECK(sorted.precision == 4);
    std::vector<int> order;
    for (const auto& f : sorted.factors) order.push_back(decic_index(f.truncate(3)));
    CHECK(order == std::vector<int>{1, 3, 5, 2, 4});
    CHECK_THROWS_AS(padic::sorted_padic_factors(g, 3, nullptr, {}, 2, 2), PrecisionExhausted);
  }
}

TEST_CASE("fixture factors replace a cluster the search cannot split") {
  field::FieldData decic = field::load_fixture_file(fixture_path("decic"));
  const field::FixturePrimeBlock* block = decic.block(3);
  REQUIRE(block);
  REQUIRE(block->padic);
  padic::FactorOptions tight;
  tight.candidate_budget = 0;
  auto internal = padic::padic_factors(test_support::kDecic, 3, 5);
  auto mixed = padic::padic_factors(test_support::kDecic, 3, 5, &*block->padic, tight);
  CHECK(coeff_set(mixed) == coeff_set(internal));
  unsigned from_fixture = 0;
  for (const auto& f : mixed) from_fixture += f.provenance == padic::Provenance::Fixture;
  CHECK(from_fixture == 4);
  CHECK_THROWS_AS(padic::padic_factors(test_support::kDecic, 3, 5, nullptr, tight), FixtureRequired);
  CHECK_THROWS_AS(padic::padic_factors(test_support::kDecic, 3, 9, &*block->padic, tight), FixtureRequired);
  // A prime count equal to the number of clusters needs no search.
  padic::FactorOptions counted = tight;
  counted.prime_count = 2;
  auto cubic503 = padic::padic_factors(test_support::kDedekindCubic, 503, 2, nullptr, counted);
  CHECK(coeff_set(cubic503) == std::multiset<std::vector<Integer>>{{191929}, {87617, 61079}});
}

TEST_CASE("product, degree and prefix properties over the shipped fixtures") {
  for (const char* name : {"dedekind-cubic", "decic", "gaussian", "eisenstein", "golden", "field-3-2"}) {
    CAPTURE(name);
    field::FieldData data = field::load_fixture_file(fixture_path(name));
    const IntPoly& g = data.field.polynomial();
    std::set<Integer> primes;
    for (const auto& [p, block] : data.primes) primes.insert(p);
    for (long q : test_support::small_primes(50)) primes.insert(q);
    for (const Integer& p : primes) {
      CAPTURE(p.get_str());
      std::vector<PadicFactorApprox> previous;
      for (unsigned k = 1; k <= 6; ++k) {
        auto fs = padic::padic_factors(data.field, p, k, data.block(p));
        CHECK(product_residue_check(g, fs, p, k) == 1);
        unsigned total = 0;
        for (const auto& f : fs) {
          total += f.degree();
          CHECK(f.k == k);
          CHECK(f.provenance == padic::Provenance::InternalHensel);
          for (const Integer& c : f.coeffs) CHECK((c >= 0 && c < arith::ipow(p, k)));
        }
        CHECK(total == static_cast<unsigned>(g.degree()));
        if (const auto* block = data.block(p)) {
          std::multiset<unsigned> want, got;
          for (const auto& q : block->primes) want.insert(q.e * q.f);
          for (const auto& f : fs) got.insert(f.degree());
          CHECK(got == want);
        }
        if (!previous.empty()) {
          std::multiset<std::vector<unsigned>> truncated, before;
          for (const auto& f : fs) {
            std::vector<unsigned> kk = key(f);
            truncated.insert(std::vector<unsigned>(kk.begin(), kk.begin() + f.degree() * (k - 1)));
          }
          for (const auto& f : previous) before.insert(key(f));
          CHECK(truncated == before);
        }
        previous = fs;
      }
    }
  }
}

TEST_CASE("precision cap from the environment") {
  CHECK(padic::precision_cap() == 64);
  setenv("IDEALORDER_PRECISION_CAP", "16", 1);
  CHECK(padic::precision_cap() == 16);
  setenv("IDEALORDER_PRECISION_CAP", "zero", 1);
  CHECK(padic::precision_cap() == 64);
  unsetenv("IDEALORDER_PRECISION_CAP");
}
