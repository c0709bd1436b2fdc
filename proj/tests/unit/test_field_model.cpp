#include <random>
#include <set>

#include "doctest.h"
#include "idealorder/error.hpp"
#include "idealorder/field/fixture.hpp"
#include "test_support.hpp"

using namespace idealorder;
using field::FieldElement;
using field::NumberField;
using arith::Integer;
using arith::Rational;

namespace {

const std::vector<std::string> kFixtures{"dedekind-cubic", "decic", "gaussian", "eisenstein", "golden", "field-3-2"};

std::string fixture_path(const std::string& name) {
  return std::string(IDEALORDER_FIXTURE_DIR) + "/" + name + ".json";
}

FieldElement elem(std::initializer_list<Rational> c) { return FieldElement{std::vector<Rational>(c)}; }

NumberField dedekind_field() {
  field::BasisMatrix basis{{1, 0, 0}, {0, 1, 0}, {0, Rational(1, 2), Rational(1, 2)}};
  return NumberField(test_support::kDedekindCubic, basis, -503, "3.1.503.1");
}

FieldElement random_element(const NumberField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  std::vector<Rational> c;
  for (unsigned i = 0; i < k.degree(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return FieldElement{c};
}

}  // namespace

TEST_CASE("element multiplication reduces modulo g") {
  NumberField k = dedekind_field();
  FieldElement a = elem({0, 1, 0});
  CHECK(field::element_mul(a, a, k) == elem({0, 0, 1}));
  CHECK(field::element_mul(field::element_mul(a, a, k), a, k) == elem({-8, -2, 1}));
  CHECK(k.pow(a, 3) == elem({-8, -2, 1}));
  CHECK(k.evaluate(test_support::kDedekindCubic) == k.zero());
}

TEST_CASE("integral basis coordinates") {
  NumberField k = dedekind_field();
  // (a^2 - a)/2 = -b_1 + b_2 with b_2 = (a^2 + a)/2.
  FieldElement x = elem({0, Rational(-1, 2), Rational(1, 2)});
  std::vector<Rational> c = field::coords_in_integral_basis(x, k);
  CHECK(c == std::vector<Rational>{0, -1, 1});
  CHECK(k.is_integral(x));
  CHECK_FALSE(k.is_integral(elem({0, Rational(1, 2), 0})));
  CHECK(k.is_p_integral(elem({0, Rational(1, 3), 0}), 2));
  CHECK_FALSE(k.is_p_integral(elem({0, Rational(1, 3), 0}), 3));
}

TEST_CASE("constructor rejects bad bases") {
  using field::BasisMatrix;
  auto check_name = [](auto&& make, const std::string& name) {
    try {
      make();
      FAIL("no error for " << name);
    } catch (const ValidationError& e) {
      CHECK(e.check() == name);
    }
  };
  check_name([] { NumberField(arith::IntPoly{8, 2, -1, 2}, BasisMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, -2012); },
             "poly_monic");
  check_name([] { NumberField(arith::IntPoly{0, 0, 1}, BasisMatrix{{1, 0}, {0, 1}}, 0); }, "disc_nonzero");
  check_name([] {
    NumberField(test_support::kDedekindCubic, BasisMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, -2012);
  }, "basis_shape");
  check_name([] {
    NumberField(test_support::kDedekindCubic, BasisMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, -503);
  }, "basis_discriminant");
  // (a^2)/2 has the right index but a^4/4 is not in the lattice.
  check_name([] {
    NumberField(test_support::kDedekindCubic, BasisMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, Rational(1, 2)}}, -503);
  }, "basis_order");
}

TEST_CASE("tau valuation") {
  // Z[i] above 2: tau = (1+i)/2 has v = -1.
  NumberField k = NumberField::from_power_basis(arith::IntPoly{1, 0, 1});
  FieldElement tau = elem({Rational(1, 2), Rational(1, 2)});
  CHECK(k.tau_valuation(k.from_integer(2), tau, 2) == 2);
  CHECK(k.tau_valuation(elem({1, 1}), tau, 2) == 1);
  CHECK(k.tau_valuation(k.from_integer(8), tau, 2, 3) == 3);
  CHECK(k.tau_valuation(k.zero(), tau, 2, 5) == 5);
  CHECK_THROWS_AS(k.tau_valuation(elem({Rational(1, 2), 0}), tau, 2), InvalidInput);
}

TEST_CASE("shipped fixtures load and validate") {
  for (const auto& name : kFixtures) {
    CAPTURE(name);
    field::ValidationReport rep = field::validate_fixture(field::read_json_file(fixture_path(name)));
    if (!rep.ok()) FAIL(rep.first_failure()->name << ": " << rep.first_failure()->detail);
    CHECK_NOTHROW(field::load_fixture_file(fixture_path(name)));
  }
  field::FieldData cubic = field::load_fixture_file(fixture_path("dedekind-cubic"));
  const auto* two = cubic.block(2);
  REQUIRE(two != nullptr);
  unsigned sum = 0;
  for (const auto& q : two->primes) {
    CHECK(q.f == 1);
    sum += q.e * q.f;
  }
  CHECK(sum == 3);
  std::multiset<std::pair<unsigned, unsigned>> ef;
  for (const auto& q : cubic.block(503)->primes) ef.insert({q.e, q.f});
  CHECK(ef == std::multiset<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}});

  field::FieldData decic = field::load_fixture_file(fixture_path("decic"));
  CHECK(decic.field.field_discriminant() == Integer("24952891341003125"));
  CHECK(decic.block(3)->primes.size() == 5);
}

TEST_CASE("tampered fixtures fail the matching check") {
  nlohmann::json doc = field::read_json_file(fixture_path("dedekind-cubic"));
  SUBCASE("ramification index") {
    doc["primes"]["2"][0]["e"] = 2;
    field::ValidationReport rep = field::validate_fixture(doc);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first_failure()->name == "sum_ef p=2");
    try {
      field::load_fixture(doc);
      FAIL("loaded a bad fixture");
    } catch (const ValidationError& e) {
      CHECK(e.check() == "sum_ef p=2");
      CHECK(std::string(e.what()).find("3.1.503.1") != std::string::npos);
    }
  }
  SUBCASE("schema") {
    doc.erase("poly");
    CHECK(field::validate_fixture(doc).first_failure()->name == "schema");
  }
  SUBCASE("generator") {
    doc["primes"]["2"][0]["beta"] = {"1", "0", "0"};
    CHECK_FALSE(field::validate_fixture(doc).ok());
  }
  SUBCASE("tau") {
    doc["primes"]["2"][0]["tau"] = nullptr;
    CHECK(field::validate_fixture(doc).first_failure()->name == "tau_present p=2");
  }
}

TEST_CASE("ring axioms and coordinate round trip in every fixture field") {
  std::mt19937_64 rng(20240611);
  for (const auto& name : kFixtures) {
    CAPTURE(name);
    field::FieldData data = field::load_fixture_file(fixture_path(name));
    const NumberField& k = data.field;
    for (int t = 0; t < 100; ++t) {
      FieldElement x = random_element(k, rng), y = random_element(k, rng), z = random_element(k, rng);
      if (t < 30) {
        CHECK(k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z)));
        CHECK(k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z)));
        CHECK(k.mul(x, y) == k.mul(y, x));
        CHECK(k.mul(x, k.one()) == x);
      }
      CHECK(k.from_integral_coords(k.coords_in_integral_basis(x)) == x);
    }
  }
}

TEST_CASE("factored integers") {
  CHECK(field::parse_factored_integer("5^5*41^8") == Integer("24952891341003125"));
  CHECK(field::parse_factored_integer("-1*2^2*503") == -2012);
  CHECK(field::parse_factored_integer("-503") == -503);
  CHECK_THROWS_AS(field::parse_factored_integer("5^"), InvalidInput);
}
