#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "idealorder/field/number_field.hpp"

namespace idealorder::field {

/// p-adic factors of g shipped with a fixture: monic, coefficients in [0, p^k).
struct PadicFixture {
  unsigned precision = 0;
  std::vector<IntPoly> factors;
};

struct FixturePrime {
  unsigned e = 0;
  unsigned f = 0;
  FieldElement beta;
  std::optional<FieldElement> tau;
  std::string name;
};

/// Everything a fixture says about the primes above one rational prime.
/// Entry order is whatever the document used and carries no meaning.
struct FixturePrimeBlock {
  Integer p;
  std::vector<FixturePrime> primes;
  std::optional<PadicFixture> padic;
};

struct FieldData {
  NumberField field;
  std::map<Integer, FixturePrimeBlock> primes;

  const FixturePrimeBlock* block(const Integer& p) const;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::string label;
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* first_failure() const;
};

/// Runs every fixture check and reports each one; never throws on bad data.
ValidationReport validate_fixture(const nlohmann::json& document);

/// Loads a fixture, throwing ValidationError (naming the field label and the
/// failing check) unless every check passes.
FieldData load_fixture(const nlohmann::json& document);
FieldData load_fixture_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);
/// JSON parse that keeps integers wider than 64 bits exact (as strings).
nlohmann::json parse_json_exact(const std::string& text);

/// Parses "5^5*41^8", "-1*2^2*503", or a plain decimal.
Integer parse_factored_integer(const std::string& text);

}  // namespace idealorder::field
