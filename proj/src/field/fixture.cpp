#include "idealorder/field/fixture.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "idealorder/arith/factor.hpp"
#include "idealorder/error.hpp"

namespace idealorder::field {

using nlohmann::json;

namespace {

struct SchemaError {
  std::string what;
};

Integer json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    if (auto n = arith::parse_integer(v.get<std::string>())) return *n;
  }
  throw SchemaError{where + ": expected an integer"};
}

unsigned json_unsigned(const json& v, const std::string& where) {
  Integer n = json_integer(v, where);
  if (n < 0 || n > 1000000) throw SchemaError{where + ": expected a small nonnegative integer"};
  return static_cast<unsigned>(n.get_ui());
}

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(json_integer(v, where));
  if (v.is_string()) {
    try {
      return arith::parse_rational(v.get<std::string>());
    } catch (const InvalidInput&) {
    }
  }
  throw SchemaError{where + ": expected a rational string \"a/b\""};
}

std::vector<Rational> json_rationals(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n)
    throw SchemaError{where + ": expected an array of " + std::to_string(n) + " rationals"};
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(json_rational(v[i], where));
  return out;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError{where + ": missing \"" + key + "\""};
  return obj.at(key);
}

// Parsed document before semantic checks.
struct RawFixture {
  std::string label;
  unsigned degree = 0;
  IntPoly poly;
  Integer field_disc;
  BasisMatrix basis;
  std::map<Integer, FixturePrimeBlock> primes;
};

RawFixture parse_document(const json& doc) {
  RawFixture raw;
  if (!doc.is_object()) throw SchemaError{"top level must be an object"};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw SchemaError{"label: expected a string"};
    raw.label = doc["label"].get<std::string>();
  }
  raw.degree = json_unsigned(member(doc, "degree", "top level"), "degree");
  const json& poly = member(doc, "poly", "top level");
  if (!poly.is_array() || poly.empty()) throw SchemaError{"poly: expected a nonempty integer array"};
  std::vector<Integer> coeffs;
  for (const json& c : poly) coeffs.push_back(json_integer(c, "poly"));
  raw.poly = IntPoly(std::move(coeffs));
  const json& disc = member(doc, "field_disc", "top level");
  if (disc.is_string()) {
    try {
      raw.field_disc = parse_factored_integer(disc.get<std::string>());
    } catch (const InvalidInput& e) {
      throw SchemaError{std::string("field_disc: ") + e.what()};
    }
  } else {
    raw.field_disc = json_integer(disc, "field_disc");
  }
  const std::size_t n = raw.degree;
  const json& basis = member(doc, "integral_basis", "top level");
  if (!basis.is_array() || basis.size() != n)
    throw SchemaError{"integral_basis: expected " + std::to_string(n) + " rows"};
  for (std::size_t j = 0; j < n; ++j)
    raw.basis.push_back(json_rationals(basis[j], n, "integral_basis row " + std::to_string(j + 1)));
  const json& primes = member(doc, "primes", "top level");
  if (!primes.is_object()) throw SchemaError{"primes: expected an object keyed by prime"};
  for (const auto& [key, entries] : primes.items()) {
    const std::string where = "primes[" + key + "]";
    auto p = arith::parse_integer(key);
    if (!p || *p < 2) throw SchemaError{where + ": key must be a positive decimal integer"};
    if (!entries.is_array() || entries.empty()) throw SchemaError{where + ": expected a nonempty array"};
    FixturePrimeBlock block;
    block.p = *p;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const json& entry = entries[i];
      const std::string ew = where + "[" + std::to_string(i) + "]";
      FixturePrime prime;
      prime.e = json_unsigned(member(entry, "e", ew), ew + ".e");
      prime.f = json_unsigned(member(entry, "f", ew), ew + ".f");
      if (prime.e == 0 || prime.f == 0) throw SchemaError{ew + ": e and f must be positive"};
      prime.beta = FieldElement{json_rationals(member(entry, "beta", ew), n, ew + ".beta")};
      const json& tau = member(entry, "tau", ew);
      if (!tau.is_null()) prime.tau = FieldElement{json_rationals(tau, n, ew + ".tau")};
      if (entry.contains("name")) {
        if (!entry["name"].is_string()) throw SchemaError{ew + ".name: expected a string"};
        prime.name = entry["name"].get<std::string>();
      }
      if (entry.contains("padic_factors") && !entry["padic_factors"].is_null()) {
        const json& pf = entry["padic_factors"];
        const std::string pw = ew + ".padic_factors";
        unsigned k = json_unsigned(member(pf, "precision_k", pw), pw + ".precision_k");
        if (k == 0) throw SchemaError{pw + ".precision_k must be positive"};
        if (block.padic && block.padic->precision != k)
          throw SchemaError{where + ": all padic_factors must share one precision_k"};
        if (!block.padic) block.padic = PadicFixture{k, {}};
        const json& list = member(pf, "coeffs_mod_pk", pw);
        if (!list.is_array()) throw SchemaError{pw + ".coeffs_mod_pk: expected an array of coefficient arrays"};
        for (const json& factor : list) {
          if (!factor.is_array() || factor.empty())
            throw SchemaError{pw + ".coeffs_mod_pk: each factor needs at least one coefficient"};
          std::vector<Integer> c;
          for (const json& x : factor) c.push_back(json_integer(x, pw));
          c.push_back(1);  // implicit monic leading term
          block.padic->factors.emplace_back(std::move(c));
        }
      }
      block.primes.push_back(std::move(prime));
    }
    raw.primes.emplace(block.p, std::move(block));
  }
  return raw;
}

class Reporter {
 public:
  explicit Reporter(ValidationReport& report) : report_(report) {}
  bool check(const std::string& name, bool ok, const std::string& detail = {}) {
    report_.checks.push_back({name, ok, ok ? std::string() : detail});
    return ok;
  }

 private:
  ValidationReport& report_;
};

std::string prime_tag(const std::string& check, const Integer& p) { return check + " p=" + arith::to_string(p); }

void check_block(const NumberField& k, const FixturePrimeBlock& block, Reporter& rep) {
  const Integer& p = block.p;
  const unsigned n = k.degree();
  if (!rep.check(prime_tag("prime", p), arith::is_prime(p), arith::to_string(p) + " is not prime")) return;
  unsigned sum = 0;
  for (const auto& q : block.primes) sum += q.e * q.f;
  rep.check(prime_tag("sum_ef", p), sum == n,
            "sum of e*f over primes above " + arith::to_string(p) + " is " + std::to_string(sum) + ", expected degree " +
                std::to_string(n));
  bool integral = true;
  for (const auto& q : block.primes) integral = integral && k.is_integral(q.beta);
  rep.check(prime_tag("beta_integral", p), integral, "some beta is not an algebraic integer");

  const bool ramified_poly = mpz_divisible_p(k.polynomial_discriminant().get_mpz_t(), p.get_mpz_t()) != 0;
  bool all_tau = std::all_of(block.primes.begin(), block.primes.end(), [](const FixturePrime& q) { return q.tau.has_value(); });
  if (ramified_poly)
    rep.check(prime_tag("tau_present", p), all_tau, "tau is required when p divides disc(g)");

  if (all_tau) {
    const FieldElement pe = k.from_integer(p);
    std::string bad;
    for (std::size_t i = 0; i < block.primes.size() && bad.empty(); ++i) {
      const auto& q = block.primes[i];
      unsigned v = k.tau_valuation(pe, *q.tau, p, q.e + 1);
      if (v != q.e)
        bad = "prime #" + std::to_string(i + 1) + ": v(p) = " + std::to_string(v) + " but e = " + std::to_string(q.e);
    }
    rep.check(prime_tag("valuation_of_p", p), bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < block.primes.size() && bad.empty(); ++i) {
      const FieldElement scaled = k.scale(*block.primes[i].tau, Rational(p));
      if (!k.is_p_integral(scaled, p)) {
        bad = "p*tau of prime #" + std::to_string(i + 1) + " is not p-integral";
        break;
      }
      for (std::size_t j = 0; j < block.primes.size(); ++j) {
        const auto& q = block.primes[j];
        unsigned v = k.tau_valuation(scaled, *q.tau, p, q.e + 1);
        bool ok = (i == j) ? v == q.e - 1 : v >= q.e;
        if (!ok) {
          bad = "v_" + std::to_string(j + 1) + "(p*tau_" + std::to_string(i + 1) + ") = " + std::to_string(v);
          break;
        }
      }
    }
    rep.check(prime_tag("tau_valuations", p), bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < block.primes.size() && bad.empty(); ++i) {
      for (std::size_t j = 0; j < block.primes.size(); ++j) {
        const auto& q = block.primes[j];
        if (!k.is_p_integral(block.primes[i].beta, p)) {
          bad = "beta of prime #" + std::to_string(i + 1) + " is not p-integral";
          break;
        }
        unsigned v = k.tau_valuation(block.primes[i].beta, *q.tau, p, q.e + 1);
        bool ok = (i == j) ? std::min(v, q.e) == 1 : v == 0;
        if (!ok) {
          bad = "(p, beta_" + std::to_string(i + 1) + ") has valuation " + std::to_string(v) + " at prime #" +
                std::to_string(j + 1);
          break;
        }
      }
    }
    rep.check(prime_tag("generator", p), bad.empty(), bad);
  } else if (!ramified_poly) {
    // Dedekind-Kummer: (p, beta) must cut out one irreducible factor of g mod p.
    std::string bad;
    std::vector<arith::ModPoly> seen;
    for (std::size_t i = 0; i < block.primes.size() && bad.empty(); ++i) {
      const auto& q = block.primes[i];
      Integer den = 1;
      for (const Rational& c : q.beta.coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        bad = "beta of prime #" + std::to_string(i + 1) + " has a denominator divisible by p";
        break;
      }
      std::vector<Integer> b;
      for (const Rational& c : q.beta.coords) b.push_back(Integer(c * den));
      arith::ModPoly h = arith::poly_gcd_mod_p(arith::ModPoly(k.polynomial(), p), arith::ModPoly(IntPoly(b), p));
      auto factors = arith::factor_mod_p(h.lift(), p);
      if (q.e != 1 || factors.size() != 1 || factors[0].multiplicity != 1 || h.degree() != static_cast<int>(q.f) ||
          std::find(seen.begin(), seen.end(), h) != seen.end())
        bad = "(p, beta_" + std::to_string(i + 1) + ") does not match an irreducible factor of degree f";
      seen.push_back(h);
    }
    rep.check(prime_tag("generator", p), bad.empty(), bad);
  }

  if (block.padic) {
    const Integer modulus = arith::ipow(p, block.padic->precision);
    std::string bad;
    arith::ModPoly product = arith::ModPoly::one(modulus);
    std::vector<unsigned> degrees, expected;
    for (const IntPoly& h : block.padic->factors) {
      if (!h.is_monic() || h.reduce(modulus) != h) bad = "factor " + h.to_string() + " is not monic with reduced coefficients";
      product = product * arith::ModPoly(h, modulus);
      degrees.push_back(static_cast<unsigned>(h.degree()));
    }
    for (const auto& q : block.primes) expected.push_back(q.e * q.f);
    std::sort(degrees.begin(), degrees.end());
    std::sort(expected.begin(), expected.end());
    if (bad.empty() && product != arith::ModPoly(k.polynomial(), modulus)) bad = "product of factors differs from g mod p^k";
    if (bad.empty() && degrees != expected) bad = "factor degrees differ from the multiset {e*f}";
    rep.check(prime_tag("padic_factors", p), bad.empty(), bad);
  }
}

}  // namespace

const FixturePrimeBlock* FieldData::block(const Integer& p) const {
  auto it = primes.find(p);
  return it == primes.end() ? nullptr : &it->second;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

Integer parse_factored_integer(const std::string& text) {
  if (auto plain = arith::parse_integer(text)) return *plain;
  std::string s = text;
  Integer sign = 1;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    s.erase(0, 1);
  }
  Integer value = 1;
  std::stringstream ss(s);
  std::string term;
  bool any = false;
  while (std::getline(ss, term, '*')) {
    auto caret = term.find('^');
    auto base = arith::parse_integer(term.substr(0, caret));
    if (!base || *base < 1) throw InvalidInput("malformed factored integer '" + text + "'");
    unsigned long exp = 1;
    if (caret != std::string::npos) {
      auto e = arith::parse_integer(term.substr(caret + 1));
      if (!e || *e < 1) throw InvalidInput("malformed factored integer '" + text + "'");
      exp = e->get_ui();
    }
    value *= arith::ipow(*base, exp);
    any = true;
  }
  if (!any) throw InvalidInput("malformed factored integer '" + text + "'");
  return sign * value;
}

ValidationReport validate_fixture(const json& document) {
  ValidationReport report;
  Reporter rep(report);
  RawFixture raw;
  try {
    raw = parse_document(document);
  } catch (const SchemaError& e) {
    if (document.is_object() && document.contains("label") && document["label"].is_string())
      report.label = document["label"].get<std::string>();
    rep.check("schema", false, e.what);
    return report;
  }
  report.label = raw.label;
  rep.check("schema", true);
  if (!rep.check("degree", raw.poly.degree() == static_cast<int>(raw.degree),
                 "poly has degree " + std::to_string(raw.poly.degree()) + ", document says " + std::to_string(raw.degree)))
    return report;
  std::optional<NumberField> k;
  try {
    k.emplace(raw.poly, raw.basis, raw.field_disc, raw.label);
  } catch (const ValidationError& e) {
    rep.check(e.check(), false, e.what());
    return report;
  }
  for (const char* name : {"poly_monic", "disc_nonzero", "basis_shape", "basis_discriminant", "basis_order"})
    rep.check(name, true);
  for (const auto& [p, block] : raw.primes) {
    try {
      check_block(*k, block, rep);
    } catch (const Error& e) {
      rep.check(prime_tag("prime_data", p), false, e.what());
    }
  }
  return report;
}

FieldData load_fixture(const json& document) {
  ValidationReport report = validate_fixture(document);
  if (const ValidationCheck* bad = report.first_failure()) {
    throw ValidationError(bad->name, "fixture " + (report.label.empty() ? std::string("<unnamed>") : report.label) +
                                         ": check '" + bad->name + "' failed: " + bad->detail);
  }
  RawFixture raw = parse_document(document);
  FieldData data{NumberField(raw.poly, raw.basis, raw.field_disc, raw.label), std::move(raw.primes)};
  return data;
}

json parse_json_exact(const std::string& text) {
  // Integer literals that do not fit in 64 bits would be read as doubles, so
  // quote them first; the loaders accept integers written as strings.
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) out += text[++i];
      else if (c == '"') in_string = false;
      ++i;
      continue;
    }
    if (c == '"') {
      in_string = true;
      out += c;
      ++i;
      continue;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      bool plain = j == text.size() || (text[j] != '.' && text[j] != 'e' && text[j] != 'E');
      std::string token = text.substr(i, j - i);
      if (plain && token.size() > 18) out += '"' + token + '"';
      else out += token;
      i = j;
      continue;
    }
    out += c;
    ++i;
  }
  return json::parse(out);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_exact(buf.str());
  } catch (const json::parse_error& e) {
    throw ValidationError("schema", path + ": " + e.what());
  }
}

FieldData load_fixture_file(const std::string& path) { return load_fixture(read_json_file(path)); }

}  // namespace idealorder::field
