#include "idealorder/primes/prime_order.hpp"

#include <algorithm>
#include <numeric>

#include "idealorder/error.hpp"

namespace idealorder::primes {

using arith::IntPoly;
using arith::Rational;

namespace {

void require_prime(const Integer& p) {
  if (p < 2 || !arith::is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
}

bool divides(const Integer& p, const Integer& n) { return n % p == 0; }

// Power-basis numerator of beta after clearing the p-free denominators.
IntPoly numerator_poly(const FieldElement& beta, const Integer& p) {
  Integer d = 1;
  for (const auto& c : beta.coords) d = lcm(d, Integer(c.get_den()));
  if (divides(p, d)) throw InvalidInput("generator is not p-integral in the power basis for p=" + p.get_str());
  std::vector<Integer> b;
  b.reserve(beta.coords.size());
  for (const auto& c : beta.coords) b.push_back(Integer(c * d));
  return IntPoly(std::move(b));
}

// prod_{j != i} h_j(a) / p for the residue factors of an unramified p.
FieldElement unramified_tau(const NumberField& field, const Integer& p, const std::vector<ModPoly>& residues,
                            std::size_t i) {
  FieldElement t = field.one();
  for (std::size_t j = 0; j < residues.size(); ++j)
    if (j != i) t = field.mul(t, field.evaluate(residues[j].lift()));
  return field.scale(t, Rational(1, p));
}

FieldElement derive_tau(const PrimeIdeal& prime, const NumberField& field) {
  if (divides(prime.p, field.polynomial_discriminant()))
    throw FixtureRequired("no valuation element for a prime above p=" + prime.p.get_str() +
                          ", which divides disc(g)");
  if (prime.e * prime.f == field.degree()) return field.scale(field.one(), Rational(1, prime.p));
  auto found = recover_factor_from_generator(field, prime.p, prime.beta);
  if (found.degenerate)
    throw InvalidInput("generator does not determine a prime above p=" + prime.p.get_str());
  std::vector<ModPoly> residues;
  std::optional<std::size_t> self;
  for (auto& mf : arith::factor_mod_p(field.polynomial(), prime.p)) {
    if (mf.factor == found.factor) self = residues.size();
    residues.push_back(std::move(mf.factor));
  }
  if (!self) throw InvalidInput("generator lies in several primes above p=" + prime.p.get_str());
  return unramified_tau(field, prime.p, residues, *self);
}

// Canonical ordering key shared by both routes.
bool canonical_less(const LabeledPrime& a, const LabeledPrime& b) {
  if (a.prime.f != b.prime.f) return a.prime.f < b.prime.f;
  if (a.prime.e != b.prime.e) return a.prime.e < b.prime.e;
  return a.factor_position < b.factor_position;
}

void assign_labels(std::vector<LabeledPrime>& primes) {
  std::stable_sort(primes.begin(), primes.end(), canonical_less);
  std::map<Integer, unsigned> seen;
  for (auto& lp : primes) {
    Integer n = lp.prime.norm();
    lp.label = PrimeLabel{n, ++seen[n]};
  }
}

std::vector<PadicFactorApprox> factors_at(const NumberField& field, const Integer& p, unsigned k,
                                          const field::PadicFixture* fixture, unsigned prime_count) {
  padic::FactorOptions options;
  options.prime_count = prime_count;
  return padic::sort_factors(padic::padic_factors(field.polynomial(), p, k, fixture, options));
}

}  // namespace

PrimeIdeal from_fixture(const Integer& p, const field::FixturePrime& prime) {
  return PrimeIdeal{p, prime.e, prime.f, prime.beta, prime.tau, prime.name};
}

std::string PrimeLabel::to_string() const { return norm.get_str() + "." + std::to_string(index); }

std::string to_string(Path path) {
  return path == Path::DedekindKummer ? "dedekind-kummer" : "valuation";
}

unsigned valuation(const FieldElement& x, const PrimeIdeal& prime, const NumberField& field, unsigned cap) {
  if (prime.tau) return field.tau_valuation(x, *prime.tau, prime.p, cap);
  return field.tau_valuation(x, derive_tau(prime, field), prime.p, cap);
}

unsigned ideal_gen_valuation(const PrimeIdeal& prime, unsigned k, const PadicFactorApprox& h,
                             const NumberField& field) {
  if (h.k < k) throw InvalidInput("factor known only to precision " + std::to_string(h.k));
  if (h.p != prime.p) throw InvalidInput("factor and prime lie over different p");
  FieldElement x = field.evaluate(h.truncate(k).poly());
  return valuation(x, prime, field, prime.e * k);
}

Matching match_primes_to_factors(const std::vector<PrimeIdeal>& primes, const NumberField& field, const Integer& p,
                                 const field::PadicFixture* fixture, unsigned k_max) {
  require_prime(p);
  if (primes.empty()) throw InvalidInput("no primes above p=" + p.get_str());
  unsigned total = 0;
  for (const auto& P : primes) {
    if (P.p != p) throw InvalidInput("prime over " + P.p.get_str() + " listed above p=" + p.get_str());
    if (P.e == 0 || P.f == 0) throw InvalidInput("e and f must be positive");
    total += P.e * P.f;
  }
  if (total != field.degree())
    throw InvalidInput("sum of e*f above p=" + p.get_str() + " is " + std::to_string(total) + ", not " +
                       std::to_string(field.degree()));

  Matching m;
  if (primes.size() == 1) {
    m.precision = 1;
    std::vector<Integer> c(field.polynomial().coeffs());
    c.pop_back();
    for (auto& x : c) x = arith::mod(x, p);
    m.factors.push_back(PadicFactorApprox{p, 1, std::move(c)});
    m.factor_of_prime = {0};
    return m;
  }

  auto prime_count = static_cast<unsigned>(primes.size());
  auto sorted = padic::sorted_padic_factors(field.polynomial(), p, fixture,
                                            padic::FactorOptions{.prime_count = prime_count}, 2, k_max);
  unsigned k = sorted.precision;
  m.factors = std::move(sorted.factors);
  if (m.factors.size() != primes.size())
    throw ValidationError("padic_factors", std::to_string(m.factors.size()) + " p-adic factors but " +
                                               std::to_string(primes.size()) + " primes above p=" + p.get_str());
  for (;;) {
    m.precision = k;
    m.valuations.assign(primes.size(), {});
    m.factor_of_prime.assign(primes.size(), 0);
    std::vector<bool> taken(m.factors.size(), false);
    bool ok = true;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      auto& row = m.valuations[i];
      for (const auto& h : m.factors) row.push_back(ideal_gen_valuation(primes[i], k, h, field));
      auto best = std::max_element(row.begin(), row.end());
      auto j = static_cast<std::size_t>(best - row.begin());
      if (std::count(row.begin(), row.end(), *best) != 1 || taken[j]) ok = false;
      else taken[j] = true;
      m.factor_of_prime[i] = j;
    }
    if (ok) break;
    if (k >= k_max)
      throw PrecisionExhausted("primes above p=" + p.get_str() + " not separated by valuations at precision " +
                               std::to_string(k));
    k = std::min(2 * k, k_max);
    m.factors = factors_at(field, p, k, fixture, prime_count);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& P = primes[i];
    if (m.factors[m.factor_of_prime[i]].degree() != P.e * P.f)
      throw ValidationError("prime_factor_degree", "prime with e*f=" + std::to_string(P.e * P.f) +
                                                       " matched to a factor of degree " +
                                                       std::to_string(m.factors[m.factor_of_prime[i]].degree()));
  }
  return m;
}

ideals::SplittingProfile PrimesAbove::profile() const {
  ideals::SplittingProfile out{p, {}};
  for (const auto& lp : primes) out.primes.push_back({lp.prime.e, lp.prime.f});
  return out;
}

PrimesAbove sort_primes_dedekind_kummer(const NumberField& field, const Integer& p) {
  require_prime(p);
  if (divides(p, field.polynomial_discriminant()))
    throw WrongPath("p=" + p.get_str() + " divides disc(g)");
  std::vector<ModPoly> residues;
  for (auto& mf : arith::factor_mod_p(field.polynomial(), p)) residues.push_back(std::move(mf.factor));
  PrimesAbove out{p, Path::DedekindKummer, 1, {}};
  for (std::size_t i = 0; i < residues.size(); ++i) {
    IntPoly h = residues[i].lift();
    // An inert p is generated by p alone; h(a) would be 0.
    FieldElement beta = residues.size() == 1 ? field.from_integer(p) : field.evaluate(h);
    PrimeIdeal P{p, 1, static_cast<unsigned>(residues[i].degree()), std::move(beta),
                 unramified_tau(field, p, residues, i), {}};
    out.primes.push_back(LabeledPrime{std::move(P), {}, i, std::move(h), {}});
  }
  assign_labels(out.primes);
  return out;
}

PrimesAbove sort_primes_by_valuation(const NumberField& field, const Integer& p, std::vector<PrimeIdeal> primes,
                                     const field::PadicFixture* fixture, unsigned k_max) {
  Matching m = match_primes_to_factors(primes, field, p, fixture, k_max);
  PrimesAbove out{p, Path::Valuation, m.precision, {}};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t j = m.factor_of_prime[i];
    std::vector<unsigned> row = m.valuations.empty() ? std::vector<unsigned>{} : m.valuations[i];
    out.primes.push_back(LabeledPrime{std::move(primes[i]), {}, j, m.factors[j].poly(), std::move(row)});
  }
  assign_labels(out.primes);
  return out;
}

PrimesAbove sort_primes_above(const NumberField& field, const Integer& p, const field::FixturePrimeBlock* block,
                              unsigned k_max) {
  require_prime(p);
  if (!divides(p, field.polynomial_discriminant())) return sort_primes_dedekind_kummer(field, p);
  if (!block || block->primes.empty())
    throw FixtureRequired("prime data for p=" + p.get_str() + " (divides disc(g)) must come from a fixture");
  std::vector<PrimeIdeal> primes;
  for (const auto& fp : block->primes) primes.push_back(from_fixture(p, fp));
  return sort_primes_by_valuation(field, p, std::move(primes), block->padic ? &*block->padic : nullptr, k_max);
}

RecoveredFactor recover_factor_from_generator(const NumberField& field, const Integer& p, const FieldElement& beta) {
  require_prime(p);
  const Integer& dg = field.polynomial_discriminant();
  if (field.power_basis_assumed() ? divides(p, dg)
                                  : arith::valuation(dg, p) > arith::valuation(field.field_discriminant(), p))
    throw WrongPath("p=" + p.get_str() + " divides the index of Z[a]; use the valuation route");
  if (beta.coords.size() != field.degree()) throw InvalidInput("generator has the wrong number of coordinates");
  ModPoly g(field.polynomial(), p);
  ModPoly b(numerator_poly(beta, p), p);
  if (b.is_zero()) return {g, true};
  ModPoly h = arith::poly_gcd_mod_p(g, b);
  return {h, h.degree() == 0 || h == g};
}

PrimeCatalog::PrimeCatalog(field::FieldData data, unsigned k_max) : data_(std::move(data)), k_max_(k_max) {}

PrimeCatalog::PrimeCatalog(NumberField field, unsigned k_max)
    : PrimeCatalog(field::FieldData{std::move(field), {}}, k_max) {}

const PrimesAbove& PrimeCatalog::primes_above(const Integer& p) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(p); it != cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<const PrimesAbove>(sort_primes_above(data_.field, p, data_.block(p), k_max_));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(p, std::move(fresh));
  return *it->second;
}

ideals::SplittingProfile PrimeCatalog::profile(const Integer& p) const { return primes_above(p).profile(); }

}  // namespace idealorder::primes
