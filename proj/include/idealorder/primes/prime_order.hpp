#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idealorder/field/fixture.hpp"
#include "idealorder/ideals/profile.hpp"
#include "idealorder/padic/padic_sort.hpp"

namespace idealorder::primes {

using arith::Integer;
using arith::ModPoly;
using field::FieldElement;
using field::NumberField;
using padic::PadicFactorApprox;

/// p O_K-prime (p, beta). tau, when present, has v(tau) = -1 here and is
/// integral at the other primes above p.
struct PrimeIdeal {
  Integer p;
  unsigned e = 1;
  unsigned f = 1;
  FieldElement beta;
  std::optional<FieldElement> tau;
  std::string name;

  Integer norm() const { return arith::ipow(p, f); }
};

PrimeIdeal from_fixture(const Integer& p, const field::FixturePrime& prime);

struct PrimeLabel {
  Integer norm;
  unsigned index = 0;

  std::string to_string() const;
  friend bool operator==(const PrimeLabel&, const PrimeLabel&) = default;
};

/// v_P(x) for a p-integral x, capped. Zero gives the cap. Without tau the
/// prime must come from a p not dividing disc(g).
unsigned valuation(const FieldElement& x, const PrimeIdeal& prime, const NumberField& field,
                   unsigned cap = field::kInfiniteValuation);

/// min(e*k, v_P(h(a))) for h known to precision at least k.
unsigned ideal_gen_valuation(const PrimeIdeal& prime, unsigned k, const PadicFactorApprox& h,
                             const NumberField& field);

struct Matching {
  unsigned precision = 0;
  std::vector<PadicFactorApprox> factors;     // sorted
  std::vector<std::size_t> factor_of_prime;   // per input prime
  std::vector<std::vector<unsigned>> valuations;  // per input prime, per factor; empty when unneeded
};

/// Pairs each prime above p with the sorted factor at which its generator
/// valuation attains a unique maximum, raising precision as needed.
Matching match_primes_to_factors(const std::vector<PrimeIdeal>& primes, const NumberField& field, const Integer& p,
                                 const field::PadicFixture* fixture = nullptr,
                                 unsigned k_max = padic::precision_cap());

enum class Path { DedekindKummer, Valuation };

std::string to_string(Path path);

struct LabeledPrime {
  PrimeIdeal prime;
  PrimeLabel label;
  /// Position among the sorted p-adic factors (general path) or among the
  /// sorted residue factors (Dedekind-Kummer path).
  std::size_t factor_position = 0;
  /// Monic factor matched to the prime, at the working precision.
  arith::IntPoly factor;
  std::vector<unsigned> valuations;
};

struct PrimesAbove {
  Integer p;
  Path path = Path::DedekindKummer;
  unsigned precision = 1;
  std::vector<LabeledPrime> primes;  // canonical order

  ideals::SplittingProfile profile() const;
};

/// Residue-factor route; p must not divide disc(g).
PrimesAbove sort_primes_dedekind_kummer(const NumberField& field, const Integer& p);

/// General route over a complete set of primes above p given in any order.
PrimesAbove sort_primes_by_valuation(const NumberField& field, const Integer& p, std::vector<PrimeIdeal> primes,
                                     const field::PadicFixture* fixture = nullptr,
                                     unsigned k_max = padic::precision_cap());

/// Dedekind-Kummer when p does not divide disc(g), otherwise the valuation
/// route on the fixture block (FixtureRequired without one).
PrimesAbove sort_primes_above(const NumberField& field, const Integer& p,
                              const field::FixturePrimeBlock* block = nullptr,
                              unsigned k_max = padic::precision_cap());

struct RecoveredFactor {
  ModPoly factor;
  /// gcd(g, b) mod p is g itself or 1, so beta does not single out a prime.
  bool degenerate = false;
};

/// gcd(g, b) over F_p for beta = b(a) / d with d prime to p. Throws WrongPath
/// when p divides the index [O_K : Z[a]] (or disc(g) for a field without a
/// known integral basis).
RecoveredFactor recover_factor_from_generator(const NumberField& field, const Integer& p, const FieldElement& beta);

/// Thread-safe cache of sorted primes for one field.
class PrimeCatalog : public ideals::ProfileSource {
 public:
  explicit PrimeCatalog(field::FieldData data, unsigned k_max = padic::precision_cap());
  explicit PrimeCatalog(NumberField field, unsigned k_max = padic::precision_cap());

  const NumberField& field() const { return data_.field; }
  const field::FieldData& data() const { return data_; }

  const PrimesAbove& primes_above(const Integer& p) const;
  ideals::SplittingProfile profile(const Integer& p) const override;

 private:
  field::FieldData data_;
  unsigned k_max_;
  mutable std::mutex mutex_;
  mutable std::map<Integer, std::unique_ptr<const PrimesAbove>> cache_;
};

}  // namespace idealorder::primes
