#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealorder/arith/factor.hpp"
#include "idealorder/field/fixture.hpp"

namespace idealorder::padic {

using arith::Integer;
using arith::IntPoly;

enum class Provenance { InternalHensel, Fixture };

std::string to_string(Provenance p);

/// A monic p-adic factor of g known modulo p^k. coeffs holds a_0..a_{d-1} as
/// least nonnegative residues; the leading 1 is implicit.
struct PadicFactorApprox {
  Integer p;
  unsigned k = 0;
  std::vector<Integer> coeffs;
  Provenance provenance = Provenance::InternalHensel;

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()); }
  IntPoly poly() const;
  /// Same factor known only to a lower precision.
  PadicFactorApprox truncate(unsigned k_new) const;

  friend bool operator==(const PadicFactorApprox&, const PadicFactorApprox&) = default;
};

/// Digits a_{0,0}, a_{1,0}, ..., a_{d-1,0}, a_{0,1}, ... of the coefficients.
struct DigitKey {
  std::vector<unsigned> digits;

  friend bool operator==(const DigitKey&, const DigitKey&) = default;
  friend std::strong_ordering operator<=>(const DigitKey&, const DigitKey&) = default;
};

DigitKey digit_key(const PadicFactorApprox& h);

/// Ascending by (degree, digit key). Throws NeedsMorePrecision when two
/// factors of one degree share a key.
std::vector<PadicFactorApprox> sort_factors(std::vector<PadicFactorApprox> factors);

inline constexpr std::uint64_t kDefaultCandidateBudget = 1'000'000;
inline constexpr unsigned kDefaultPrecisionCap = 64;

struct FactorOptions {
  /// Divisor candidates tested while splitting clusters, summed over the call.
  std::uint64_t candidate_budget = kDefaultCandidateBudget;
  /// Number of primes above p when known; clusters are left unsplit when it
  /// already equals the number of clusters.
  std::optional<unsigned> prime_count;
  std::uint64_t seed = arith::kDefaultFactorSeed;
};

/// The p-adic factors of g modulo p^k, in no particular order. Falls back to
/// fixture factors for clusters the search cannot split within budget.
std::vector<PadicFactorApprox> padic_factors(const IntPoly& g, const Integer& p, unsigned k,
                                             const field::PadicFixture* fixture = nullptr,
                                             const FactorOptions& options = {});

std::vector<PadicFactorApprox> padic_factors(const field::NumberField& field, const Integer& p, unsigned k,
                                             const field::FixturePrimeBlock* block = nullptr,
                                             FactorOptions options = {});

/// IDEALORDER_PRECISION_CAP when set to a positive integer, else 64.
unsigned precision_cap();

struct SortedFactors {
  std::vector<PadicFactorApprox> factors;
  unsigned precision = 0;
};

/// Factors sorted at the first k in 2, 4, 8, ... (capped) where the order is
/// strict. Throws PrecisionExhausted naming the pair still tied at the cap.
SortedFactors sorted_padic_factors(const IntPoly& g, const Integer& p, const field::PadicFixture* fixture = nullptr,
                                   const FactorOptions& options = {}, unsigned start_k = 2,
                                   unsigned k_max = precision_cap());

}  // namespace idealorder::padic
