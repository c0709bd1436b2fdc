#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace idealorder::arith {

using Integer = mpz_class;
using Rational = mpq_class;

/// One prime factor with its multiplicity.
struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

bool is_prime(const Integer& n);

Integer ipow(const Integer& base, unsigned long exponent);

/// Largest v with p^v | n. n must be nonzero.
unsigned valuation(const Integer& n, const Integer& p);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m; throws InvalidInput when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

/// Factors |n| (n != 0) by trial division up to 10^6, then Pollard rho.
/// Result is sorted by prime.
Factorization factor_integer(const Integer& n);

Integer multiply_out(const Factorization& f);

/// If n = p^f with p prime and f >= 1, returns (p, f).
std::optional<PrimePower> as_prime_power(const Integer& n);

/// Strict decimal parse: optional leading '-', digits only, no leading zeros.
std::optional<Integer> parse_integer(std::string_view text);

/// Parses "a/b" or "a"; the result is canonical (b > 0, reduced).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& q, const Integer& p);

/// Image of a p-integral rational in Z/p^k Z. Throws InvalidInput if
/// the denominator is divisible by p.
Integer reduce_rational(const Rational& q, const Integer& p, const Integer& modulus);

}  // namespace idealorder::arith
