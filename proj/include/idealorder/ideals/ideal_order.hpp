#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "idealorder/arith/integer.hpp"
#include "idealorder/ideals/profile.hpp"

namespace idealorder::ideals {

/// Exponents of the primes above one p, in canonical prime order.
using ExponentVector = std::vector<unsigned>;

/// A nonzero integral ideal. Each component has the full length of its
/// profile and at least one nonzero entry; the unit ideal has none.
struct Ideal {
  std::map<Integer, ExponentVector> components;
  Integer norm = 1;

  bool is_unit() const { return components.empty(); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

struct IdealLabel {
  Integer norm;
  Integer index;

  std::string to_string() const;
  /// "N.i", decimal without leading zeros, both at least 1.
  static IdealLabel parse(std::string_view text);
  friend bool operator==(const IdealLabel&, const IdealLabel&) = default;
};

unsigned weight(const ExponentVector& v);

/// N(p_1^v_1 ... p_r^v_r) as a power of p.
unsigned norm_exponent(const SplittingProfile& profile, const ExponentVector& v);

/// Norm exponent, then weight, then descending lexicographic order.
std::strong_ordering cmp_prime_power(const SplittingProfile& profile, const ExponentVector& a,
                                     const ExponentVector& b);

/// Norm, then components by ascending p.
std::strong_ordering cmp_ideals(const ProfileSource& source, const Ideal& a, const Ideal& b);

Ideal unit_ideal();
/// Drops zero components and computes the norm.
Ideal make_ideal(const ProfileSource& source, std::map<Integer, ExponentVector> components);
Ideal prime_ideal(const ProfileSource& source, const Integer& p, std::size_t position);
Ideal multiply(const ProfileSource& source, const Ideal& a, const Ideal& b);

/// Exponent vectors of norm p^n, in order.
std::vector<ExponentVector> enumerate_prime_power(const SplittingProfile& profile, unsigned n);
Integer count_prime_power(const SplittingProfile& profile, unsigned n);

std::vector<Ideal> enumerate_norm(const ProfileSource& source, const arith::Factorization& n);
std::vector<Ideal> enumerate_norm(const ProfileSource& source, const Integer& n);
Integer count_norm(const ProfileSource& source, const arith::Factorization& n);
Integer count_norm(const ProfileSource& source, const Integer& n);

/// Zero-based position of v among the exponent vectors of its norm.
Integer rank_prime_power(const SplittingProfile& profile, const ExponentVector& v);
ExponentVector unrank_prime_power(const SplittingProfile& profile, unsigned n, Integer position);

IdealLabel rank(const ProfileSource& source, const Ideal& a);
/// Throws NoSuchIdeal when the index exceeds the number of ideals of that norm.
Ideal unrank(const ProfileSource& source, const IdealLabel& label);

/// Label of the prime at a canonical position above p.
IdealLabel prime_label(const SplittingProfile& profile, std::size_t position);

/// "4.1^2*27.2" in ascending prime order; "(1)" for the unit ideal.
std::string format_factorization(const ProfileSource& source, const Ideal& a);
Ideal parse_factorization(const ProfileSource& source, std::string_view text);

}  // namespace idealorder::ideals
