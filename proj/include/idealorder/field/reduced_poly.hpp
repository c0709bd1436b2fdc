#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "idealorder/arith/int_poly.hpp"

namespace idealorder::field {

using arith::Integer;
using arith::IntPoly;
using arith::Rational;

/// (|a_1|, a_1, ..., |a_n|, a_n) for P = X^n + a_1 X^{n-1} + ... + a_n.
struct SVector {
  std::vector<Integer> entries;

  friend bool operator==(const SVector&, const SVector&) = default;
  friend std::strong_ordering operator<=>(const SVector& a, const SVector& b);
};

SVector s_vector(const IntPoly& p);

/// Rational enclosure of the T2 norm (sum of |root|^2).
struct T2Interval {
  Rational lower;
  Rational upper;

  bool is_point() const { return lower == upper; }
};

inline constexpr unsigned kT2StartBits = 64;
inline constexpr unsigned kT2MaxBits = 4096;

/// Exact T2 when it is a rational function of the coefficients: totally real
/// P, or degree <= 2.
std::optional<Rational> t2_exact(const IntPoly& p);

/// Certified enclosure from roots approximated at the given working precision;
/// nullopt when the approximation cannot be certified at that precision.
std::optional<T2Interval> t2_interval(const IntPoly& p, unsigned bits);

/// Number of real roots of a squarefree P (Sturm sequence).
unsigned count_real_roots(const IntPoly& p);

/// Sign of T2(p) - T2(q), refining from start_bits by doubling up to max_bits.
/// Throws PrecisionExhausted when neither separation nor equality is shown.
int compare_t2(const IntPoly& p, const IntPoly& q, unsigned start_bits = kT2StartBits,
               unsigned max_bits = kT2MaxBits);

/// T2, then |disc|, then S(P).
int compare_reduced(const IntPoly& p, const IntPoly& q, unsigned start_bits = kT2StartBits);

/// The candidates ordered by compare_reduced; duplicates are kept.
std::vector<IntPoly> reduced_poly_order(std::vector<IntPoly> candidates, unsigned precision_bits = kT2StartBits);

/// The first candidate in that order. Candidates must be monic of one degree.
IntPoly reduced_poly_select(const std::vector<IntPoly>& candidates, unsigned precision_bits = kT2StartBits);

}  // namespace idealorder::field
