#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "idealorder/arith/integer.hpp"

namespace idealorder::arith {

/// Dense univariate polynomial over Z, constant term first. The coefficient
/// vector never carries trailing zeros, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const Integer& leading() const;
  /// Zero past the degree.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  /// Coefficient-wise least nonnegative residues.
  IntPoly reduce(const Integer& modulus) const;
  bool divisible_by(const Integer& m) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form such as "X^3 - X^2 + 2*X + 8".
  std::string to_string(char var = 'X') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Division by a monic divisor; quotient and remainder are exact over Z.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b);

/// Sylvester-matrix resultant, computed with fraction-free elimination.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f of degree >= 1.
Integer discriminant(const IntPoly& f);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(std::vector<std::vector<Integer>> m);

/// Polynomials with at least this many coefficients multiply by Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 32;

/// Coefficient-vector product; exposed for the rational and modular types.
std::vector<Integer> multiply_coeffs(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Parses expressions like "X^3 - X^2 + 2*X + 8" (variable x or X).
IntPoly parse_poly(std::string_view text);

}  // namespace idealorder::arith
