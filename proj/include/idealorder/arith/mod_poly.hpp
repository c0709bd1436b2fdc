#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idealorder/arith/int_poly.hpp"

namespace idealorder::arith {

/// Polynomial over Z/mZ with coefficients kept as least nonnegative
/// residues in [0, m-1], constant term first, no trailing zeros.
class ModPoly {
 public:
  ModPoly(Integer modulus, std::vector<Integer> coeffs);
  ModPoly(const IntPoly& f, Integer modulus);

  static ModPoly one(const Integer& modulus);
  static ModPoly x(const Integer& modulus);

  const Integer& modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& leading() const;

  /// Integer polynomial with the same (nonnegative) coefficients.
  IntPoly lift() const { return IntPoly(coeffs_); }
  ModPoly make_monic() const;
  ModPoly derivative() const;
  /// Reduction to a smaller modulus dividing this one.
  ModPoly reduce(const Integer& smaller) const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scale(const Integer& c) const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

  std::string to_string(char var = 'X') const { return lift().to_string(var); }

 private:
  void normalize();
  void check_compatible(const ModPoly& o) const;

  Integer modulus_;
  std::vector<Integer> coeffs_;
};

/// Division with remainder; b's leading coefficient must be a unit.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);

/// Monic gcd over F_p. The modulus must be prime; not both inputs zero.
ModPoly poly_gcd_mod_p(const ModPoly& a, const ModPoly& b);

/// Extended gcd over F_p: returns (g, s, t) with s*a + t*b = g monic.
struct ExtendedGcd {
  ModPoly gcd, s, t;
};
ExtendedGcd poly_xgcd_mod_p(const ModPoly& a, const ModPoly& b);

/// Ordering used for factor lists: degree, then coefficients read from the
/// constant term upward.
bool degree_lex_less(const ModPoly& a, const ModPoly& b);

}  // namespace idealorder::arith
