#pragma once

#include <limits>
#include <string>
#include <vector>

#include "idealorder/arith/int_poly.hpp"

namespace idealorder::field {

using arith::Integer;
using arith::IntPoly;
using arith::Rational;

/// Element of K = Q[X]/(g) by its coordinates in the power basis 1, a, ..., a^{n-1}.
struct FieldElement {
  std::vector<Rational> coords;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Square rational matrix stored by rows; row j holds b_j in the power basis.
using BasisMatrix = std::vector<std::vector<Rational>>;

inline constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

/// A number field with a fixed monic defining polynomial g and generator
/// a = X mod g, together with a lower-triangular integral basis.
class NumberField {
 public:
  /// Checks every invariant; throws ValidationError naming the failing check.
  NumberField(IntPoly g, BasisMatrix integral_basis, Integer field_discriminant, std::string label = {});

  /// Z[a] standing in for the maximal order. Only p-maximal for p not
  /// dividing disc(g), which is where callers may rely on it.
  static NumberField from_power_basis(IntPoly g, std::string label = {});

  const IntPoly& polynomial() const { return g_; }
  unsigned degree() const { return static_cast<unsigned>(g_.degree()); }
  const BasisMatrix& integral_basis() const { return basis_; }
  const Integer& field_discriminant() const { return field_disc_; }
  const Integer& polynomial_discriminant() const { return poly_disc_; }
  const std::string& label() const { return label_; }
  bool power_basis_assumed() const { return power_basis_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const Integer& c) const;
  /// h(a) reduced mod g.
  FieldElement evaluate(const IntPoly& h) const;
  FieldElement from_coords(std::vector<Rational> coords) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement scale(const FieldElement& x, const Rational& c) const;
  FieldElement pow(const FieldElement& x, unsigned e) const;
  bool is_zero(const FieldElement& x) const;

  /// Coordinates of x in the integral basis (exact triangular solve).
  std::vector<Rational> coords_in_integral_basis(const FieldElement& x) const;
  /// Inverse direction: sum of c_j * b_j in the power basis.
  FieldElement from_integral_coords(const std::vector<Rational>& c) const;

  /// No integral-basis coordinate has a denominator divisible by p.
  bool is_p_integral(const FieldElement& x, const Integer& p) const;
  /// Every integral-basis coordinate is an integer.
  bool is_integral(const FieldElement& x) const;

  /// Largest m <= cap with x * tau^m p-integral. Requires x p-integral.
  unsigned tau_valuation(const FieldElement& x, const FieldElement& tau, const Integer& p,
                         unsigned cap = kInfiniteValuation) const;

  std::string format(const FieldElement& x) const;

 private:
  void check_length(const FieldElement& x) const;

  IntPoly g_;
  BasisMatrix basis_;
  Integer field_disc_;
  Integer poly_disc_;
  std::string label_;
  bool power_basis_ = false;
};

/// Free-function forms of the element operations.
FieldElement element_mul(const FieldElement& x, const FieldElement& y, const NumberField& k);
std::vector<Rational> coords_in_integral_basis(const FieldElement& x, const NumberField& k);

/// "[c0,c1,...]" with rationals as a/b.
std::string format_coords(const std::vector<Rational>& coords);

}  // namespace idealorder::field
