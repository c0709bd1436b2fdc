#include "idealorder/field/number_field.hpp"

#include <algorithm>

#include "idealorder/error.hpp"

namespace idealorder::field {

namespace {

void require(bool ok, const std::string& check, const std::string& label, const std::string& what) {
  if (!ok) throw ValidationError(check, "field " + (label.empty() ? std::string("<unnamed>") : label) + ": " + what);
}

}  // namespace

NumberField::NumberField(IntPoly g, BasisMatrix integral_basis, Integer field_discriminant, std::string label)
    : g_(std::move(g)),
      basis_(std::move(integral_basis)),
      field_disc_(std::move(field_discriminant)),
      label_(std::move(label)) {
  require(g_.is_monic() && g_.degree() >= 1, "poly_monic", label_, "defining polynomial must be monic of degree >= 1");
  poly_disc_ = arith::discriminant(g_);
  require(poly_disc_ != 0, "disc_nonzero", label_, "disc(g) = 0, g is not separable");
  const std::size_t n = degree();
  require(basis_.size() == n, "basis_shape", label_, "integral basis must have " + std::to_string(n) + " rows");
  for (std::size_t j = 0; j < n; ++j) {
    require(basis_[j].size() == n, "basis_shape", label_, "basis row " + std::to_string(j + 1) + " has wrong length");
    for (std::size_t i = j + 1; i < n; ++i)
      require(basis_[j][i] == 0, "basis_shape", label_,
              "basis must be lower triangular (b_" + std::to_string(j + 1) + " involves a^" + std::to_string(i) + ")");
    require(basis_[j][j] != 0, "basis_shape", label_, "basis matrix is singular");
  }
  require(basis_[0][0] == 1, "basis_shape", label_, "first basis element must be 1");
  Rational det = 1;
  for (std::size_t j = 0; j < n; ++j) det *= basis_[j][j];
  require(det * det * poly_disc_ == field_disc_, "basis_discriminant", label_,
          "det(basis)^2 * disc(g) = " + arith::to_string(Rational(det * det * poly_disc_)) +
              " differs from field_disc = " + arith::to_string(field_disc_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      require(is_integral(mul(FieldElement{basis_[i]}, FieldElement{basis_[j]})), "basis_order", label_,
              "product b_" + std::to_string(i + 1) + " * b_" + std::to_string(j + 1) + " is not integral");
}

NumberField NumberField::from_power_basis(IntPoly g, std::string label) {
  if (!g.is_monic() || g.degree() < 1)
    throw InvalidInput("defining polynomial must be monic of degree >= 1, got " + g.to_string());
  const auto n = static_cast<std::size_t>(g.degree());
  BasisMatrix identity(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  Integer disc = arith::discriminant(g);
  if (disc == 0) throw InvalidInput("defining polynomial " + g.to_string() + " is not separable");
  NumberField k(std::move(g), std::move(identity), disc, std::move(label));
  k.power_basis_ = true;
  return k;
}

void NumberField::check_length(const FieldElement& x) const {
  if (x.coords.size() != degree())
    throw InvalidInput("field element has " + std::to_string(x.coords.size()) + " coordinates, expected " +
                       std::to_string(degree()));
}

FieldElement NumberField::zero() const { return FieldElement{std::vector<Rational>(degree())}; }

FieldElement NumberField::one() const { return from_integer(1); }

FieldElement NumberField::from_integer(const Integer& c) const {
  FieldElement x = zero();
  x.coords[0] = c;
  return x;
}

FieldElement NumberField::evaluate(const IntPoly& h) const {
  IntPoly r = h.degree() >= g_.degree() ? arith::divrem_monic(h, g_).second : h;
  FieldElement x = zero();
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) x.coords[i] = r.coeffs()[i];
  return x;
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  FieldElement x{std::move(coords)};
  check_length(x);
  return x;
}

FieldElement NumberField::add(const FieldElement& x, const FieldElement& y) const {
  check_length(x);
  check_length(y);
  FieldElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
  return r;
}

FieldElement NumberField::sub(const FieldElement& x, const FieldElement& y) const {
  check_length(x);
  check_length(y);
  FieldElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= y.coords[i];
  return r;
}

FieldElement NumberField::scale(const FieldElement& x, const Rational& c) const {
  check_length(x);
  FieldElement r = x;
  for (Rational& q : r.coords) q *= c;
  return r;
}

FieldElement NumberField::mul(const FieldElement& x, const FieldElement& y) const {
  check_length(x);
  check_length(y);
  const std::size_t n = degree();
  std::vector<Rational> r(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) r[i + j] += x.coords[i] * y.coords[j];
  }
  for (std::size_t i = 2 * n - 1; i-- > n;) {
    if (r[i] == 0) continue;
    const Rational c = r[i];
    for (std::size_t j = 0; j < n; ++j) r[i - n + j] -= c * g_.coeffs()[j];
    r[i] = 0;
  }
  r.resize(n);
  return FieldElement{std::move(r)};
}

FieldElement NumberField::pow(const FieldElement& x, unsigned e) const {
  FieldElement result = one(), base = x;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool NumberField::is_zero(const FieldElement& x) const {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Rational> NumberField::coords_in_integral_basis(const FieldElement& x) const {
  check_length(x);
  const std::size_t n = degree();
  std::vector<Rational> c(n);
  // x_i = sum_{j >= i} c_j * B[j][i]; solve from the top coordinate down.
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = x.coords[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= c[j] * basis_[j][i];
    c[i] = acc / basis_[i][i];
  }
  return c;
}

FieldElement NumberField::from_integral_coords(const std::vector<Rational>& c) const {
  if (c.size() != degree()) throw InvalidInput("wrong number of integral-basis coordinates");
  FieldElement x = zero();
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) x.coords[i] += c[j] * basis_[j][i];
  return x;
}

bool NumberField::is_p_integral(const FieldElement& x, const Integer& p) const {
  for (const Rational& c : coords_in_integral_basis(x))
    if (mpz_divisible_p(c.get_den_mpz_t(), p.get_mpz_t())) return false;
  return true;
}

bool NumberField::is_integral(const FieldElement& x) const {
  for (const Rational& c : coords_in_integral_basis(x))
    if (c.get_den() != 1) return false;
  return true;
}

unsigned NumberField::tau_valuation(const FieldElement& x, const FieldElement& tau, const Integer& p,
                                    unsigned cap) const {
  if (is_zero(x)) return cap;
  if (!is_p_integral(x, p))
    throw InvalidInput("valuation requires a " + arith::to_string(p) + "-integral element, got " + format(x));
  FieldElement y = x;
  unsigned m = 0;
  while (m < cap) {
    y = mul(y, tau);
    if (!is_p_integral(y, p)) break;
    ++m;
  }
  return m;
}

std::string NumberField::format(const FieldElement& x) const { return format_coords(x.coords); }

FieldElement element_mul(const FieldElement& x, const FieldElement& y, const NumberField& k) { return k.mul(x, y); }

std::vector<Rational> coords_in_integral_basis(const FieldElement& x, const NumberField& k) {
  return k.coords_in_integral_basis(x);
}

std::string format_coords(const std::vector<Rational>& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += arith::to_string(coords[i]);
  }
  return out + "]";
}

}  // namespace idealorder::field
