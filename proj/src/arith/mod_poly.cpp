#include "idealorder/arith/mod_poly.hpp"

#include <algorithm>

#include "idealorder/error.hpp"

namespace idealorder::arith {

ModPoly::ModPoly(Integer modulus, std::vector<Integer> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
  if (modulus_ < 2) throw InvalidInput("modulus must be at least 2");
  normalize();
}

ModPoly::ModPoly(const IntPoly& f, Integer modulus) : ModPoly(std::move(modulus), f.coeffs()) {}

ModPoly ModPoly::one(const Integer& modulus) { return ModPoly(modulus, {Integer(1)}); }

ModPoly ModPoly::x(const Integer& modulus) { return ModPoly(modulus, {Integer(0), Integer(1)}); }

void ModPoly::normalize() {
  for (Integer& c : coeffs_) c = mod(c, modulus_);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPoly::check_compatible(const ModPoly& o) const {
  if (modulus_ != o.modulus_)
    throw InvalidInput("modulus mismatch: " + idealorder::arith::to_string(modulus_) + " vs " + idealorder::arith::to_string(o.modulus_));
}

const Integer& ModPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

ModPoly ModPoly::make_monic() const {
  if (coeffs_.empty()) return *this;
  return scale(inverse_mod(leading(), modulus_));
}

ModPoly ModPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return ModPoly(modulus_, std::move(d));
}

ModPoly ModPoly::reduce(const Integer& smaller) const { return ModPoly(smaller, coeffs_); }

ModPoly ModPoly::operator+(const ModPoly& o) const {
  check_compatible(o);
  std::vector<Integer> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return ModPoly(modulus_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  check_compatible(o);
  std::vector<Integer> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return ModPoly(modulus_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  check_compatible(o);
  return ModPoly(modulus_, multiply_coeffs(coeffs_, o.coeffs_));
}

ModPoly ModPoly::scale(const Integer& c) const {
  std::vector<Integer> r = coeffs_;
  for (Integer& x : r) x *= c;
  return ModPoly(modulus_, std::move(r));
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("modulus mismatch in division");
  if (b.is_zero()) throw InvalidInput("division by zero polynomial");
  const Integer& m = a.modulus();
  const Integer inv = inverse_mod(b.leading(), m);
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ModPoly(m, {}), a};
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = mod(r[static_cast<std::size_t>(i)] * inv, m);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      Integer& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = mod(slot - c * b.coeffs()[static_cast<std::size_t>(j)], m);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result = divrem(ModPoly::one(base.modulus()), m).second;
  ModPoly b = divrem(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divrem(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divrem(result * b, m).second;
  }
  return result;
}

namespace {

void require_prime_modulus(const Integer& m) {
  if (!is_prime(m)) throw InvalidInput("gcd requires a prime modulus, got " + to_string(m));
}

}  // namespace

ModPoly poly_gcd_mod_p(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("modulus mismatch in gcd");
  require_prime_modulus(a.modulus());
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.make_monic();
}

ExtendedGcd poly_xgcd_mod_p(const ModPoly& a, const ModPoly& b) {
  const Integer& p = a.modulus();
  require_prime_modulus(p);
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::one(p), s1(p, {});
  ModPoly t0(p, {}), t1 = ModPoly::one(p);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
  Integer inv = inverse_mod(r0.leading(), p);
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

bool degree_lex_less(const ModPoly& a, const ModPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace idealorder::arith
