#include "idealorder/field/reduced_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include "idealorder/error.hpp"

namespace idealorder::field {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

std::strong_ordering operator<=>(const SVector& a, const SVector& b) {
  for (std::size_t i = 0; i < std::min(a.entries.size(), b.entries.size()); ++i) {
    int c = cmp(a.entries[i], b.entries[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.entries.size() <=> b.entries.size();
}

SVector s_vector(const IntPoly& p) {
  if (!p.is_monic()) throw InvalidInput("S(P) needs a monic polynomial, got " + p.to_string());
  const int n = p.degree();
  SVector s;
  for (int i = 1; i <= n; ++i) {
    Integer a = p.coeff(static_cast<std::size_t>(n - i));
    s.entries.push_back(abs(a));
    s.entries.push_back(a);
  }
  return s;
}

namespace {

// Working precision for newly created Reals in this thread.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }

 private:
  unsigned saved_;
};

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }

Rational to_rational(const Real& x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.backend().data());
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

// Bounds lo <= sqrt(q) <= hi with denominators 2^bits.
std::pair<Rational, Rational> sqrt_bounds(const Rational& q, unsigned bits) {
  Integer scaled = (q.get_num() << (2 * bits)) / q.get_den();
  Integer r = sqrt(scaled);
  Rational lo(r), hi(r + 1);
  mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), bits);
  mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), bits);
  return {lo, hi};
}

struct RComplex {
  Rational re, im;
};
RComplex operator-(const RComplex& a, const RComplex& b) { return {a.re - b.re, a.im - b.im}; }
RComplex operator*(const RComplex& a, const RComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const RComplex& a) { return a.re * a.re + a.im * a.im; }

std::vector<Complex> aberth_roots(const IntPoly& p, unsigned bits) {
  const int n = p.degree();
  std::vector<Real> c;
  for (const Integer& a : p.coeffs()) c.emplace_back(a.get_str());
  auto eval = [&](const Complex& z, Complex& value, Complex& deriv) {
    value = {c[n], Real(0)};
    deriv = {Real(0), Real(0)};
    for (int i = n - 1; i >= 0; --i) {
      deriv = deriv * z + value;
      value = value * z + Complex{c[i], Real(0)};
    }
  };
  // Cauchy bound on the root moduli fixes the starting circle.
  double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(p.coeff(i).get_d()));
  std::vector<Complex> z;
  for (int i = 0; i < n; ++i) {
    double angle = 2 * M_PI * i / n + 0.4;
    z.push_back({Real(radius * std::cos(angle)), Real(radius * std::sin(angle))});
  }
  Real tol = mp::ldexp(Real(1), -static_cast<int>(bits) + 8);
  for (int iter = 0; iter < 40 * static_cast<int>(bits); ++iter) {
    Real largest = 0;
    for (int i = 0; i < n; ++i) {
      Complex v, d;
      eval(z[i], v, d);
      if (v.re == 0 && v.im == 0) continue;
      Complex ratio = v / d;
      Complex sum{Real(0), Real(0)};
      for (int j = 0; j < n; ++j)
        if (j != i) sum = sum + Complex{Real(1), Real(0)} / (z[i] - z[j]);
      Complex w = ratio / (Complex{Real(1), Real(0)} - ratio * sum);
      z[i] = z[i] - w;
      largest = std::max(largest, norm2(w) / std::max(Real(1), norm2(z[i])));
    }
    if (largest < tol * tol) break;
  }
  return z;
}

}  // namespace

std::optional<Rational> t2_exact(const IntPoly& p) {
  const int n = p.degree();
  Rational a1 = p.coeff(n - 1), a2 = n >= 2 ? Rational(p.coeff(n - 2)) : Rational(0);
  if (n == 2 && a1 * a1 - 4 * a2 < 0) return 2 * a2;
  if (n <= 2 || count_real_roots(p) == static_cast<unsigned>(n)) return a1 * a1 - 2 * a2;
  return std::nullopt;
}

std::optional<T2Interval> t2_interval(const IntPoly& p, unsigned bits) {
  const int n = p.degree();
  PrecisionGuard guard(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
  std::vector<Complex> approx = aberth_roots(p, bits);
  std::vector<RComplex> z;
  for (const Complex& a : approx) z.push_back({to_rational(a.re), to_rational(a.im)});

  // Disc i around z_i holds exactly one root once the discs are disjoint, with
  // radius r_i = n |P(z_i)| / prod_{j != i} |z_i - z_j|.
  std::vector<Rational> radius(n);
  for (int i = 0; i < n; ++i) {
    RComplex value{Rational(p.coeff(n)), Rational(0)};
    for (int k = n - 1; k >= 0; --k) value = value * z[i] - RComplex{Rational(-p.coeff(k)), Rational(0)};
    Rational denom = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) denom *= norm2(z[i] - z[j]);
    if (denom == 0) return std::nullopt;
    Rational r2 = Rational(n * n) * norm2(value) / denom;
    radius[i] = sqrt_bounds(r2, bits).second;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational reach = radius[i] + radius[j];
      if (norm2(z[i] - z[j]) <= reach * reach) return std::nullopt;
    }
  T2Interval out{0, 0};
  for (int i = 0; i < n; ++i) {
    auto [lo, hi] = sqrt_bounds(norm2(z[i]), bits);
    Rational low = lo - radius[i];
    if (low < 0) low = 0;
    Rational high = hi + radius[i];
    out.lower += low * low;
    out.upper += high * high;
  }
  return out;
}

unsigned count_real_roots(const IntPoly& p) {
  // Sturm chain by signed pseudo-remainders; only signs at +-infinity matter.
  std::vector<IntPoly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    IntPoly a = chain[chain.size() - 2], b = chain.back();
    Integer lead = b.leading();
    int shift = a.degree() - b.degree() + 1;
    // Scale by lead^(even power) so the sign of the remainder is unchanged.
    if (shift % 2) ++shift;
    for (int i = 0; i < shift; ++i) a *= lead;
    while (!a.is_zero() && a.degree() >= b.degree()) {
      Integer q = a.leading() / lead;
      a -= IntPoly::monomial(q, static_cast<unsigned>(a.degree() - b.degree())) * b;
    }
    if (a.is_zero()) break;
    std::vector<Integer> c = a.coeffs();
    Integer g = 0;
    for (const Integer& x : c) g = gcd(g, x);
    for (Integer& x : c) x = -x / g;
    chain.emplace_back(std::move(c));
  }
  auto variations = [&](bool at_plus) {
    unsigned v = 0;
    int last = 0;
    for (const IntPoly& f : chain) {
      int s = sgn(f.leading());
      if (!at_plus && f.degree() % 2) s = -s;
      if (s != 0 && last != 0 && s != last) ++v;
      if (s != 0) last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

namespace {

bool negated_roots(const IntPoly& p, const IntPoly& q) {
  if (p.degree() != q.degree()) return false;
  const int n = p.degree();
  for (int i = 0; i <= n; ++i) {
    Integer c = p.coeff(i);
    if ((n - i) % 2) c = -c;
    if (c != q.coeff(i)) return false;
  }
  return true;
}

}  // namespace

int compare_t2(const IntPoly& p, const IntPoly& q, unsigned start_bits, unsigned max_bits) {
  if (p == q || negated_roots(p, q)) return 0;
  std::optional<Rational> ep = t2_exact(p), eq = t2_exact(q);
  if (ep && eq) return cmp(*ep, *eq) < 0 ? -1 : (*ep == *eq ? 0 : 1);
  bool certified = false;
  for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
    std::optional<T2Interval> ip = ep ? T2Interval{*ep, *ep} : t2_interval(p, bits);
    std::optional<T2Interval> iq = eq ? T2Interval{*eq, *eq} : t2_interval(q, bits);
    certified = ip && iq;
    if (!certified) continue;
    if (ip->upper < iq->lower) return -1;
    if (iq->upper < ip->lower) return 1;
  }
  // Overlap of certified enclosures at the cap is read as equality; the
  // discriminant and S(P) steps then decide.
  if (certified) return 0;
  throw PrecisionExhausted("roots of " + p.to_string() + " or " + q.to_string() + " not certified at " +
                           std::to_string(max_bits) + " bits");
}

int compare_reduced(const IntPoly& p, const IntPoly& q, unsigned start_bits) {
  int c = compare_t2(p, q, start_bits);
  if (c != 0) return c;
  int d = cmp(abs(arith::discriminant(p)), abs(arith::discriminant(q)));
  if (d != 0) return d < 0 ? -1 : 1;
  auto s = s_vector(p) <=> s_vector(q);
  return s < 0 ? -1 : (s == 0 ? 0 : 1);
}

std::vector<IntPoly> reduced_poly_order(std::vector<IntPoly> candidates, unsigned precision_bits) {
  if (candidates.empty()) throw InvalidInput("no candidate polynomials");
  const int n = candidates.front().degree();
  for (const IntPoly& c : candidates) {
    if (!c.is_monic()) throw InvalidInput("candidate " + c.to_string() + " is not monic");
    if (c.degree() != n) throw InvalidInput("candidates have different degrees");
    if (n < 1) throw InvalidInput("candidate " + c.to_string() + " is constant");
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](const IntPoly& a, const IntPoly& b) {
    return compare_reduced(a, b, precision_bits) < 0;
  });
  return candidates;
}

IntPoly reduced_poly_select(const std::vector<IntPoly>& candidates, unsigned precision_bits) {
  return reduced_poly_order(candidates, precision_bits).front();
}

}  // namespace idealorder::field
