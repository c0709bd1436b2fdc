#include "idealorder/arith/factor.hpp"

#include <algorithm>
#include <limits>

#include "idealorder/error.hpp"

namespace idealorder::arith {

namespace {

ModPoly pth_root(const ModPoly& f) {
  const Integer& p = f.modulus();
  const unsigned long step = p.get_ui();
  std::vector<Integer> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += step) r.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(r));
}

ModPoly exact_quotient(const ModPoly& a, const ModPoly& b) { return divrem(a, b).first; }

std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) {
  const Integer& p = f.modulus();
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly remaining = f;
  ModPoly h = divrem(ModPoly::x(p), remaining).second;
  for (unsigned d = 1; remaining.degree() >= static_cast<int>(2 * d); ++d) {
    h = powmod(h, p, remaining);
    ModPoly g = poly_gcd_mod_p(h - ModPoly::x(p), remaining);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      remaining = exact_quotient(remaining, g);
      h = divrem(h, remaining).second;
    }
  }
  if (remaining.degree() > 0) out.emplace_back(remaining, static_cast<unsigned>(remaining.degree()));
  return out;
}

void equal_degree(const ModPoly& g, unsigned d, gmp_randclass& rng, std::vector<ModPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const Integer& p = g.modulus();
  const Integer exponent = (ipow(p, d) - 1) / 2;
  while (true) {
    std::vector<Integer> coeffs;
    for (int i = 0; i < g.degree(); ++i) coeffs.push_back(rng.get_z_range(p));
    ModPoly a(p, std::move(coeffs));
    if (a.degree() < 1) continue;
    ModPoly b(p, {});
    if (p == 2) {
      ModPoly term = a;
      b = term;
      for (unsigned i = 1; i < d; ++i) {
        term = divrem(term * term, g).second;
        b = b + term;
      }
    } else {
      b = powmod(a, exponent, g) - ModPoly::one(p);
    }
    if (b.is_zero()) continue;
    ModPoly u = poly_gcd_mod_p(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(exact_quotient(g, u), d, rng, out);
      return;
    }
  }
}

// Dense rational solve of M x = rhs; M must be nonsingular.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidInput("singular system in Newton lifting (factors share a root)");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

}  // namespace

unsigned content_valuation(const IntPoly& f, const Integer& p) {
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const Integer& c : f.coeffs())
    if (c != 0) best = std::min(best, valuation(c, p));
  return best;
}

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f) {
  const Integer& p = f.modulus();
  std::vector<ModFactor> result;
  if (f.degree() < 1) return result;
  ModPoly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f)))
      result.push_back({g, static_cast<unsigned>(m * p.get_ui())});
    return result;
  }
  ModPoly c = poly_gcd_mod_p(f, fp);
  ModPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    ModPoly y = poly_gcd_mod_p(w, c);
    ModPoly z = exact_quotient(w, y);
    if (z.degree() > 0) result.push_back({z, i});
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
      result.push_back({g, static_cast<unsigned>(m * p.get_ui())});
  }
  return result;
}

std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p, std::uint64_t seed) {
  if (!is_prime(p)) throw InvalidInput("factor_mod_p: " + to_string(p) + " is not prime");
  if (!f.is_monic()) throw InvalidInput("factor_mod_p: polynomial must be monic, got " + f.to_string());
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  std::vector<ModFactor> result;
  for (const auto& [part, mult] : squarefree_decomposition(ModPoly(f, p))) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<ModPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) result.push_back({std::move(piece), mult});
    }
  }
  std::sort(result.begin(), result.end(),
            [](const ModFactor& a, const ModFactor& b) { return degree_lex_less(a.factor, b.factor); });
  return result;
}

LiftedPair newton_split(const IntPoly& c, const IntPoly& a0, const IntPoly& b0, const Integer& p,
                        unsigned start, unsigned k) {
  if (!c.is_monic() || !a0.is_monic() || !b0.is_monic())
    throw InvalidInput("newton_split requires monic polynomials");
  if (a0.degree() + b0.degree() != c.degree()) throw InvalidInput("newton_split: degree mismatch");
  const Integer res = resultant(a0, b0);
  if (res == 0) throw NotCoprime("newton_split: starting factors share a root");
  const unsigned v = valuation(res, p);
  if (start <= 2 * v)
    throw InvalidInput("newton_split: starting precision " + std::to_string(start) +
                       " does not exceed twice the resultant valuation " + std::to_string(v));
  const Integer modulus = ipow(p, k);
  IntPoly a = a0.reduce(modulus), b = b0.reduce(modulus);
  const IntPoly target = c.reduce(modulus);
  const auto da = static_cast<std::size_t>(a.degree());
  const auto db = static_cast<std::size_t>(b.degree());
  const std::size_t n = da + db;
  unsigned error_valuation = 0;
  while (true) {
    IntPoly err = (target - a * b).reduce(modulus);
    if (err.is_zero()) break;
    unsigned ev = content_valuation(err, p);
    if (ev <= error_valuation && error_valuation != 0)
      throw PrecisionExhausted("newton_split failed to converge");
    error_valuation = ev;
    // Columns: delta_a coefficients (multiplied by b), then delta_b (multiplied by a).
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t i = 0; i <= db; ++i) m[i + j][j] = b.coeff(i);
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t i = 0; i <= da; ++i) m[i + j][da + j] = a.coeff(i);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = err.coeff(i);
    std::vector<Rational> x = solve_rational(std::move(m), std::move(rhs));
    std::vector<Integer> delta_a(da), delta_b(db);
    for (std::size_t j = 0; j < da; ++j) delta_a[j] = reduce_rational(x[j], p, modulus);
    for (std::size_t j = 0; j < db; ++j) delta_b[j] = reduce_rational(x[da + j], p, modulus);
    a = (a + IntPoly(delta_a)).reduce(modulus);
    b = (b + IntPoly(delta_b)).reduce(modulus);
  }
  return {a, b, k - v};
}

std::vector<ModPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& parts, const Integer& p,
                                 unsigned k) {
  if (!f.is_monic()) throw InvalidInput("hensel_lift: polynomial must be monic");
  if (!is_prime(p)) throw InvalidInput("hensel_lift: " + to_string(p) + " is not prime");
  if (k == 0) throw InvalidInput("hensel_lift: precision must be positive");
  if (parts.empty()) throw InvalidInput("hensel_lift: no parts");
  ModPoly product = ModPoly::one(p);
  for (const ModPoly& part : parts) {
    if (part.modulus() != p || !part.is_monic())
      throw InvalidInput("hensel_lift: parts must be monic polynomials modulo p");
    product = product * part;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!poly_gcd_mod_p(parts[i], parts[j]).is_one())
        throw NotCoprime("hensel_lift: parts " + parts[i].to_string() + " and " + parts[j].to_string() +
                         " are not coprime mod " + to_string(p));
  const ModPoly reduced(f, p);
  if (product != reduced) {
    for (const ModPoly& part : parts) {
      if (part.degree() > 0 && divrem(reduced, part * part).second.is_zero())
        throw NotCoprime("hensel_lift: " + part.to_string() + " divides " + f.to_string() +
                         " with multiplicity > 1 mod " + to_string(p) + "; cluster repeated factors first");
    }
    throw InvalidInput("hensel_lift: product of parts differs from the polynomial mod p");
  }
  std::vector<ModPoly> out;
  const Integer modulus = ipow(p, k);
  IntPoly current = f;
  ModPoly rest_mod_p = product;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    rest_mod_p = divrem(rest_mod_p, parts[i]).first;
    LiftedPair lifted = newton_split(current, parts[i].lift(), rest_mod_p.lift(), p, 1, k);
    out.emplace_back(lifted.a, modulus);
    current = lifted.b;
  }
  out.emplace_back(current.reduce(modulus), modulus);
  return out;
}

}  // namespace idealorder::arith
