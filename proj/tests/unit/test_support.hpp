#pragma once

// Independent oracles and generators shared by the unit tests. Nothing here
// calls into the code paths it is used to check.

#include <random>
#include <vector>

#include "idealorder/arith/factor.hpp"

namespace test_support {

using idealorder::arith::Integer;
using idealorder::arith::IntPoly;
using idealorder::arith::ModPoly;

inline const IntPoly kDedekindCubic{8, 2, -1, 1};  // X^3 - X^2 + 2X + 8
inline const IntPoly kDecic{79, 111, -1631, 2343, 44, -1080, 242, 120, -35, -3, 1};

// Rabin's test: h of degree d is irreducible over F_p iff X^{p^d} = X mod h
// and gcd(X^{p^{d/q}} - X, h) = 1 for each prime q | d.
inline bool is_irreducible_mod_p(const ModPoly& h) {
  const Integer& p = h.modulus();
  const int d = h.degree();
  if (d < 1) return false;
  auto frobenius_power = [&](int times) {
    ModPoly x = ModPoly::x(p);
    ModPoly r = idealorder::arith::divrem(x, h).second;
    for (int i = 0; i < times; ++i) r = idealorder::arith::powmod(r, p, h);
    return r;
  };
  if (frobenius_power(d) != idealorder::arith::divrem(ModPoly::x(p), h).second) return false;
  for (int q = 2; q <= d; ++q) {
    bool prime = true;
    for (int r = 2; r * r <= q; ++r)
      if (q % r == 0) prime = false;
    if (!prime || d % q != 0) continue;
    ModPoly g = idealorder::arith::poly_gcd_mod_p(frobenius_power(d / q) - ModPoly::x(p), h);
    if (!g.is_one()) return false;
  }
  return true;
}

inline IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Integer> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(dist(rng));
  c.emplace_back(1);
  return IntPoly(std::move(c));
}

inline std::vector<long> small_primes(long limit) {
  std::vector<long> out;
  for (long n = 2; n <= limit; ++n) {
    bool prime = true;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) prime = false;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace test_support
