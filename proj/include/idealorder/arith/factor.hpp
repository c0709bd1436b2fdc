#pragma once

#include <cstdint>
#include <vector>

#include "idealorder/arith/mod_poly.hpp"

namespace idealorder::arith {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed1dea1;

struct ModFactor {
  ModPoly factor;
  unsigned multiplicity = 1;

  friend bool operator==(const ModFactor&, const ModFactor&) = default;
};

/// Factorization of a monic f modulo a prime p into monic irreducibles with
/// multiplicities, sorted by degree then by coefficients from the constant
/// term upward. Equal-degree splitting is randomized; the seed makes the
/// result (already canonical) reproducible in running time as well.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p,
                                    std::uint64_t seed = kDefaultFactorSeed);

/// Squarefree decomposition of a monic polynomial over F_p.
std::vector<ModFactor> squarefree_decomposition(const ModPoly& f);

/// Lifts pairwise coprime monic parts with product f mod p to monic factors
/// of f modulo p^k. Each output reduces to its input mod p.
std::vector<ModPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& parts,
                                 const Integer& p, unsigned k);

/// Result of lifting a factorization whose factors need not be coprime mod p.
struct LiftedPair {
  IntPoly a, b;         // monic, coefficients in [0, p^k)
  unsigned precision;   // a and b agree with the true p-adic factors mod p^precision
};

/// Newton lifting of c = a0 * b0 (mod p^start) to c = a * b (mod p^k).
/// Requires start > 2 * v_p(Res(a0, b0)); the factors of c are then unique
/// near (a0, b0) and returned to precision k - v_p(Res).
LiftedPair newton_split(const IntPoly& c, const IntPoly& a0, const IntPoly& b0, const Integer& p,
                        unsigned start, unsigned k);

/// v_p of a nonzero polynomial's content (min coefficient valuation).
unsigned content_valuation(const IntPoly& f, const Integer& p);

}  // namespace idealorder::arith
