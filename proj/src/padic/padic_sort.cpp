#include "idealorder/padic/padic_sort.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "idealorder/error.hpp"

namespace idealorder::padic {

using arith::ModPoly;

std::string to_string(Provenance p) { return p == Provenance::Fixture ? "fixture" : "internal-hensel"; }

IntPoly PadicFactorApprox::poly() const {
  std::vector<Integer> c = coeffs;
  c.push_back(1);
  return IntPoly(std::move(c));
}

PadicFactorApprox PadicFactorApprox::truncate(unsigned k_new) const {
  if (k_new > k) throw InvalidInput("cannot raise precision by truncation");
  PadicFactorApprox out = *this;
  out.k = k_new;
  Integer m = arith::ipow(p, k_new);
  for (Integer& c : out.coeffs) c = arith::mod(c, m);
  return out;
}

DigitKey digit_key(const PadicFactorApprox& h) {
  DigitKey key;
  key.digits.reserve(h.coeffs.size() * h.k);
  std::vector<Integer> rest = h.coeffs;
  for (unsigned j = 0; j < h.k; ++j)
    for (Integer& c : rest) {
      Integer digit = c % h.p;
      key.digits.push_back(static_cast<unsigned>(digit.get_ui()));
      c /= h.p;
    }
  return key;
}

std::vector<PadicFactorApprox> sort_factors(std::vector<PadicFactorApprox> factors) {
  for (const auto& h : factors)
    if (h.p != factors.front().p || h.k != factors.front().k)
      throw InvalidInput("factors to sort must share p and k");
  std::vector<std::pair<DigitKey, PadicFactorApprox>> keyed;
  for (auto& h : factors) keyed.emplace_back(digit_key(h), std::move(h));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.degree() != b.second.degree()) return a.second.degree() < b.second.degree();
    return a.first < b.first;
  });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    const auto& a = keyed[i - 1].second;
    const auto& b = keyed[i].second;
    if (a.degree() == b.degree() && keyed[i - 1].first == keyed[i].first)
      throw NeedsMorePrecision(a.k, "p-adic factors " + a.poly().to_string() + " and " + b.poly().to_string() +
                                        " agree mod " + arith::to_string(a.p) + "^" + std::to_string(a.k));
  }
  std::vector<PadicFactorApprox> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

namespace {

IntPoly reduce(const IntPoly& f, const Integer& m) { return f.reduce(m); }

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) { return reduce(a * b, m); }

IntPoly power_mod(const IntPoly& a, unsigned e, const Integer& m) {
  IntPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = mul_mod(r, a, m);
  return r;
}

struct Cluster {
  IntPoly poly;          // monic, known mod p^precision
  ModPoly base;          // irreducible h with poly = h^multiplicity mod p
  unsigned multiplicity;
  unsigned precision;
};

class ClusterSplitter {
 public:
  ClusterSplitter(const Integer& p, std::uint64_t budget) : p_(p), budget_(budget) {}

  // Splits a cluster into p-adic irreducibles; nullopt when the budget or the
  // available precision runs out first.
  std::optional<std::vector<Cluster>> split(const Cluster& c) {
    if (c.multiplicity == 1) return std::vector<Cluster>{c};
    for (unsigned j = 1; 2 * j <= c.multiplicity; ++j) {
      auto found = search(c, j);
      if (!found) return std::nullopt;
      if (found->precision == 0) continue;  // no divisor of this degree exists
      std::vector<Cluster> out;
      for (const Cluster& part : {Cluster{found->poly, c.base, j, found->precision},
                                  Cluster{found->partner, c.base, c.multiplicity - j, found->precision}}) {
        auto sub = split(part);
        if (!sub) return std::nullopt;
        out.insert(out.end(), sub->begin(), sub->end());
      }
      return out;
    }
    return std::vector<Cluster>{c};
  }

  std::uint64_t tested() const { return tested_; }

 private:
  struct Found {
    IntPoly poly, partner;
    unsigned precision;  // 0 means proven absent
  };

  // Level-by-level search for a monic divisor d of c.poly with d = h^j mod p.
  // A candidate at level s with cofactor q and 2 v_p(Res(d, q)) < s seeds
  // Newton lifting; an empty level proves there is no such divisor.
  std::optional<Found> search(const Cluster& c, unsigned j) {
    const Integer pw = arith::ipow(p_, c.precision);
    const unsigned t = j * static_cast<unsigned>(c.base.degree());
    std::vector<IntPoly> level{power_mod(c.base.lift(), j, p_)};
    for (unsigned s = 1;; ++s) {
      if (s >= 2) {
        for (const IntPoly& d : level) {
          IntPoly q = reduce(arith::divrem_monic(c.poly, d).first, pw);
          Integer res = arith::resultant(d, q);
          if (res == 0) continue;
          unsigned v = arith::valuation(res, p_);
          if (2 * v >= s) continue;
          arith::LiftedPair lifted = arith::newton_split(c.poly, d, q, p_, s, c.precision);
          return Found{lifted.a, lifted.b, lifted.precision};
        }
      }
      if (s + 1 > c.precision) return std::nullopt;
      std::vector<IntPoly> grown;
      for (const IntPoly& d : level) {
        if (++tested_ > budget_) return std::nullopt;
        if (!lift_candidates(c.poly, d, s, t, grown)) return std::nullopt;
      }
      if (grown.empty()) return Found{IntPoly{}, IntPoly{}, 0};
      level = std::move(grown);
    }
  }

  // Appends every d + p^s * delta (deg delta < t) dividing c mod p^{s+1}.
  // With c = d*q + r, the condition is delta * q = r / p^s modulo (p, d),
  // a linear system over F_p whose solutions are enumerated.
  bool lift_candidates(const IntPoly& c, const IntPoly& d, unsigned s, unsigned t, std::vector<IntPoly>& out) {
    const Integer ps = arith::ipow(p_, s);
    auto [q, r] = arith::divrem_monic(c, d);
    ModPoly dbar(d, p_), qbar(q, p_);
    // Column i of the system is X^i * q mod d over F_p.
    std::vector<std::vector<Integer>> rows(t, std::vector<Integer>(t + 1, 0));
    for (unsigned i = 0; i < t; ++i) {
      ModPoly col = arith::divrem(ModPoly(IntPoly::monomial(1, i), p_) * qbar, dbar).second;
      for (unsigned row = 0; row < t; ++row) rows[row][i] = col.coeff(row);
    }
    for (unsigned row = 0; row < t; ++row) rows[row][t] = arith::mod(r.coeff(row) / ps, p_);
    // Row reduction to reduced echelon form.
    std::vector<int> pivot_col;
    unsigned rank = 0;
    for (unsigned col = 0; col < t && rank < t; ++col) {
      unsigned sel = rank;
      while (sel < t && rows[sel][col] == 0) ++sel;
      if (sel == t) continue;
      std::swap(rows[sel], rows[rank]);
      Integer inv = arith::inverse_mod(rows[rank][col], p_);
      for (Integer& x : rows[rank]) x = arith::mod(x * inv, p_);
      for (unsigned other = 0; other < t; ++other)
        if (other != rank && rows[other][col] != 0) {
          Integer f = rows[other][col];
          for (unsigned k = 0; k <= t; ++k) rows[other][k] = arith::mod(rows[other][k] - f * rows[rank][k], p_);
        }
      pivot_col.push_back(static_cast<int>(col));
      ++rank;
    }
    for (unsigned row = rank; row < t; ++row)
      if (rows[row][t] != 0) return true;  // inconsistent: no lift
    std::vector<unsigned> free_cols;
    for (unsigned col = 0; col < t; ++col)
      if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(col)) == pivot_col.end())
        free_cols.push_back(col);
    std::vector<Integer> free_values(free_cols.size(), 0);
    while (true) {
      if (++tested_ > budget_) return false;
      std::vector<Integer> delta(t, 0);
      for (std::size_t i = 0; i < free_cols.size(); ++i) delta[free_cols[i]] = free_values[i];
      for (unsigned row = 0; row < rank; ++row) {
        Integer v = rows[row][t];
        for (std::size_t i = 0; i < free_cols.size(); ++i) v -= rows[row][free_cols[i]] * free_values[i];
        delta[static_cast<unsigned>(pivot_col[row])] = arith::mod(v, p_);
      }
      std::vector<Integer> coeffs(t + 1);
      for (unsigned i = 0; i < t; ++i) coeffs[i] = d.coeff(i) + ps * delta[i];
      coeffs[t] = 1;
      out.emplace_back(std::move(coeffs));
      std::size_t i = 0;
      while (i < free_values.size() && ++free_values[i] == p_) free_values[i++] = 0;
      if (i == free_values.size()) break;
    }
    return true;
  }

  Integer p_;
  std::uint64_t budget_;
  std::uint64_t tested_ = 0;
};

PadicFactorApprox make_factor(const IntPoly& f, const Integer& p, unsigned k, Provenance prov) {
  IntPoly r = f.reduce(arith::ipow(p, k));
  std::vector<Integer> c(r.coeffs().begin(), r.coeffs().end() - 1);
  c.resize(static_cast<std::size_t>(f.degree()), 0);
  return PadicFactorApprox{p, k, std::move(c), prov};
}

// Fixture factors lying over the cluster's residue polynomial, checked to
// multiply out to the cluster modulo p^k.
std::vector<PadicFactorApprox> from_fixture(const Cluster& c, const Integer& p, unsigned k,
                                            const field::PadicFixture* fixture) {
  const std::string where = "cluster " + ModPoly(c.base).to_string() + "^" + std::to_string(c.multiplicity) +
                            " above p=" + arith::to_string(p);
  if (!fixture) throw FixtureRequired("fixture p-adic factors required for " + where);
  if (fixture->precision < k)
    throw FixtureRequired("fixture p-adic factors for " + where + " have precision " +
                          std::to_string(fixture->precision) + " < " + std::to_string(k));
  const Integer pk = arith::ipow(p, k);
  std::vector<PadicFactorApprox> out;
  IntPoly product{1};
  for (const IntPoly& h : fixture->factors) {
    ModPoly hbar(h, p);
    if (hbar.degree() < 1) continue;
    ModPoly g = arith::poly_gcd_mod_p(hbar, c.base);
    if (g.degree() < 1) continue;
    out.push_back(make_factor(h, p, k, Provenance::Fixture));
    product = mul_mod(product, h, pk);
  }
  if (product != c.poly.reduce(pk))
    throw FixtureRequired("fixture p-adic factors do not multiply out to " + where);
  return out;
}

}  // namespace

std::vector<PadicFactorApprox> padic_factors(const IntPoly& g, const Integer& p, unsigned k,
                                             const field::PadicFixture* fixture, const FactorOptions& options) {
  if (k < 1) throw InvalidInput("precision k must be at least 1");
  if (!g.is_monic() || g.degree() < 1) throw InvalidInput("p-adic factors need a monic nonconstant polynomial");
  if (!arith::is_prime(p)) throw InvalidInput(arith::to_string(p) + " is not prime");
  const Integer disc = arith::discriminant(g);
  if (disc == 0) throw InvalidInput("polynomial is not squarefree");

  std::vector<arith::ModFactor> residue = arith::factor_mod_p(g, p, options.seed);
  const unsigned work = k + arith::valuation(disc, p) + 1;
  std::vector<ModPoly> parts;
  for (const auto& mf : residue) {
    ModPoly part = ModPoly::one(p);
    for (unsigned i = 0; i < mf.multiplicity; ++i) part = part * mf.factor;
    parts.push_back(part);
  }
  std::vector<ModPoly> lifted = arith::hensel_lift(g, parts, p, work);

  const bool all_irreducible = options.prime_count && *options.prime_count == residue.size();
  ClusterSplitter splitter(p, options.candidate_budget);
  std::vector<PadicFactorApprox> out;
  for (std::size_t i = 0; i < residue.size(); ++i) {
    Cluster c{lifted[i].lift(), residue[i].factor, residue[i].multiplicity, work};
    if (all_irreducible || c.multiplicity == 1) {
      out.push_back(make_factor(c.poly, p, k, Provenance::InternalHensel));
      continue;
    }
    auto pieces = splitter.split(c);
    if (!pieces) {
      for (auto& h : from_fixture(c, p, k, fixture)) out.push_back(std::move(h));
      continue;
    }
    for (const Cluster& piece : *pieces) out.push_back(make_factor(piece.poly, p, k, Provenance::InternalHensel));
  }
  return out;
}

std::vector<PadicFactorApprox> padic_factors(const field::NumberField& field, const Integer& p, unsigned k,
                                             const field::FixturePrimeBlock* block, FactorOptions options) {
  const field::PadicFixture* fixture = nullptr;
  if (block) {
    if (!options.prime_count) options.prime_count = static_cast<unsigned>(block->primes.size());
    if (block->padic) fixture = &*block->padic;
  }
  return padic_factors(field.polynomial(), p, k, fixture, options);
}

unsigned precision_cap() {
  if (const char* env = std::getenv("IDEALORDER_PRECISION_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionCap;
}

SortedFactors sorted_padic_factors(const IntPoly& g, const Integer& p, const field::PadicFixture* fixture,
                                   const FactorOptions& options, unsigned start_k, unsigned k_max) {
  if (start_k < 1) start_k = 1;
  for (unsigned k = std::min(start_k, k_max);; k = std::min(2 * k, k_max)) {
    try {
      return SortedFactors{sort_factors(padic_factors(g, p, k, fixture, options)), k};
    } catch (const NeedsMorePrecision& e) {
      if (k >= k_max)
        throw PrecisionExhausted(std::string(e.what()) + " (precision cap " + std::to_string(k_max) + ")");
    }
  }
}

}  // namespace idealorder::padic
