#include "idealorder/arith/integer.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealorder/error.hpp"

namespace idealorder::arith {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_rho(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_rho(d, out);
      factor_rho(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  Integer m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidInput("element " + to_string(a) + " is not invertible modulo " + to_string(m));
  return r;
}

Factorization factor_integer(const Integer& n) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  Integer m = abs(n);
  Factorization result;
  for (unsigned long d = 2; d <= kTrialDivisionBound; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      PrimePower pp{Integer(d), 0};
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        m /= d;
        ++pp.exponent;
      }
      result.push_back(pp);
    }
  }
  std::vector<Integer> rest;
  factor_rho(m, rest);
  std::sort(rest.begin(), rest.end());
  for (const Integer& q : rest) {
    if (!result.empty() && result.back().prime == q)
      ++result.back().exponent;
    else
      result.push_back({q, 1});
  }
  std::sort(result.begin(), result.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

Integer multiply_out(const Factorization& f) {
  Integer r = 1;
  for (const auto& pp : f) r *= ipow(pp.prime, pp.exponent);
  return r;
}

std::optional<PrimePower> as_prime_power(const Integer& n) {
  if (n < 2) return std::nullopt;
  Factorization f = factor_integer(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return std::nullopt;
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  if (digits == "0" && text.front() == '-') return std::nullopt;
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = parse_integer(text.substr(0, slash));
  if (!num) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(*num);
  auto den = parse_integer(text.substr(slash + 1));
  if (!den || *den <= 0)
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Rational q(*num, *den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

int valuation(const Rational& q, const Integer& p) {
  return static_cast<int>(valuation(q.get_num(), p)) - static_cast<int>(valuation(q.get_den(), p));
}

Integer reduce_rational(const Rational& q, const Integer& p, const Integer& modulus) {
  if (mpz_divisible_p(q.get_den_mpz_t(), p.get_mpz_t()))
    throw InvalidInput("rational " + to_string(q) + " is not " + to_string(p) + "-integral");
  return mod(q.get_num() * inverse_mod(q.get_den(), modulus), modulus);
}

}  // namespace idealorder::arith
