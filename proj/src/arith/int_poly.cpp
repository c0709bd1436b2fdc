#include "idealorder/arith/int_poly.hpp"

#include <algorithm>
#include <cctype>

#include "idealorder/error.hpp"

namespace idealorder::arith {

namespace {

std::vector<Integer> schoolbook(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void add_into(std::vector<Integer>& dst, const std::vector<Integer>& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
}

std::vector<Integer> karatsuba(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) return schoolbook(a, b);
  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto split = [half](const std::vector<Integer>& v) {
    std::vector<Integer> lo(v.begin(), v.begin() + std::min(half, v.size()));
    std::vector<Integer> hi;
    if (v.size() > half) hi.assign(v.begin() + half, v.end());
    if (lo.empty()) lo.push_back(0);
    if (hi.empty()) hi.push_back(0);
    return std::pair{lo, hi};
  };
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  std::vector<Integer> z0 = karatsuba(a0, b0);
  std::vector<Integer> z2 = karatsuba(a1, b1);
  std::vector<Integer> sa = a0, sb = b0;
  add_into(sa, a1, 0);
  add_into(sb, b1, 0);
  std::vector<Integer> z1 = karatsuba(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  std::vector<Integer> r(a.size() + b.size() - 1);
  add_into(r, z0, 0);
  add_into(r, z1, half);
  add_into(r, z2, 2 * half);
  r.resize(a.size() + b.size() - 1);
  return r;
}

}  // namespace

std::vector<Integer> multiply_coeffs(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  return karatsuba(a, b);
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::reduce(const Integer& modulus) const {
  std::vector<Integer> r;
  r.reserve(coeffs_.size());
  for (const Integer& c : coeffs_) r.push_back(mod(c, modulus));
  return IntPoly(std::move(r));
}

bool IntPoly::divisible_by(const Integer& m) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()) != 0; });
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  add_into(coeffs_, o.coeffs_, 0);
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (Integer& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) { return IntPoly(multiply_coeffs(a.coeffs_, b.coeffs_)); }

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer a = abs(c);
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    bool unit = (a == 1 && i > 0);
    if (!unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw InvalidInput("divisor must be monic");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Integer c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  if (m == 0 && n == 0) return 1;
  if (m == 0) return ipow(a.leading(), n);
  if (n == 0) return ipow(b.leading(), m);
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) s[row][row + j] = a.coeffs()[m - j];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) s[n + row][row + j] = b.coeffs()[n - j];
  return determinant(std::move(s));
}

Integer discriminant(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1)
    throw InvalidInput("discriminant requires a monic polynomial of degree >= 1, got " + f.to_string());
  const auto n = static_cast<unsigned long>(f.degree());
  Integer r = resultant(f, f.derivative());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidInput("empty polynomial");
  std::vector<Integer> coeffs;
  std::size_t i = 0;
  auto fail = [&]() { return InvalidInput("malformed polynomial '" + std::string(text) + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail();
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = 1;
    bool has_number = i > start;
    if (has_number) c = Integer(s.substr(start, i - start));
    unsigned long power = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'x' || s[i] == 'X')) {
      if (s[i] == '*') {
        if (!has_number) throw fail();
        ++i;
      }
      if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) throw fail();
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) throw fail();
        power = std::stoul(s.substr(ps, i - ps));
      }
    } else if (!has_number) {
      throw fail();
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace idealorder::arith
