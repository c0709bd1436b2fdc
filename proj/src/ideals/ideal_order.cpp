#include "idealorder/ideals/ideal_order.hpp"

#include <algorithm>
#include <numeric>

#include "idealorder/error.hpp"

namespace idealorder::ideals {

namespace {

// S(i, m, w): exponent vectors on primes i..r-1 with norm exponent m and weight w.
class SuffixCounts {
 public:
  SuffixCounts(const SplittingProfile& profile, unsigned n)
      : f_(profile.primes.size()), n_(n), table_((f_.size() + 1) * (n + 1) * (n + 1)) {
    for (std::size_t i = 0; i < f_.size(); ++i) f_[i] = profile.primes[i].f;
    at(f_.size(), 0, 0) = 1;
    for (std::size_t i = f_.size(); i-- > 0;)
      for (unsigned m = 0; m <= n; ++m)
        for (unsigned w = 0; w <= n; ++w) {
          Integer c = at(i + 1, m, w);
          if (m >= f_[i] && w >= 1) c += at(i, m - f_[i], w - 1);
          at(i, m, w) = c;
        }
  }

  Integer get(std::size_t i, long m, long w) const {
    if (m < 0 || w < 0 || m > static_cast<long>(n_) || w > static_cast<long>(n_)) return 0;
    return table_[index(i, static_cast<unsigned>(m), static_cast<unsigned>(w))];
  }

  unsigned f(std::size_t i) const { return f_[i]; }
  std::size_t size() const { return f_.size(); }

 private:
  std::size_t index(std::size_t i, unsigned m, unsigned w) const { return (i * (n_ + 1) + m) * (n_ + 1) + w; }
  Integer& at(std::size_t i, unsigned m, unsigned w) { return table_[index(i, m, w)]; }

  std::vector<unsigned> f_;
  unsigned n_;
  std::vector<Integer> table_;
};

void check_vector(const SplittingProfile& profile, const ExponentVector& v) {
  if (v.size() != profile.primes.size())
    throw InvalidInput("exponent vector of length " + std::to_string(v.size()) + " for " +
                       std::to_string(profile.primes.size()) + " primes above p=" + profile.p.get_str());
}

bool is_zero(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
}

void generate(const SplittingProfile& profile, std::size_t i, unsigned left, ExponentVector& cur,
              std::vector<ExponentVector>& out) {
  if (i == cur.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  unsigned f = profile.primes[i].f;
  for (unsigned x = 0; x * f <= left; ++x) {
    cur[i] = x;
    generate(profile, i + 1, left - x * f, cur, out);
  }
  cur[i] = 0;
}

arith::Factorization factor_norm(const Integer& n) {
  if (n < 1) throw InvalidInput("norm must be positive");
  if (n == 1) return {};
  return arith::factor_integer(n);
}

unsigned to_unsigned(const Integer& x, const char* what) {
  if (!x.fits_uint_p()) throw InvalidInput(std::string(what) + " out of range");
  return static_cast<unsigned>(x.get_ui());
}

}  // namespace

std::string IdealLabel::to_string() const { return norm.get_str() + "." + index.get_str(); }

IdealLabel IdealLabel::parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) throw InvalidInput("label '" + std::string(text) + "' has no '.'");
  auto n = arith::parse_integer(text.substr(0, dot));
  auto i = arith::parse_integer(text.substr(dot + 1));
  if (!n || !i || *n < 1 || *i < 1 || text[0] == '-' || text[dot + 1] == '-')
    throw InvalidInput("malformed label '" + std::string(text) + "'");
  return IdealLabel{*n, *i};
}

unsigned weight(const ExponentVector& v) { return std::accumulate(v.begin(), v.end(), 0u); }

unsigned norm_exponent(const SplittingProfile& profile, const ExponentVector& v) {
  check_vector(profile, v);
  unsigned n = 0;
  for (std::size_t i = 0; i < v.size(); ++i) n += v[i] * profile.primes[i].f;
  return n;
}

std::strong_ordering cmp_prime_power(const SplittingProfile& profile, const ExponentVector& a,
                                     const ExponentVector& b) {
  if (auto c = norm_exponent(profile, a) <=> norm_exponent(profile, b); c != 0) return c;
  if (auto c = weight(a) <=> weight(b); c != 0) return c;
  return b <=> a;
}

std::strong_ordering cmp_ideals(const ProfileSource& source, const Ideal& a, const Ideal& b) {
  if (a.norm != b.norm) return a.norm < b.norm ? std::strong_ordering::less : std::strong_ordering::greater;
  // Equal norms give the same primes p with the same norm exponents.
  auto ia = a.components.begin();
  auto ib = b.components.begin();
  for (; ia != a.components.end() && ib != b.components.end(); ++ia, ++ib) {
    if (ia->first != ib->first) throw InvalidInput("ideals of equal norm with different support");
    if (ia->second == ib->second) continue;
    return cmp_prime_power(source.profile(ia->first), ia->second, ib->second);
  }
  return std::strong_ordering::equal;
}

Ideal unit_ideal() { return Ideal{}; }

Ideal make_ideal(const ProfileSource& source, std::map<Integer, ExponentVector> components) {
  Ideal out;
  for (auto& [p, v] : components) {
    if (is_zero(v)) continue;
    auto profile = source.profile(p);
    out.norm *= arith::ipow(p, norm_exponent(profile, v));
    out.components.emplace(p, std::move(v));
  }
  return out;
}

Ideal prime_ideal(const ProfileSource& source, const Integer& p, std::size_t position) {
  auto profile = source.profile(p);
  if (position >= profile.primes.size())
    throw NoSuchIdeal("only " + std::to_string(profile.primes.size()) + " primes above p=" + p.get_str());
  ExponentVector v(profile.primes.size(), 0);
  v[position] = 1;
  return Ideal{{{p, v}}, arith::ipow(p, profile.primes[position].f)};
}

Ideal multiply(const ProfileSource& source, const Ideal& a, const Ideal& b) {
  auto components = a.components;
  for (const auto& [p, v] : b.components) {
    auto [it, inserted] = components.try_emplace(p, v);
    if (inserted) continue;
    if (it->second.size() != v.size()) throw InvalidInput("components above p=" + p.get_str() + " disagree in length");
    for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
  }
  Ideal out = make_ideal(source, std::move(components));
  if (out.norm != a.norm * b.norm) throw InvalidInput("norm of a product is not the product of the norms");
  return out;
}

std::vector<ExponentVector> enumerate_prime_power(const SplittingProfile& profile, unsigned n) {
  std::vector<ExponentVector> out;
  ExponentVector cur(profile.primes.size(), 0);
  generate(profile, 0, n, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const ExponentVector& a, const ExponentVector& b) { return cmp_prime_power(profile, a, b) < 0; });
  return out;
}

Integer count_prime_power(const SplittingProfile& profile, unsigned n) {
  SuffixCounts s(profile, n);
  Integer total = 0;
  for (unsigned w = 0; w <= n; ++w) total += s.get(0, n, w);
  return total;
}

std::vector<Ideal> enumerate_norm(const ProfileSource& source, const arith::Factorization& n) {
  std::vector<Ideal> out{unit_ideal()};
  for (const auto& [p, a] : n) {
    auto profile = source.profile(p);
    auto vs = enumerate_prime_power(profile, a);
    Integer q = arith::ipow(p, a);
    std::vector<Ideal> next;
    next.reserve(out.size() * vs.size());
    for (const auto& prefix : out)
      for (const auto& v : vs) {
        Ideal x = prefix;
        x.components.emplace(p, v);
        x.norm *= q;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Ideal> enumerate_norm(const ProfileSource& source, const Integer& n) {
  return enumerate_norm(source, factor_norm(n));
}

Integer count_norm(const ProfileSource& source, const arith::Factorization& n) {
  Integer total = 1;
  for (const auto& [p, a] : n) total *= count_prime_power(source.profile(p), a);
  return total;
}

Integer count_norm(const ProfileSource& source, const Integer& n) { return count_norm(source, factor_norm(n)); }

Integer rank_prime_power(const SplittingProfile& profile, const ExponentVector& v) {
  unsigned n = norm_exponent(profile, v);
  unsigned w = weight(v);
  SuffixCounts s(profile, n);
  Integer r = 0;
  for (unsigned u = 0; u < w; ++u) r += s.get(0, n, u);
  long m = n, left = w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    long f = s.f(i);
    for (long x = v[i] + 1; x * f <= m && x <= left; ++x) r += s.get(i + 1, m - x * f, left - x);
    m -= static_cast<long>(v[i]) * f;
    left -= v[i];
  }
  return r;
}

ExponentVector unrank_prime_power(const SplittingProfile& profile, unsigned n, Integer position) {
  SuffixCounts s(profile, n);
  long w = 0;
  for (;; ++w) {
    if (w > static_cast<long>(n)) throw NoSuchIdeal("position beyond the ideals of norm p^" + std::to_string(n));
    Integer c = s.get(0, n, w);
    if (position < c) break;
    position -= c;
  }
  ExponentVector v(s.size(), 0);
  long m = n;
  for (std::size_t i = 0; i < v.size(); ++i) {
    long f = s.f(i);
    long x = std::min(m / f, w);
    for (; x >= 0; --x) {
      Integer c = s.get(i + 1, m - x * f, w - x);
      if (position < c) break;
      position -= c;
    }
    v[i] = static_cast<unsigned>(x);
    m -= x * f;
    w -= x;
  }
  return v;
}

IdealLabel rank(const ProfileSource& source, const Ideal& a) {
  Integer index = 0;
  for (const auto& [p, v] : a.components) {
    auto profile = source.profile(p);
    index = index * count_prime_power(profile, norm_exponent(profile, v)) + rank_prime_power(profile, v);
  }
  return IdealLabel{a.norm, index + 1};
}

Ideal unrank(const ProfileSource& source, const IdealLabel& label) {
  if (label.index < 1) throw InvalidInput("label index must be at least 1");
  auto n = factor_norm(label.norm);
  std::vector<SplittingProfile> profiles;
  std::vector<Integer> counts;
  Integer total = 1;
  for (const auto& [p, a] : n) {
    profiles.push_back(source.profile(p));
    counts.push_back(count_prime_power(profiles.back(), a));
    total *= counts.back();
  }
  if (label.index > total) {
    if (total == 0) throw NoSuchIdeal("no ideal " + label.to_string() + ": no ideals of norm " + label.norm.get_str());
    throw NoSuchIdeal("no ideal " + label.to_string() + ": valid indices 1.." + total.get_str() + " for norm " +
                      label.norm.get_str());
  }
  Integer rest = label.index - 1;
  Ideal out;
  out.norm = label.norm;
  for (std::size_t j = n.size(); j-- > 0;) {
    Integer q = rest % counts[j];
    rest /= counts[j];
    out.components.emplace(n[j].prime, unrank_prime_power(profiles[j], n[j].exponent, q));
  }
  return out;
}

IdealLabel prime_label(const SplittingProfile& profile, std::size_t position) {
  if (position >= profile.primes.size()) throw NoSuchIdeal("no prime at that position above p=" + profile.p.get_str());
  unsigned f = profile.primes[position].f;
  unsigned index = 0;
  for (std::size_t i = 0; i <= position; ++i)
    if (profile.primes[i].f == f) ++index;
  return IdealLabel{arith::ipow(profile.p, f), index};
}

std::string format_factorization(const ProfileSource& source, const Ideal& a) {
  if (a.is_unit()) return "(1)";
  struct Term {
    IdealLabel label;
    unsigned exponent;
  };
  std::vector<Term> terms;
  for (const auto& [p, v] : a.components) {
    auto profile = source.profile(p);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) terms.push_back({prime_label(profile, i), v[i]});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return x.label.norm != y.label.norm ? x.label.norm < y.label.norm : x.label.index < y.label.index;
  });
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '*';
    out += t.label.to_string();
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

Ideal parse_factorization(const ProfileSource& source, std::string_view text) {
  if (text == "(1)") return unit_ideal();
  if (text.empty()) throw InvalidInput("empty factorization");
  std::map<Integer, ExponentVector> components;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(start, end - start);
    unsigned exponent = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      auto e = arith::parse_integer(term.substr(caret + 1));
      if (!e || *e < 1) throw InvalidInput("bad exponent in '" + std::string(term) + "'");
      exponent = to_unsigned(*e, "exponent");
      term = term.substr(0, caret);
    }
    auto label = IdealLabel::parse(term);
    auto pp = arith::as_prime_power(label.norm);
    if (!pp) throw NoSuchIdeal(label.to_string() + " is not a prime label: norm is not a prime power");
    auto profile = source.profile(pp->prime);
    unsigned index = to_unsigned(label.index, "index");
    std::size_t position = profile.primes.size();
    for (std::size_t i = 0, seen = 0; i < profile.primes.size(); ++i)
      if (profile.primes[i].f == pp->exponent && ++seen == index) {
        position = i;
        break;
      }
    if (position == profile.primes.size()) throw NoSuchIdeal("no prime ideal " + label.to_string());
    auto& v = components.try_emplace(pp->prime, ExponentVector(profile.primes.size(), 0)).first->second;
    v[position] += exponent;
    start = end + 1;
  }
  return make_ideal(source, std::move(components));
}

}  // namespace idealorder::ideals
