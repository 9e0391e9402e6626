#ifndef HYP_UPOLY_HPP
#define HYP_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "hyp/numbers.hpp"

namespace hyp {

// Dense univariate polynomial over a coefficient field K.
// c[i] is the coefficient of x^i; the vector carries no trailing zeros.
template <class K>
struct UPoly {
  std::vector<K> c;

  UPoly() = default;
  explicit UPoly(K k) {
    if (!is_zero(k)) c.push_back(std::move(k));
  }
  explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

  static UPoly x(const K& like) {
    UPoly p;
    p.c = {like - like, kfrom_int(like, 1)};
    return p;
  }
  static UPoly monomial(K k, std::size_t e) {
    UPoly p;
    if (is_zero(k)) return p;
    p.c.assign(e + 1, k - k);
    p.c[e] = std::move(k);
    return p;
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  long deg() const { return (long)c.size() - 1; }
  const K& lead() const {
    assert(!c.empty());
    return c.back();
  }
  K at(std::size_t i) const { return i < c.size() ? c[i] : K(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
      else if (i < a.c.size()) r.c[i] = a.c[i];
      else r.c[i] = b.c[i];
    }
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.c[0] - a.c[0]);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend UPoly operator*(const K& k, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c) x = k * x;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a.c == b.c); }

  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  // Requires an invertible leading coefficient of b.
  static std::pair<UPoly, UPoly> divrem(UPoly a, const UPoly& b) {
    assert(!b.zero());
    UPoly q;
    K li = kinv(b.lead());
    if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, li - li);
    while (!a.zero() && a.deg() >= b.deg()) {
      K f = a.lead() * li;
      long sh = a.deg() - b.deg();
      q.c[sh] = f;
      for (std::size_t i = 0; i < b.c.size(); ++i) a.c[sh + i] -= f * b.c[i];
      a.trim();
    }
    q.trim();
    return {q, a};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divrem(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }

  UPoly monic() const {
    if (zero()) return *this;
    return kinv(lead()) * *this;
  }

  UPoly derivative() const {
    UPoly r;
    if (c.size() < 2) return r;
    r.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = kfrom_int(c[i], (long)i) * c[i];
    r.trim();
    return r;
  }

  K eval(const K& x) const {
    K r{};
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  // Horner evaluation in any commutative ring A, embedding coefficients via f.
  template <class A, class F>
  A eval_map(const A& x, F&& embed) const {
    A r = x - x;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + embed(c[i]);
    return r;
  }

  UPoly compose(const UPoly& inner) const {
    UPoly r;
    for (std::size_t i = c.size(); i-- > 0;) r = r * inner + UPoly(c[i]);
    return r;
  }

  // Taylor shift x -> x + p.
  UPoly shift(const K& p) const {
    if (zero()) return *this;
    UPoly lin;
    lin.c = {p, kfrom_int(c[0], 1)};
    return compose(lin);
  }

  UPoly reverse(std::size_t n) const {
    // coefficient reversal against degree n (n >= deg)
    assert((long)n >= deg());
    UPoly r;
    r.c.assign(n + 1, K());
    for (std::size_t i = 0; i < c.size(); ++i) r.c[n - i] = c[i];
    r.trim();
    return r;
  }
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.zero()) {
    auto r = UPoly<K>::divrem(a, b.monic()).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// g = gcd(a, b) = s*a + t*b over a field K (all monic-normalized g).
template <class K>
void upoly_ext_gcd(UPoly<K> a, UPoly<K> b, UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
  if (a.zero() && b.zero()) {
    g = s = t = UPoly<K>();
    return;
  }
  K like = a.zero() ? b.c[0] : a.c[0];
  UPoly<K> s0(kfrom_int(like, 1)), s1, t0, t1(s0);
  while (!b.zero()) {
    auto [q, r] = UPoly<K>::divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!a.zero()) {
    K li = kinv(a.lead());
    g = li * a;
    s = li * s0;
    t = li * t0;
  } else {
    g = a; s = s0; t = t0;
  }
}

// ---- Rat-specific helpers ----

inline UPoly<Rat> from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long x : cs) v.emplace_back(x);
  return UPoly<Rat>(std::move(v));
}

// Integer-primitive form: coprime integer coefficients, positive leading one.
inline UPoly<Rat> primitive_int(const UPoly<Rat>& p) {
  if (p.zero()) return p;
  Int den = 1;
  for (const auto& c : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denom(c).get_mpz_t());
  Int g = 0;
  for (const auto& c : p.c) {
    Int n = numer(c) * (den / denom(c));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) g = 1;
  Rat scale(den, g);
  scale.canonicalize();
  UPoly<Rat> r = scale * p;
  if (sgn(r.lead()) < 0) r = Rat(-1) * r;
  return r;
}

template <class K>
UPoly<K> upoly_pow(const UPoly<K>& a, unsigned long e) {
  UPoly<K> r(kfrom_int(a.zero() ? K() : a.c[0], 1));
  UPoly<K> b = a;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace hyp

#endif
