#ifndef HYP_SERIES_HPP
#define HYP_SERIES_HPP

#include <cassert>
#include <vector>

#include "hyp/ratfun.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

// Truncated power series over a coefficient ring E: coefficients of
// x^0 .. x^(prec-1), stored at full length including zeros.
template <class E>
struct Series {
  std::vector<E> c;

  Series() = default;
  Series(long prec, const E& zero) : c((std::size_t)prec, zero) {}

  long prec() const { return (long)c.size(); }
  const E& at(long i) const {
    assert(i >= 0 && i < prec());
    return c[i];
  }
  E zero_coeff() const {
    assert(!c.empty());
    return c[0] - c[0];
  }
  bool is_zero_series() const {
    for (const auto& x : c)
      if (!is_zero(x)) return false;
    return true;
  }
  long valuation() const {
    for (long i = 0; i < prec(); ++i)
      if (!is_zero(c[i])) return i;
    return prec();
  }

  template <class F>
  static Series from_poly(const UPoly<Rat>& p, long prec, F&& embed, const E& zero) {
    Series s(prec, zero);
    for (long i = 0; i <= p.deg() && i < prec; ++i) s.c[i] = embed(p.c[i]);
    return s;
  }

  Series truncate(long n) const {
    assert(n <= prec());
    Series s = *this;
    s.c.resize((std::size_t)n);
    return s;
  }

  // multiply by x^k (k may be negative; low coefficients must vanish)
  Series shift(long k) const {
    Series s(prec(), zero_coeff());
    for (long i = 0; i < prec(); ++i) {
      long j = i + k;
      if (j < 0) {
        assert(is_zero(c[i]));
        continue;
      }
      if (j < prec()) s.c[j] = c[i];
    }
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    long n = std::min(a.prec(), b.prec());
    Series r(n, a.zero_coeff());
    for (long i = 0; i < n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    long n = std::min(a.prec(), b.prec());
    Series r(n, a.zero_coeff());
    for (long i = 0; i < n; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    long n = std::min(a.prec(), b.prec());
    Series r(n, a.zero_coeff());
    for (long i = 0; i < n; ++i) {
      if (is_zero(a.c[i])) continue;
      for (long j = 0; j + i < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  friend Series operator*(const E& k, const Series& a) {
    Series r = a;
    for (auto& x : r.c) x = k * x;
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c == b.c; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a.c == b.c); }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // reciprocal; requires invertible constant term
  Series inverse() const {
    E a0i = kinv(c[0]);
    Series r(prec(), zero_coeff());
    r.c[0] = a0i;
    for (long n = 1; n < prec(); ++n) {
      E s = zero_coeff();
      for (long k = 1; k <= n; ++k) s += c[k] * r.c[n - k];
      r.c[n] = -(a0i * s);
    }
    return r;
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series derivative() const {
    Series r(prec(), zero_coeff());
    for (long i = 1; i < prec(); ++i) r.c[i - 1] = kfrom_int(c[i], i) * c[i];
    return r;
  }

  // antiderivative with constant term 0; divides by 1..prec-1 and throws
  // BadPrime if one of them is not a unit
  Series integrate() const {
    Series r(prec(), zero_coeff());
    for (long i = 0; i + 1 < prec(); ++i) r.c[i + 1] = kinv(kfrom_int(c[i], i + 1)) * c[i];
    return r;
  }
};

// log(a) for a with constant term 1
template <class E>
Series<E> series_log(const Series<E>& a) {
  assert(is_one(a.c[0]));
  return (a.derivative() * a.inverse()).integrate();
}

// exp(a) for a with constant term 0, via n*y_n = sum k*a_k*y_{n-k}
template <class E>
Series<E> series_exp(const Series<E>& a) {
  assert(is_zero(a.c[0]));
  Series<E> r(a.prec(), a.zero_coeff());
  r.c[0] = kfrom_int(a.c[0], 1);
  for (long n = 1; n < a.prec(); ++n) {
    E s = a.zero_coeff();
    for (long k = 1; k <= n; ++k) s += kfrom_int(a.c[k], (long)k) * a.c[k] * r.c[n - k];
    r.c[n] = kinv(kfrom_int(s, n)) * s;
  }
  return r;
}

// a^e for a with constant term 1 and rational e
// embed an Int into E by binary expansion (kfrom_int only takes long)
template <class E>
E embed_int(const Int& v, const E& like) {
  bool neg = v < 0;
  Int t = neg ? Int(-v) : v;
  std::vector<int> bits;
  while (t > 0) {
    bits.push_back(mpz_odd_p(t.get_mpz_t()) ? 1 : 0);
    t >>= 1;
  }
  E acc = like - like;
  E one = kfrom_int(like, 1);
  for (std::size_t i = bits.size(); i-- > 0;) {
    acc = acc + acc;
    if (bits[i]) acc = acc + one;
  }
  return neg ? -acc : acc;
}

template <class E>
E embed_rat(const Rat& a, const E& like) {
  return embed_int(numer(a), like) * kinv(embed_int(denom(a), like));
}

template <class E>
Series<E> series_pow_rat(const Series<E>& a, const Rat& e, const E& like) {
  return series_exp(embed_rat(e, like) * series_log(a));
}

// composition a(b) for b with valuation >= 1
template <class E>
Series<E> series_compose(const Series<E>& a, const Series<E>& b) {
  assert(is_zero(b.c[0]));
  long n = std::min(a.prec(), b.prec());
  Series<E> r(n, a.zero_coeff());
  for (long i = n; i-- > 0;) {
    r = r * b;
    r.c[0] += a.c[i];
  }
  return r;
}

// functional inverse of u = x*(1 + ...): returns v with u(v(x)) = x.
// Lagrange inversion: v_k = (1/k) [x^(k-1)] (x/u)^k; divides by 1..prec-1.
template <class E>
Series<E> series_reversion(const Series<E>& u) {
  assert(is_zero(u.c[0]) && !is_zero(u.c[1]));
  long n = u.prec();
  Series<E> s = u.shift(-1).inverse();  // x/u
  Series<E> v(n, u.zero_coeff());
  Series<E> sk(n, u.zero_coeff());
  sk.c[0] = kfrom_int(u.c[1], 1);
  for (long k = 1; k < n; ++k) {
    sk = sk * s;
    v.c[k] = kinv(kfrom_int(u.c[1], k)) * sk.c[k - 1];
  }
  return v;
}

// series expansion at 0 of a rational function image; embed maps Rat
// coefficients into E and den(0) must be a unit
template <class E, class F>
Series<E> series_of_ratfun(const RatFun<Rat>& f, long prec, F&& embed, const E& zero) {
  Series<E> num = Series<E>::from_poly(f.num, prec, embed, zero);
  Series<E> den = Series<E>::from_poly(f.den, prec, embed, zero);
  return num * den.inverse();
}

}  // namespace hyp

#endif
