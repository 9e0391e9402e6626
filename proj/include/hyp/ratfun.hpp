#ifndef HYP_RATFUN_HPP
#define HYP_RATFUN_HPP

#include "hyp/upoly.hpp"

namespace hyp {

// Univariate rational function over a field K: num/den, gcd-reduced,
// monic denominator.
template <class K>
struct RatFun {
  UPoly<K> num, den;

  RatFun() : den(make_one()) {}
  explicit RatFun(UPoly<K> n) : num(std::move(n)), den(make_one_like(num)) {}
  RatFun(UPoly<K> n, UPoly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
  explicit RatFun(const K& k) : num(UPoly<K>(k)), den(make_one_like(num)) {}

  static UPoly<K> make_one() {
    UPoly<K> p;
    if constexpr (std::is_same_v<K, Rat>) p = UPoly<K>(K(1));
    return p;  // context-less rings fill it in reduce()
  }
  static UPoly<K> make_one_like(const UPoly<K>& ref) {
    if (!ref.zero()) return UPoly<K>(kfrom_int(ref.c[0], 1));
    return make_one();
  }

  static RatFun x() {
    static_assert(std::is_same_v<K, Rat>);
    return RatFun(UPoly<K>::x(K(0)));
  }

  void reduce() {
    assert(!den.zero());
    if (num.zero()) {
      den = make_one_like(den);
      return;
    }
    UPoly<K> g = upoly_gcd(num, den);
    if (g.deg() > 0) {
      num = num / g;
      den = den / g;
    }
    K li = kinv(den.lead());
    num = li * num;
    den = li * den;
  }

  bool zero() const { return num.zero(); }
  bool is_poly() const { return den.deg() == 0; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num * b.num, a.den * b.den);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    assert(!b.zero());
    return RatFun(a.num * b.den, a.den * b.num);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  RatFun derivative() const {
    return RatFun(num.derivative() * den - num * den.derivative(), den * den);
  }

  // Evaluate at an element of a commutative K-algebra. The denominator image
  // must be invertible (div is the algebra's division).
  template <class A, class F>
  A eval_map(const A& x, F&& embed) const {
    A n = num.eval_map(x, embed);
    A d = den.eval_map(x, embed);
    return n / d;
  }
};

using RatFunQ = RatFun<Rat>;

inline bool is_zero(const RatFunQ& a) { return a.zero(); }
inline bool is_one(const RatFunQ& a) {
  return a.den.deg() == 0 && a.num.deg() == 0 && !a.num.zero() && a.num.c[0] == a.den.c[0];
}
inline RatFunQ kinv(const RatFunQ& a) {
  assert(!a.zero());
  return RatFunQ(a.den, a.num);
}
inline RatFunQ kfrom_int(const RatFunQ&, long n) { return RatFunQ(Rat(n)); }

// Order of vanishing of a nonzero rational function at a rational point.
inline long valuation_at(const RatFunQ& f, const Rat& p) {
  assert(!f.zero());
  auto ord = [&](UPoly<Rat> g) {
    long v = 0;
    while (true) {
      if (is_zero(g.eval(p))) {
        UPoly<Rat> lin;
        lin.c = {-p, Rat(1)};
        g = g / lin;
        ++v;
      } else
        break;
    }
    return v;
  };
  return ord(f.num) - ord(f.den);
}

// Valuation at infinity: deg(den) - deg(num).
inline long valuation_at_infinity(const RatFunQ& f) {
  assert(!f.zero());
  return f.den.deg() - f.num.deg();
}

}  // namespace hyp

#endif
