#ifndef HYP_QUADFUN_HPP
#define HYP_QUADFUN_HPP

#include "hyp/ratfun.hpp"

namespace hyp {

// Element a + b*z of the quadratic extension Q(x)[z]/(z^2 - d), with the
// derivation extended by z' = d'*z/(2d). A default-constructed element is a
// d-less zero that adopts the extension of the other operand.
struct QuadFun {
  RatFunQ a, b, d;
  bool has_d = false;

  QuadFun() = default;
  QuadFun(RatFunQ ra, RatFunQ rb, RatFunQ rd)
      : a(std::move(ra)), b(std::move(rb)), d(std::move(rd)), has_d(true) {}
  static QuadFun from_ratfun(const RatFunQ& f, const RatFunQ& rd) {
    return QuadFun(f, RatFunQ(), rd);
  }

  bool zero() const { return a.zero() && b.zero(); }
  const RatFunQ& ext(const QuadFun& o) const { return has_d ? d : o.d; }
  bool attached(const QuadFun& o) const { return has_d || o.has_d; }

  friend QuadFun operator+(const QuadFun& x, const QuadFun& y) {
    if (!x.attached(y)) return QuadFun();
    return QuadFun(x.a + y.a, x.b + y.b, x.ext(y));
  }
  friend QuadFun operator-(const QuadFun& x, const QuadFun& y) {
    if (!x.attached(y)) return QuadFun();
    return QuadFun(x.a - y.a, x.b - y.b, x.ext(y));
  }
  QuadFun operator-() const { return has_d ? QuadFun(-a, -b, d) : QuadFun(); }
  friend QuadFun operator*(const QuadFun& x, const QuadFun& y) {
    if (!x.attached(y)) return QuadFun();
    const RatFunQ& dd = x.ext(y);
    return QuadFun(x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd);
  }
  QuadFun conj() const { return has_d ? QuadFun(a, -b, d) : QuadFun(); }
  QuadFun inv() const {
    assert(has_d);
    RatFunQ n = a * a - b * b * d;
    assert(!n.zero());
    RatFunQ ni = kinv(n);
    return QuadFun(a * ni, -(b * ni), d);
  }
  friend QuadFun operator/(const QuadFun& x, const QuadFun& y) { return x * y.inv(); }
  QuadFun derivative() const {
    if (!has_d) return QuadFun();
    // (a + b z)' = a' + (b' + b d'/(2d)) z
    RatFunQ corr = b * d.derivative() * kinv(RatFunQ(Rat(2)) * d);
    return QuadFun(a.derivative(), b.derivative() + corr, d);
  }
  friend bool operator==(const QuadFun& x, const QuadFun& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadFun& x, const QuadFun& y) { return !(x == y); }

  QuadFun& operator+=(const QuadFun& o) { return *this = *this + o; }
  QuadFun& operator-=(const QuadFun& o) { return *this = *this - o; }
  QuadFun& operator*=(const QuadFun& o) { return *this = *this * o; }
};

inline bool is_zero(const QuadFun& x) { return x.zero(); }
inline bool is_one(const QuadFun& x) { return x.b.zero() && is_one(x.a); }
inline QuadFun kinv(const QuadFun& x) { return x.inv(); }
inline QuadFun kfrom_int(const QuadFun& like, long n) {
  assert(like.has_d);
  return QuadFun(RatFunQ(Rat(n)), RatFunQ(), like.d);
}

// Horner evaluation of a rational-coefficient polynomial at a QuadFun.
inline QuadFun quadfun_eval(const UPoly<Rat>& p, const QuadFun& x) {
  assert(x.has_d);
  QuadFun r(RatFunQ(), RatFunQ(), x.d);
  for (long i = p.deg(); i >= 0; --i) {
    r = r * x;
    r.a = r.a + RatFunQ(p.c[i]);
  }
  return r;
}

// evaluation of a rational function at a QuadFun
inline QuadFun quadfun_eval(const RatFun<Rat>& f, const QuadFun& x) {
  return quadfun_eval(f.num, x) / quadfun_eval(f.den, x);
}

}  // namespace hyp

#endif
