#ifndef HYP_NUMFIELD_HPP
#define HYP_NUMFIELD_HPP

#include <memory>

#include "hyp/factor.hpp"
#include "hyp/upoly.hpp"

namespace hyp {

// Number field Q[t]/(m) for an irreducible monic m over Q.
struct NFCtx {
  UPoly<Rat> m;
  explicit NFCtx(UPoly<Rat> minpoly) : m(std::move(minpoly)) {
    assert(m.deg() >= 1);
  }
  long degree() const { return m.deg(); }
};

struct NFElem {
  std::shared_ptr<const NFCtx> ctx;  // null = unattached zero
  UPoly<Rat> r;                      // representative, deg < deg(m)

  NFElem() = default;
  NFElem(std::shared_ptr<const NFCtx> c, UPoly<Rat> rep) : ctx(std::move(c)), r(std::move(rep)) {
    if (ctx && r.deg() >= ctx->m.deg()) r = r % ctx->m;
  }
  static NFElem from_rat(const std::shared_ptr<const NFCtx>& c, const Rat& a) {
    return NFElem(c, UPoly<Rat>(a));
  }
  static NFElem gen(const std::shared_ptr<const NFCtx>& c) {
    return NFElem(c, UPoly<Rat>::x(Rat(0)));
  }

  const std::shared_ptr<const NFCtx>& context(const NFElem& o) const { return ctx ? ctx : o.ctx; }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    return NFElem(a.context(b), a.r + b.r);
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    return NFElem(a.context(b), a.r - b.r);
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    return NFElem(a.context(b), a.r * b.r);
  }
  NFElem operator-() const { return NFElem(ctx, -r); }
  NFElem inv() const {
    assert(ctx && !r.zero());
    UPoly<Rat> g, s, t;
    upoly_ext_gcd(r, ctx->m, g, s, t);
    assert(g.deg() == 0);
    return NFElem(ctx, kinv(g.c[0]) * s);
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inv(); }
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.r == b.r; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a.r == b.r); }

  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
};

inline bool is_zero(const NFElem& a) { return a.r.zero(); }
inline bool is_one(const NFElem& a) { return a.r.deg() == 0 && !a.r.zero() && is_one(a.r.c[0]); }
inline NFElem kinv(const NFElem& a) { return a.inv(); }
inline NFElem kfrom_int(const NFElem& like, long n) {
  return NFElem(like.ctx, UPoly<Rat>(Rat(n)));
}

// Quadratic extension K(sqrt(D)) represented as a + b*sqrt(D). D is carried
// per element; a pure-scalar element (b = 0, unset D) adopts the other D.
template <class K>
struct QuadOver {
  K a{}, b{};
  K D{};
  bool has_d = false;

  QuadOver() = default;
  explicit QuadOver(K scalar) : a(std::move(scalar)) {}
  QuadOver(K aa, K bb, K d) : a(std::move(aa)), b(std::move(bb)), D(std::move(d)), has_d(true) {}

  static QuadOver sqrt_d(const K& d) { return QuadOver(d - d, kfrom_int(d, 1), d); }

  const K& disc(const QuadOver& o) const { return has_d ? D : o.D; }
  bool either_d(const QuadOver& o) const { return has_d || o.has_d; }

  friend QuadOver operator+(const QuadOver& x, const QuadOver& y) {
    if (!x.either_d(y)) return QuadOver(x.a + y.a);
    return QuadOver(x.a + y.a, x.b + y.b, x.disc(y));
  }
  friend QuadOver operator-(const QuadOver& x, const QuadOver& y) {
    if (!x.either_d(y)) return QuadOver(x.a - y.a);
    return QuadOver(x.a - y.a, x.b - y.b, x.disc(y));
  }
  friend QuadOver operator*(const QuadOver& x, const QuadOver& y) {
    if (!x.either_d(y)) return QuadOver(x.a * y.a);
    const K& d = x.disc(y);
    return QuadOver(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d);
  }
  QuadOver operator-() const {
    QuadOver r = *this;
    r.a = -r.a;
    r.b = -r.b;
    return r;
  }
  QuadOver conj() const {
    QuadOver r = *this;
    r.b = -r.b;
    return r;
  }
  K norm() const {
    K n = a * a;
    if (has_d) n = n - b * b * D;
    return n;
  }
  QuadOver inv() const {
    K n = norm();
    QuadOver r = conj();
    K ni = kinv(n);
    r.a = r.a * ni;
    r.b = r.b * ni;
    return r;
  }
  friend QuadOver operator/(const QuadOver& x, const QuadOver& y) { return x * y.inv(); }
  friend bool operator==(const QuadOver& x, const QuadOver& y) {
    return is_zero(x.a - y.a) && is_zero(x.b - y.b);
  }
  friend bool operator!=(const QuadOver& x, const QuadOver& y) { return !(x == y); }

  QuadOver& operator+=(const QuadOver& o) { return *this = *this + o; }
  QuadOver& operator-=(const QuadOver& o) { return *this = *this - o; }
  QuadOver& operator*=(const QuadOver& o) { return *this = *this * o; }
};

template <class K>
bool is_zero(const QuadOver<K>& x) {
  return is_zero(x.a) && is_zero(x.b);
}
template <class K>
bool is_one(const QuadOver<K>& x) {
  return is_one(x.a) && is_zero(x.b);
}
template <class K>
QuadOver<K> kinv(const QuadOver<K>& x) {
  return x.inv();
}
template <class K>
QuadOver<K> kfrom_int(const QuadOver<K>& like, long n) {
  QuadOver<K> r(kfrom_int(like.a, n));
  if (like.has_d) {
    r.D = like.D;
    r.has_d = true;
    r.b = like.a - like.a;
  }
  return r;
}

}  // namespace hyp

#endif
