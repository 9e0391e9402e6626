#ifndef HYP_RECONSTRUCT_HPP
#define HYP_RECONSTRUCT_HPP

#include <optional>

#include "hyp/ratfun.hpp"

namespace hyp {

// Rational function reconstruction: from a series h known mod x^prec, find
// num/den with deg(num) <= nbound, deg(den) <= dbound, den(0) invertible and
// num = den*h mod x^prec. Needs nbound + dbound + 1 <= prec for uniqueness.
// Half-extended Euclid on (x^prec, h), stopping at the first remainder of
// degree <= nbound.
template <class K>
std::optional<RatFun<K>> ratfun_reconstruct(const UPoly<K>& h, long prec, long nbound,
                                            long dbound) {
  assert(nbound >= 0 && dbound >= 0 && nbound + dbound + 1 <= prec);
  if (h.zero()) return RatFun<K>();
  K one = kfrom_int(h.c[0], 1);
  UPoly<K> r0 = UPoly<K>::monomial(one, prec), r1 = h;
  UPoly<K> t0, t1(one);
  while (!r1.zero() && r1.deg() > nbound) {
    auto [q, r2] = UPoly<K>::divrem(r0, r1);
    UPoly<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.zero() || t1.deg() > dbound) return std::nullopt;
  if (is_zero(t1.at(0))) return std::nullopt;
  UPoly<K> g = upoly_gcd(r1, t1);
  if (g.deg() > 0) return std::nullopt;
  RatFun<K> f(r1, t1);
  // verify: den*h = num mod x^prec
  UPoly<K> check = f.den * h - f.num;
  for (long i = 0; i < prec && i <= check.deg(); ++i)
    if (!is_zero(check.c[i])) return std::nullopt;
  return f;
}

// Series expansion of a rational function at 0 to x^prec (den(0) invertible).
template <class K>
UPoly<K> taylor_at_zero(const RatFun<K>& f, long prec) {
  assert(!f.den.zero() && !is_zero(f.den.at(0)));
  K d0i = kinv(f.den.at(0));
  std::vector<K> out((std::size_t)prec, d0i - d0i);
  for (long n = 0; n < prec; ++n) {
    K s = f.num.at(n);
    for (long j = 1; j <= n && j <= f.den.deg(); ++j) s = s - f.den.at(j) * out[n - j];
    out[n] = d0i * s;
  }
  UPoly<K> p;
  p.c = std::move(out);
  p.trim();
  return p;
}

}  // namespace hyp

#endif
