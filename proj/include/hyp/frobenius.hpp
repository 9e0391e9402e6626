#ifndef HYP_FROBENIUS_HPP
#define HYP_FROBENIUS_HPP

#include <optional>

#include "hyp/diffop.hpp"
#include "hyp/factor.hpp"
#include "hyp/numfield.hpp"
#include "hyp/series.hpp"

namespace hyp {

// Local data of an operator at x = 0, from polynomial coefficients p[i] of
// Dx^i. L(x^s) = sum_j x^(s+nu+j) P_j(s); P_0 is the indicial polynomial.
template <class K>
struct LocalData {
  long nu = 0;
  std::vector<UPoly<K>> pj;  // P_j as polynomials in s

  const UPoly<K>& indicial() const { return pj[0]; }
  long jmax() const { return (long)pj.size() - 1; }
  K eval(long j, const K& s) const {
    if (j < 0 || j > jmax()) {
      K z = s - s;
      return z;
    }
    return pj[j].eval(s);
  }
};

template <class K>
UPoly<K> falling_factorial_poly(long i, const K& like) {
  UPoly<K> r(kfrom_int(like, 1));
  UPoly<K> s = UPoly<K>::x(like);
  for (long k = 0; k < i; ++k) {
    UPoly<K> lin = s - UPoly<K>(kfrom_int(like, k));
    r = r * lin;
  }
  return r;
}

template <class K>
LocalData<K> local_data_at_zero(const std::vector<UPoly<K>>& p, const K& like) {
  long ord = (long)p.size() - 1;
  long nu = 0;
  bool first = true;
  for (long i = 0; i <= ord; ++i) {
    if (p[i].zero()) continue;
    long v = 0;
    while (is_zero(p[i].at(v))) ++v;
    long cand = v - i;
    if (first || cand < nu) nu = cand, first = false;
  }
  assert(!first);
  long top = 0;
  for (long i = 0; i <= ord; ++i)
    if (!p[i].zero()) top = std::max(top, p[i].deg() - i);
  LocalData<K> d;
  d.nu = nu;
  std::vector<UPoly<K>> fall;
  for (long i = 0; i <= ord; ++i) fall.push_back(falling_factorial_poly(i, like));
  for (long j = 0; j <= top - nu; ++j) {
    UPoly<K> pj;
    for (long i = 0; i <= ord; ++i) {
      long k = nu + i + j;
      if (k < 0) continue;
      K ck = p[i].at(k);
      if (!is_zero(ck)) pj += ck * fall[i];
    }
    d.pj.push_back(pj);
  }
  return d;
}

// polynomial coefficients of l shifted so that the point p sits at 0
inline std::vector<UPoly<Rat>> coeffs_at_point(const DiffOpQ& l, const Rat& p) {
  auto pc = poly_coeffs(l);
  if (!is_zero(p))
    for (auto& q : pc) q = q.shift(p);
  return pc;
}

// polynomial coefficients of the x -> 1/x transform of l
inline std::vector<UPoly<Rat>> coeffs_at_infinity(const DiffOpQ& l) {
  RatFunQ x = RatFunQ::x();
  return poly_coeffs(change_of_variables(l, RatFunQ(Rat(1)) / x));
}

// coefficients over Q[t]/(m) shifted by the root t of an irreducible m
inline std::vector<UPoly<NFElem>> coeffs_at_algebraic(const DiffOpQ& l,
                                                      const std::shared_ptr<const NFCtx>& ctx) {
  auto pc = poly_coeffs(l);
  NFElem t = NFElem::gen(ctx);
  std::vector<UPoly<NFElem>> out;
  for (const auto& q : pc) {
    std::vector<NFElem> c;
    for (long i = 0; i <= q.deg(); ++i) c.push_back(NFElem::from_rat(ctx, q.c[i]));
    UPoly<NFElem> qe(std::move(c));
    out.push_back(qe.shift(t));
  }
  return out;
}

// run the Frobenius recurrence for exponent e up to index n_max; returns the
// series coefficients, stopping early (nullopt) if P_0(e+n) vanishes for some
// 1 <= n <= n_max
template <class K>
std::optional<std::vector<K>> frobenius_series(const LocalData<K>& d, const K& e, long n_max) {
  K one = kfrom_int(e, 1);
  std::vector<K> c = {one};
  for (long n = 1; n <= n_max; ++n) {
    K s = e - e;
    for (long j = 1; j <= std::min<long>(n, d.jmax()); ++j)
      s += d.eval(j, e + kfrom_int(e, n - j)) * c[n - j];
    K p0 = d.eval(0, e + kfrom_int(e, n));
    if (is_zero(p0)) return std::nullopt;
    c.push_back(-(kinv(p0) * s));
  }
  return c;
}

// whether the second solution at an integer exponent difference delta >= 0
// carries a logarithm; e_low is the smaller exponent
template <class K>
bool log_occurs(const LocalData<K>& d, const K& e_low, long delta) {
  if (delta == 0) return true;
  // run the recurrence from e_low; obstruction at n = delta
  K one = kfrom_int(e_low, 1);
  std::vector<K> c = {one};
  for (long n = 1; n < delta; ++n) {
    K s = e_low - e_low;
    for (long j = 1; j <= std::min<long>(n, d.jmax()); ++j)
      s += d.eval(j, e_low + kfrom_int(e_low, n - j)) * c[n - j];
    K p0 = d.eval(0, e_low + kfrom_int(e_low, n));
    assert(!is_zero(p0));
    c.push_back(-(kinv(p0) * s));
  }
  K s = e_low - e_low;
  for (long j = 1; j <= std::min<long>(delta, d.jmax()); ++j)
    s += d.eval(j, e_low + kfrom_int(e_low, delta - j)) * c[delta - j];
  return !is_zero(s);
}

// exponent difference classification of one place
struct PlaceClass {
  bool rational_delta = true;
  Rat delta;        // |e2 - e1| when rational
  bool is_log = false;
  bool true_sing = true;  // delta not integer, or log present
  std::optional<Rat> e_low, e_high;  // exponents when both rational
};

inline PlaceClass classify_rational_place(const std::vector<UPoly<Rat>>& p) {
  auto d = local_data_at_zero(p, Rat(0));
  PlaceClass out;
  const UPoly<Rat>& ind = d.indicial();
  if (ind.deg() != 2) throw Unsupported("irregular singular point");
  // roots of ind: (-b +- sqrt(b^2-4ac)) / 2a
  Rat a = ind.c[2], b = ind.c[1], cc = ind.c[0];
  Rat disc = b * b - Rat(4) * a * cc;
  auto sq = rat_sqrt(disc);
  if (!sq) {
    out.rational_delta = false;
    return out;
  }
  Rat e1 = (-b - *sq) / (Rat(2) * a), e2 = (-b + *sq) / (Rat(2) * a);
  if (e1 > e2) std::swap(e1, e2);
  out.delta = e2 - e1;
  out.e_low = e1;
  out.e_high = e2;
  if (is_integer(out.delta)) {
    long delta = (long)floor_int(out.delta).get_si();
    out.is_log = log_occurs(d, e1, delta);
    out.true_sing = out.is_log;
  } else {
    out.true_sing = true;
  }
  return out;
}

inline PlaceClass classify_algebraic_place(const std::vector<UPoly<NFElem>>& p,
                                           const std::shared_ptr<const NFCtx>& ctx) {
  NFElem zero = NFElem::from_rat(ctx, Rat(0));
  auto d = local_data_at_zero(p, zero);
  PlaceClass out;
  const UPoly<NFElem>& ind = d.indicial();
  if (ind.deg() != 2) throw Unsupported("irregular singular point");
  NFElem a = ind.c[2], b = ind.c[1], cc = ind.c[0];
  NFElem disc = (b * b - kfrom_int(b, 4) * a * cc) * kinv(a * a);  // delta^2
  // delta must be rational for our candidates; disc must be a rational square
  if (disc.r.deg() > 0) {
    out.rational_delta = false;
    return out;
  }
  Rat dv = disc.r.zero() ? Rat(0) : disc.r.c[0];
  auto sq = rat_sqrt(dv);
  if (!sq) {
    out.rational_delta = false;
    return out;
  }
  out.delta = *sq;
  if (is_integer(out.delta)) {
    long delta = (long)floor_int(out.delta).get_si();
    // e_low = (-b/a - delta)/2
    NFElem e_low = (-(b * kinv(a)) - NFElem::from_rat(ctx, out.delta)) * kinv(kfrom_int(b, 2));
    out.is_log = log_occurs(d, e_low, delta);
    out.true_sing = out.is_log;
  }
  return out;
}

// full local solution pair at a rational point moved to 0, to precision prec.
// Supported cases: delta not an integer (two power-series solutions), or
// delta = 0 with a logarithm.
struct LocalPair {
  Rat e_low, e_high;
  bool log_case = false;
  Series<Rat> u_high;  // y_high = x^e_high * u_high, u_high(0) = 1
  Series<Rat> u_low;   // non-log: y_low = x^e_low * u_low, u_low(0) = 1
  Series<Rat> h;       // log: y_log / y_high = log x + h, h(0) = 0
};

inline LocalPair formal_solutions(const std::vector<UPoly<Rat>>& p, long prec) {
  auto d = local_data_at_zero(p, Rat(0));
  auto cls = classify_rational_place(p);
  if (!cls.rational_delta || !cls.e_low) throw Unsupported("irrational exponents");
  LocalPair out;
  out.e_low = *cls.e_low;
  out.e_high = *cls.e_high;
  Rat delta = cls.delta;

  auto run_series = [&](const Rat& e) {
    auto c = frobenius_series(d, e, prec - 1);
    assert(c);
    Series<Rat> s(prec, Rat(0));
    for (long i = 0; i < prec; ++i) s.c[i] = (*c)[i];
    return s;
  };
  out.u_high = run_series(out.e_high);

  if (!is_integer(delta)) {
    out.u_low = run_series(out.e_low);
    return out;
  }
  if (!is_zero(delta) || !cls.is_log)
    throw Unsupported("integer exponent difference at expansion point");

  // delta = 0 log case: y_log = y_high*log x + x^e*g with g(0) = 0;
  // equation E_n: sum_j P_j(e+n-j) g_{n-j} + T0[nu+n+2] = 0 where
  // x^(e-2)*T0 = (p1/x - p2/x^2)*y_high + (2*p2/x)*y_high'
  out.log_case = true;
  Rat e = out.e_high;
  const Series<Rat>& U = out.u_high;
  long tp = prec + std::max<long>(0, d.nu) + 4;
  Series<Rat> Ux(tp, Rat(0));
  for (long i = 0; i < std::min(prec, tp); ++i) Ux.c[i] = U.at(i);
  auto embed_poly = [&](const UPoly<Rat>& q) {
    Series<Rat> s(tp, Rat(0));
    for (long i = 0; i <= q.deg() && i < tp; ++i) s.c[i] = q.c[i];
    return s;
  };
  Series<Rat> p1 = embed_poly(p.size() > 1 ? p[1] : UPoly<Rat>());
  Series<Rat> p2 = embed_poly(p.size() > 2 ? p[2] : UPoly<Rat>());
  Series<Rat> x(tp, Rat(0));
  if (tp > 1) x.c[1] = Rat(1);
  Series<Rat> t0 = x * p1 * Ux - p2 * Ux + Rat(2) * (p2 * (e * Ux + x * Ux.derivative()));
  auto t0_at = [&](long m) { return (m >= 0 && m < tp) ? t0.at(m) : Rat(0); };

  std::vector<Rat> g = {Rat(0)};
  for (long n = 1; n < prec; ++n) {
    Rat s(0);
    for (long j = 1; j <= std::min<long>(n, d.jmax()); ++j) s += d.eval(j, e + Rat(n - j)) * g[n - j];
    s += t0_at(d.nu + n + 2);
    Rat p0 = d.eval(0, e + Rat(n));
    assert(!is_zero(p0));
    g.push_back(-s / p0);
  }
  Series<Rat> gs(prec, Rat(0));
  for (long i = 0; i < prec; ++i) gs.c[i] = g[i];
  out.h = gs * out.u_high.inverse();
  return out;
}

}  // namespace hyp

#endif
