#ifndef HYP_INTBASIS_HPP
#define HYP_INTBASIS_HPP

#include "hyp/quotient.hpp"

namespace hyp {

// basis element b0 + b1*Dx of Q(x)[Dx] / Q(x)[Dx]L
struct IBElem {
  RatFunQ b0, b1;
};

struct IntegralBasis {
  std::array<IBElem, 2> elems;
  bool normalized = false;
};

namespace detail {

// t^e * u with rational exponent class e and truncated unit series
template <class K>
struct Laur {
  Rat e;
  Series<K> u;
};

// add within one exponent class (e's differ by an integer); tail overflow of
// the higher part is truncated
template <class K>
Laur<K> laur_add(const Laur<K>& a, const Laur<K>& b) {
  Rat d = b.e - a.e;
  assert(is_integer(d));
  long sh = (long)floor_int(d).get_si();
  if (sh < 0) return laur_add(b, a);
  Laur<K> r = a;
  for (long i = 0; i + sh < (long)r.u.c.size() && i < (long)b.u.c.size(); ++i)
    r.u.c[i + sh] += b.u.c[i];
  return r;
}

template <class K>
Laur<K> laur_mul(const Laur<K>& a, const Laur<K>& b) {
  return Laur<K>{a.e + b.e, a.u * b.u};
}

template <class K, class ER>
Laur<K> laur_dt(const Laur<K>& a, ER&& er) {
  Laur<K> r;
  r.e = a.e - 1;
  r.u = a.u;
  for (long i = 0; i < (long)r.u.c.size(); ++i) r.u.c[i] = er(a.e + Rat(i)) * a.u.c[i];
  return r;
}

template <class K>
std::optional<Rat> laur_val(const Laur<K>& a) {
  for (long i = 0; i < (long)a.u.c.size(); ++i)
    if (!is_zero(a.u.c[i])) return a.e + Rat(i);
  return std::nullopt;
}

// Laurent expansion val + series of num/den, both already local at t = 0
template <class K>
Laur<K> poly_laurent(const UPoly<K>& num, const UPoly<K>& den, long prec, const K& z) {
  assert(!den.zero());
  if (num.zero()) return Laur<K>{Rat(0), Series<K>(prec, z)};
  long v1 = 0, v2 = 0;
  while (is_zero(num.at(v1))) ++v1;
  while (is_zero(den.at(v2))) ++v2;
  Series<K> n(prec, z), d(prec, z);
  for (long i = 0; i < prec; ++i) {
    if (v1 + i <= num.deg()) n.c[i] = num.c[v1 + i];
    if (v2 + i <= den.deg()) d.c[i] = den.c[v2 + i];
  }
  return Laur<K>{Rat(v1 - v2), n * d.inverse()};
}

// Local solution basis at t = 0 over a coefficient field K with rational
// exponents. Non-log: y1 = t^e1 u1, y2 = t^e2 u2. Log: y2 = t^e2 u2 and
// y_log = cmul * y2 * log t + t^e1 * u1.
template <class K>
struct LocalSols {
  bool log_case = false;
  Rat e1, e2;  // e1 <= e2
  Series<K> u1, u2;
  K cmul;
};

template <class K, class ER, class TR>
LocalSols<K> local_solutions(const std::vector<UPoly<K>>& p, const K& like, long prec, ER&& er,
                             TR&& tr) {
  auto d = local_data_at_zero(p, like);
  const auto& ind = d.indicial();
  if (ind.deg() != 2) throw Unsupported("irregular singular point");
  K ai = kinv(ind.c[2]);
  auto ob = tr(ind.c[1] * ai), oc = tr(ind.c[0] * ai);
  if (!ob || !oc) throw Unsupported("non-rational local exponents");
  Rat disc = *ob * *ob - Rat(4) * *oc;
  auto sq = rat_sqrt(disc);
  if (!sq) throw Unsupported("non-rational local exponents");
  LocalSols<K> out;
  out.e1 = (-*ob - *sq) / 2;
  out.e2 = (-*ob + *sq) / 2;
  K zero = like - like, one = kfrom_int(like, 1);
  out.cmul = zero;

  auto pack = [&](const std::vector<K>& c) {
    Series<K> s(prec, zero);
    for (long i = 0; i < prec && i < (long)c.size(); ++i) s.c[i] = c[i];
    return s;
  };
  auto run = [&](const Rat& e) {
    auto c = frobenius_series(d, er(e), prec - 1);
    assert(c);
    return pack(*c);
  };
  out.u2 = run(out.e2);
  Rat delta = out.e2 - out.e1;
  if (!is_integer(delta)) {
    out.u1 = run(out.e1);
    return out;
  }
  long dl = (long)floor_int(delta).get_si();
  K e1k = er(out.e1);
  if (!log_occurs(d, e1k, dl)) {
    // apparent case: the free coefficient at the obstruction is set to zero
    std::vector<K> c = {one};
    for (long n = 1; n < prec; ++n) {
      K s = zero;
      for (long j = 1; j <= std::min<long>(n, d.jmax()); ++j)
        s += d.eval(j, e1k + kfrom_int(like, n - j)) * c[n - j];
      K p0 = d.eval(0, e1k + kfrom_int(like, n));
      if (is_zero(p0)) {
        assert(n == dl && is_zero(s));
        c.push_back(zero);
      } else {
        c.push_back(-(kinv(p0) * s));
      }
    }
    out.u1 = pack(c);
    return out;
  }

  // log case: L(cmul * y2 * log t) contributes the source series
  // T0 = t*p1*U2 - p2*U2 + 2*p2*(e2*U2 + t*U2') at exponent base e2 - 2
  out.log_case = true;
  long tp = prec + std::max<long>(0, d.nu) + 4;
  Series<K> U(tp, zero);
  for (long i = 0; i < std::min(prec, tp); ++i) U.c[i] = out.u2.at(i);
  auto embed_poly = [&](const UPoly<K>& q) {
    Series<K> s(tp, zero);
    for (long i = 0; i <= q.deg() && i < tp; ++i) s.c[i] = q.c[i];
    return s;
  };
  Series<K> p1 = embed_poly(p.size() > 1 ? p[1] : UPoly<K>());
  Series<K> p2 = embed_poly(p.size() > 2 ? p[2] : UPoly<K>());
  Series<K> t(tp, zero);
  if (tp > 1) t.c[1] = one;
  Series<K> t0 =
      t * p1 * U - p2 * U + kfrom_int(like, 2) * (p2 * (er(out.e2) * U + t * U.derivative()));
  auto t0_at = [&](long m) { return (m >= 0 && m < tp) ? t0.at(m) : zero; };

  bool have_c = (dl == 0);
  if (have_c) out.cmul = one;
  std::vector<K> g = {dl == 0 ? zero : one};
  for (long n = 1; n < prec; ++n) {
    K s = zero;
    for (long j = 1; j <= std::min<long>(n, d.jmax()); ++j)
      s += d.eval(j, e1k + kfrom_int(like, n - j)) * g[n - j];
    if (have_c) s += out.cmul * t0_at(d.nu + n + 2 - dl);
    K p0 = d.eval(0, e1k + kfrom_int(like, n));
    if (n == dl) {
      assert(is_zero(p0));
      K t02 = t0_at(d.nu + 2);
      assert(!is_zero(t02));
      out.cmul = -(s * kinv(t02));
      have_c = true;
      g.push_back(zero);
    } else {
      assert(!is_zero(p0));
      g.push_back(-(kinv(p0) * s));
    }
  }
  out.u1 = pack(g);
  return out;
}

// components of B(y) for each local solution: per solution either one series
// (non-log) or the pair [log part, pure part]. dlog is the image of log t
// under the derivation in use (1/t at finite places, -t at infinity).
template <class K, class D>
std::vector<std::vector<Laur<K>>> elem_components(const Laur<K>& b0, const Laur<K>& b1,
                                                  const LocalSols<K>& ls, const Laur<K>& dlog,
                                                  D&& dt) {
  auto app = [&](const Laur<K>& y) { return laur_add(laur_mul(b0, y), laur_mul(b1, dt(y))); };
  Laur<K> y2{ls.e2, ls.u2};
  std::vector<std::vector<Laur<K>>> out;
  out.push_back({app(y2)});
  if (!ls.log_case) {
    out.push_back({app(Laur<K>{ls.e1, ls.u1})});
  } else {
    Laur<K> ylog{ls.e2, ls.cmul * ls.u2};
    Laur<K> pure = laur_add(app(Laur<K>{ls.e1, ls.u1}), laur_mul(b1, laur_mul(ylog, dlog)));
    out.push_back({app(ylog), pure});
  }
  return out;
}

template <class K>
std::optional<Rat> components_min_val(const std::vector<std::vector<Laur<K>>>& comps) {
  std::optional<Rat> mv;
  for (const auto& sol : comps)
    for (const auto& c : sol) {
      auto v = laur_val(c);
      if (v && (!mv || *v < *mv)) mv = v;
    }
  return mv;
}

inline long factor_multiplicity(const UPoly<Rat>& p, const UPoly<Rat>& m) {
  if (p.zero()) return 0;
  long k = 0;
  UPoly<Rat> cur = p;
  while (true) {
    auto [q, r] = UPoly<Rat>::divrem(cur, m);
    if (!r.zero()) return k;
    cur = q;
    ++k;
  }
}

struct FinitePlace {
  std::shared_ptr<const NFCtx> ctx;
  std::vector<UPoly<NFElem>> pc;
  NFElem like;

  FinitePlace(const DiffOpQ& l, const UPoly<Rat>& mp)
      : ctx(std::make_shared<const NFCtx>(mp.monic())),
        pc(coeffs_at_algebraic(l, ctx)),
        like(NFElem::from_rat(ctx, Rat(0))) {}

  NFElem er(const Rat& a) const { return NFElem::from_rat(ctx, a); }

  UPoly<NFElem> shifted(const UPoly<Rat>& q) const {
    std::vector<NFElem> c;
    for (long i = 0; i <= q.deg(); ++i) c.push_back(er(q.c[i]));
    return UPoly<NFElem>(std::move(c)).shift(NFElem::gen(ctx));
  }

  Laur<NFElem> expand(const RatFunQ& f, long prec) const {
    return poly_laurent(shifted(f.num), shifted(f.den), prec, like);
  }

  std::vector<std::vector<Laur<NFElem>>> apply(const IBElem& b, const LocalSols<NFElem>& ls,
                                               long prec) const {
    Laur<NFElem> b0 = expand(b.b0, prec), b1 = expand(b.b1, prec);
    Laur<NFElem> dlog{Rat(-1), Series<NFElem>(prec, like - like)};
    dlog.u.c[0] = kfrom_int(like, 1);
    auto er2 = [this](const Rat& a) { return er(a); };
    return elem_components(b0, b1, ls, dlog, [&](const Laur<NFElem>& y) { return laur_dt(y, er2); });
  }

  long prec_for(const std::array<IBElem, 2>& basis, const LocalSols<NFElem>& probe) const {
    long pole = 0;
    for (const auto& b : basis)
      for (const auto& f : {b.b0, b.b1})
        pole = std::max(pole, factor_multiplicity(f.den, ctx->m));
    long span = (long)floor_int(rat_abs(probe.e1)).get_si() +
                (long)floor_int(probe.e2 - probe.e1).get_si();
    return pole + span + 10;
  }

  LocalSols<NFElem> solutions(long prec) const {
    auto tr = [](const NFElem& k) -> std::optional<Rat> {
      if (k.r.deg() > 0) return std::nullopt;
      return k.r.zero() ? Rat(0) : k.r.c[0];
    };
    return local_solutions(pc, like, prec, [this](const Rat& a) { return er(a); }, tr);
  }
};

// condition rows c0*A0 + c1*A1 = 0 on all coefficients below the threshold
template <class K>
void collect_rows(Mat<K>& rows, const Laur<K>& a0, const Laur<K>& a1, const Rat& thresh,
                  const K& zero) {
  Rat base = a0.e < a1.e ? a0.e : a1.e;
  long s0 = (long)floor_int(a0.e - base).get_si();
  long s1 = (long)floor_int(a1.e - base).get_si();
  long n = (long)std::min(a0.u.c.size(), a1.u.c.size());
  for (long k = 0; base + Rat(k) < thresh && k < n; ++k) {
    K x0 = (k - s0 >= 0 && k - s0 < n) ? a0.u.c[k - s0] : zero;
    K x1 = (k - s1 >= 0 && k - s1 < n) ? a1.u.c[k - s1] : zero;
    if (is_zero(x0) && is_zero(x1)) continue;
    rows.push_back({x0, x1});
  }
}

}  // namespace detail

// minimum Re(valuation) of B over both formal solutions at the place given
// by an irreducible mp (nullopt when B(y) vanishes to working precision)
inline std::optional<Rat> min_valuation_at(const DiffOpQ& l, const IBElem& b,
                                           const UPoly<Rat>& mp) {
  detail::FinitePlace pl(l, mp);
  auto probe = pl.solutions(4);
  long prec = pl.prec_for({b, b}, probe);
  auto sols = pl.solutions(prec);
  return detail::components_min_val(pl.apply(b, sols, prec));
}

namespace detail {

inline void local_pass(std::array<IBElem, 2>& basis, const DiffOpQ& l, const UPoly<Rat>& mp) {
  FinitePlace pl(l, mp);
  auto probe = pl.solutions(4);
  RatFunQ mpr(pl.ctx->m);
  NFElem zero = pl.like - pl.like;

  // scale down to integrality first
  for (auto& b : basis) {
    long prec = pl.prec_for(basis, probe);
    auto mv = components_min_val(pl.apply(b, pl.solutions(prec), prec));
    if (mv && *mv < 0) {
      Rat need = -*mv;
      long k = (long)floor_int(need).get_si() + (is_integer(need) ? 0 : 1);
      for (long i = 0; i < k; ++i) {
        b.b0 = b.b0 * mpr;
        b.b1 = b.b1 * mpr;
      }
    }
  }

  for (int iter = 0; iter < 200; ++iter) {
    long prec = pl.prec_for(basis, probe);
    auto sols = pl.solutions(prec);
    auto c0 = pl.apply(basis[0], sols, prec);
    auto c1 = pl.apply(basis[1], sols, prec);
    Mat<NFElem> rows;
    for (std::size_t j = 0; j < c0.size(); ++j)
      for (std::size_t t = 0; t < c0[j].size(); ++t)
        collect_rows(rows, c0[j][t], c1[j][t], Rat(1), zero);
    std::vector<Vec<NFElem>> ker;
    if (rows.empty()) {
      ker.push_back({kfrom_int(pl.like, 1), zero});
    } else {
      ker = nullspace(rows);
    }
    if (ker.empty()) return;
    const auto& v = ker[0];
    int k = is_zero(v[1]) ? 0 : 1;
    RatFunQ q0(v[0].r), q1(v[1].r);
    IBElem ne{(q0 * basis[0].b0 + q1 * basis[1].b0) / mpr,
              (q0 * basis[0].b1 + q1 * basis[1].b1) / mpr};
    basis[k] = ne;
  }
  assert(false && "local integral basis did not stabilize");
}

}  // namespace detail

inline IntegralBasis global_integral_basis(const DiffOpQ& l) {
  if (l.order() != 2) throw Unsupported("operator order must be 2");
  IntegralBasis ib;
  ib.elems = {IBElem{RatFunQ(Rat(1)), RatFunQ()}, IBElem{RatFunQ(), RatFunQ(Rat(1))}};
  auto pc = poly_coeffs(l);
  for (const auto& fm : factor_rational(pc.back())) detail::local_pass(ib.elems, l, fm.poly);
  return ib;
}

namespace detail {

struct InfContext {
  std::vector<UPoly<Rat>> pc;

  explicit InfContext(const DiffOpQ& l) : pc(coeffs_at_infinity(l)) {}

  static Rat er(const Rat& a) { return a; }

  LocalSols<Rat> solutions(long prec) const {
    return local_solutions(pc, Rat(0), prec, er, [](const Rat& a) -> std::optional<Rat> { return a; });
  }

  long prec_for(const std::array<IBElem, 2>& basis, const LocalSols<Rat>& probe) const {
    long pole = 0;
    for (const auto& b : basis)
      for (const auto& f : {b.b0, b.b1})
        if (!f.zero()) pole = std::max(pole, -valuation_at_infinity(f));
    long span = (long)floor_int(rat_abs(probe.e1)).get_si() +
                (long)floor_int(probe.e2 - probe.e1).get_si();
    return pole + span + 10;
  }

  // components in t = 1/x: Dx acts as -t^2 d/dt, log t maps to -t
  std::vector<std::vector<Laur<Rat>>> apply(const IBElem& b, const LocalSols<Rat>& ls,
                                            long prec) const {
    RatFunQ xinv = RatFunQ(Rat(1)) / RatFunQ::x();
    RatFunQ f0 = ratfun_compose(b.b0, xinv);
    RatFunQ f1 = ratfun_compose(b.b1, xinv);
    Laur<Rat> b0 = poly_laurent(f0.num, f0.den, prec, Rat(0));
    Laur<Rat> b1 = poly_laurent(f1.num, f1.den, prec, Rat(0));
    Laur<Rat> dlog{Rat(1), Series<Rat>(prec, Rat(0))};
    dlog.u.c[0] = Rat(-1);
    auto dt = [](const Laur<Rat>& y) {
      Laur<Rat> r = laur_dt(y, er);
      r.e += 2;
      for (auto& x : r.u.c) x = -x;
      return r;
    };
    return elem_components(b0, b1, ls, dlog, dt);
  }
};

}  // namespace detail

// pole orders at infinity of B_i applied to the two formal solutions;
// nullopt marks an application that vanishes to working precision
struct PoleProfile {
  std::array<std::array<std::optional<Rat>, 2>, 2> order;
};

inline PoleProfile pole_profile_at_infinity(const DiffOpQ& l, const IntegralBasis& ib) {
  detail::InfContext ic(l);
  auto probe = ic.solutions(4);
  long prec = ic.prec_for(ib.elems, probe);
  auto sols = ic.solutions(prec);
  PoleProfile pp;
  for (int i = 0; i < 2; ++i) {
    auto comps = ic.apply(ib.elems[i], sols, prec);
    for (int j = 0; j < 2; ++j) {
      auto v = detail::components_min_val(std::vector<std::vector<detail::Laur<Rat>>>{comps[j]});
      if (v) pp.order[i][j] = -*v;
    }
  }
  return pp;
}

// pole_totals, when given, records the summed pole orders at infinity after
// the initial profile and after every accepted improvement step
inline IntegralBasis normalize_at_infinity(const DiffOpQ& l, IntegralBasis ib,
                                           std::vector<Rat>* pole_totals = nullptr) {
  detail::InfContext ic(l);
  auto probe = ic.solutions(4);

  auto profile_of = [&](const std::array<IBElem, 2>& elems) {
    long prec = ic.prec_for(elems, probe);
    auto sols = ic.solutions(prec);
    PoleProfile pp;
    std::array<std::array<std::optional<Rat>, 2>, 2> lead{};
    for (int i = 0; i < 2; ++i) {
      auto comps = ic.apply(elems[i], sols, prec);
      for (int j = 0; j < 2; ++j) {
        std::optional<Rat> best;
        Rat bc(0);
        for (const auto& c : comps[j]) {
          auto v = detail::laur_val(c);
          if (!v) continue;
          if (!best || *v < *best) {
            best = v;
            bc = c.u.c[(std::size_t)floor_int(*v - c.e).get_si()];
          }
        }
        if (best) {
          pp.order[i][j] = -*best;
          lead[i][j] = bc;
        }
      }
    }
    return std::make_pair(pp, lead);
  };

  auto leq = [](const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
  };

  auto total_of = [](const PoleProfile& pp) {
    Rat t(0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (pp.order[i][j]) t += *pp.order[i][j];
    return t;
  };

  for (int iter = 0; iter < 500; ++iter) {
    auto [pp, lead] = profile_of(ib.elems);
    if (pole_totals && pole_totals->empty()) pole_totals->push_back(total_of(pp));
    // maximal pole order and its location
    int mi = -1, mj = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (pp.order[i][j] && (mi < 0 || *pp.order[mi][mj] < *pp.order[i][j])) mi = i, mj = j;
    if (mi < 0) break;
    int k = 1 - mi;
    if (!pp.order[k][mj] || !lead[k][mj]) break;
    Rat m = *pp.order[mi][mj], n = *pp.order[k][mj];
    Rat diff = m - n;
    if (!is_integer(diff) || sgn(diff) < 0) break;
    Rat c = *lead[mi][mj] / *lead[k][mj];
    RatFunQ shift = RatFunQ(c) * RatFunQ(UPoly<Rat>::monomial(Rat(1), (std::size_t)floor_int(diff).get_si()));
    std::array<IBElem, 2> cand = ib.elems;
    cand[mi].b0 = cand[mi].b0 - shift * cand[k].b0;
    cand[mi].b1 = cand[mi].b1 - shift * cand[k].b1;
    auto [np, nl] = profile_of(cand);
    (void)nl;
    bool increase = false, decrease = false;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (!leq(np.order[i][j], pp.order[i][j])) increase = true;
        if (!leq(pp.order[i][j], np.order[i][j])) decrease = true;
      }
    if (increase || !decrease) break;
    ib.elems = cand;
    if (pole_totals) pole_totals->push_back(total_of(np));
  }
  ib.normalized = true;
  return ib;
}

// gauge transformations drawn from the normalized integral basis; solves the
// transformed operator and maps its solutions back through the inverse gauge
inline std::vector<HypSolution> gauge_2f1(const DiffOpQ& l, const SolveConfig& cfg) {
  IntegralBasis ib = normalize_at_infinity(l, global_integral_basis(l));
  // smaller elements first, by maximal pole order at infinity
  PoleProfile pp = pole_profile_at_infinity(l, ib);
  auto maxpole = [&](int i) {
    Rat m(-1000000);
    for (int j = 0; j < 2; ++j)
      if (pp.order[i][j] && *pp.order[i][j] > m) m = *pp.order[i][j];
    return m;
  };
  std::array<int, 2> order = {0, 1};
  if (maxpole(1) < maxpole(0)) order = {1, 0};
  for (int idx : order) {
    const auto& el = ib.elems[idx];
    GaugeOp g{el.b0, el.b1};
    if (g.as_op().zero() || g.is_identity()) continue;
    if (el.b1.zero() && el.b0.is_poly() && el.b0.num.deg() == 0) continue;  // scalar gauge
    DiffOpQ lt = gauge_transform(l, g);
    if (lt.order() != 2) continue;
    std::vector<HypSolution> sols;
    try {
      sols = find_2f1(lt, cfg);
    } catch (const Unsupported&) {
      continue;
    }
    if (sols.empty()) continue;
    auto h = inverse_gauge(l, g);
    if (!h) continue;
    for (auto& s : sols) {
      s.gauge = *h;
      s.transformed = lt;
    }
    return sols;
  }
  return {};
}

// Algorithm 5: direct search first, then gauge transformations; an empty
// result is a failure report, not a proof that no solution exists.
inline std::vector<HypSolution> hypergeometricsols(const DiffOpQ& l, const SolveConfig& cfg) {
  auto direct = find_2f1(l, cfg);
  if (!direct.empty()) return direct;
  return gauge_2f1(l, cfg);
}

}  // namespace hyp

#endif
