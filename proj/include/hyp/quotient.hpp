#ifndef HYP_QUOTIENT_HPP
#define HYP_QUOTIENT_HPP

#include <functional>

#include "hyp/candidates.hpp"
#include "hyp/expfactor.hpp"
#include "hyp/fp.hpp"
#include "hyp/quadfun.hpp"
#include "hyp/reconstruct.hpp"
#include "hyp/series.hpp"

namespace hyp {

// counters filled in by find_2f1 when SolveConfig::stats is set
struct SolveStats {
  long candidates = 0;  // (candidate, arrangement) pairs tried
  long sweeps = 0;      // modular sweeps that ran to completion
  long lifts = 0;       // lift attempts started
  std::vector<unsigned long> primes_used;

  void note_prime(unsigned long ell) {
    for (unsigned long p : primes_used)
      if (p == ell) return;
    primes_used.push_back(ell);
  }
};

struct SolveConfig {
  unsigned long prime = 4099;
  unsigned long retry_prime = 7919;
  long a_fmax = 2;
  Rat precision_factor = Rat(1);
  long max_lift_bits = 2000;
  SolveStats* stats = nullptr;
};

// composition f(g) of rational functions
inline RatFunQ ratfun_compose(const RatFunQ& f, const RatFunQ& g) {
  auto embed = [](const Rat& a) { return RatFunQ(a); };
  RatFunQ n = f.num.eval_map(g, embed);
  RatFunQ d = f.den.eval_map(g, embed);
  return n / d;
}

// Quotient data at an aligned singularity: the input point sits at 0 and maps
// to the base point 0 with local multiplicity e. Series are in the variable t
// with x = t^a_f (t = x when a_f = 1). The pullback expansion is recovered as
// f = qinv(s * W) with the branch constant s swept over residues.
struct QuotientData {
  bool log_mode = false;
  long a_f = 1;
  long e = 1;      // valuation of f at 0, in t-units
  long prec = 0;   // x-adic working precision a
  long tprec = 0;  // t-series length = a_f * prec
  std::vector<Rat> qinv;          // compositional inverse of u = q^(1/alpha)
  std::vector<Series<Rat>> wpow;  // W^k in t, k = 0..kmax
};

// p_base, p_inp: polynomial coefficients of the base and input operators,
// both already moved so the matched singularity is at 0
inline QuotientData build_quotients(const std::vector<UPoly<Rat>>& p_base,
                                    const std::vector<UPoly<Rat>>& p_inp, long a_f, long e,
                                    long prec, bool log_mode) {
  QuotientData qd;
  qd.log_mode = log_mode;
  qd.a_f = a_f;
  qd.e = e;
  qd.prec = prec;
  qd.tprec = a_f * prec;
  auto base = formal_solutions(p_base, prec);
  auto inp = formal_solutions(p_inp, prec);

  Series<Rat> u(prec, Rat(0)), wunit(prec, Rat(0));
  if (log_mode) {
    if (!base.log_case || !inp.log_case) throw Unsupported("quotient: logarithmic case expected");
    // u = g = x*exp(h), W = G^(e/a_f) = t^e * exp((e/a_f) H(t^a_f))
    u = series_exp(base.h).shift(1);
    wunit = series_exp(Rat(e, a_f) * inp.h);
  } else {
    if (base.log_case || inp.log_case) throw Unsupported("quotient: unexpected logarithm");
    Rat alpha = base.e_high - base.e_low;
    Rat delta = inp.e_high - inp.e_low;
    assert(!is_zero(alpha));
    assert(Rat(a_f) * delta == Rat(e) * alpha);
    // u = q^(1/alpha) = x*(u_high/u_low)^(1/alpha), W = Q^(1/alpha)
    Series<Rat> bu = base.u_high * base.u_low.inverse();
    Series<Rat> iu = inp.u_high * inp.u_low.inverse();
    Rat ai = Rat(1) / alpha;
    u = series_pow_rat(bu, ai, Rat(0)).shift(1);
    wunit = series_pow_rat(iu, ai, Rat(0));
  }
  qd.qinv = series_reversion(u).c;

  Series<Rat> w(qd.tprec, Rat(0));
  for (long j = 0; j < prec && e + a_f * j < qd.tprec; ++j) w.c[e + a_f * j] = wunit.at(j);
  Series<Rat> cur(qd.tprec, Rat(0));
  cur.c[0] = Rat(1);
  qd.wpow.push_back(cur);
  for (long k = 1; k < prec && k * e < qd.tprec; ++k) {
    cur = cur * w;
    qd.wpow.push_back(cur);
  }
  return qd;
}

// quotient data reduced into a modular coefficient ring, with a fast
// evaluation of f(c) = sum qinv_k c^k W^k
template <class E>
struct ReducedQuotient {
  std::vector<E> qinv;
  std::vector<Series<E>> wpow;
  long e = 1;
  long tprec = 0;
  E zero;

  template <class F>
  ReducedQuotient(const QuotientData& qd, F&& embed, const E& z)
      : e(qd.e), tprec(qd.tprec), zero(z) {
    for (const auto& a : qd.qinv) qinv.push_back(embed(a));
    for (const auto& s : qd.wpow) {
      Series<E> w(tprec, z);
      for (long i = 0; i < tprec; ++i) w.c[i] = embed(s.at(i));
      wpow.push_back(std::move(w));
    }
  }

  Series<E> eval(const E& c) const {
    Series<E> acc(tprec, zero);
    E ck = kfrom_int(zero, 1);
    for (std::size_t k = 1; k < wpow.size() && k < qinv.size(); ++k) {
      ck = ck * c;
      if (is_zero(qinv[k])) continue;
      E s = qinv[k] * ck;
      const auto& w = wpow[k].c;
      for (long i = (long)k * e; i < tprec; ++i)
        if (!is_zero(w[i])) acc.c[i] += s * w[i];
    }
    return acc;
  }
};

struct SweepHit {
  unsigned long c0 = 0;
  UPoly<Fp> num, den;  // den(0) = 1
};

struct AlgSweepHit {
  unsigned long c0 = 0;
  std::array<UPoly<Fp>, 3> mp;  // sum mp[j] y^j = 0, fixed scaling
};

inline std::vector<SweepHit> sweep_c(const QuotientData& qd, unsigned long ell, long d_f) {
  assert(qd.a_f == 1);
  Fp z(0, ell);
  ReducedQuotient<Fp> rq(qd, [&](const Rat& a) { return Fp::from_rat(a, ell); }, z);
  std::vector<SweepHit> out;
  for (unsigned long c0 = 1; c0 < ell; ++c0) {
    Series<Fp> fs = rq.eval(Fp(c0, ell));
    UPoly<Fp> h;
    h.c = fs.c;
    h.trim();
    auto rec = ratfun_reconstruct(h, qd.prec, d_f, d_f);
    if (!rec || rec->num.zero()) continue;
    if (!is_zero(rec->num.at(0))) continue;  // f vanishes at the matched point
    Fp d0i = kinv(rec->den.at(0));
    out.push_back(SweepHit{c0, d0i * rec->num, d0i * rec->den});
  }
  return out;
}

inline std::vector<AlgSweepHit> sweep_c_algebraic(const QuotientData& qd, unsigned long ell,
                                                  long d_f) {
  assert(qd.a_f == 2);
  Fp z(0, ell);
  ReducedQuotient<Fp> rq(qd, [&](const Rat& a) { return Fp::from_rat(a, ell); }, z);
  std::vector<AlgSweepHit> out;
  long cols = 3 * (d_f + 1);
  for (unsigned long c0 = 1; c0 < ell; ++c0) {
    Series<Fp> fs = rq.eval(Fp(c0, ell));
    if (fs.is_zero_series()) continue;
    Series<Fp> fs2 = fs * fs;
    Mat<Fp> m((std::size_t)qd.tprec, Vec<Fp>(cols, z));
    for (long j = 0; j <= 2; ++j) {
      for (long i = 0; i <= d_f; ++i) {
        long col = j * (d_f + 1) + i;
        for (long k = 0; 2 * i + k < qd.tprec; ++k) {
          if (j == 0)
            m[2 * i + k][col] = (k == 0) ? Fp(1, ell) : z;
          else
            m[2 * i + k][col] = (j == 1) ? fs.c[k] : fs2.c[k];
        }
      }
    }
    auto ker = nullspace(m);
    if (ker.size() != 1) continue;
    const auto& v = ker[0];
    // normalize the first nonzero coordinate to 1
    Fp piv = z;
    for (const auto& x : v)
      if (!is_zero(x)) {
        piv = x;
        break;
      }
    Fp pi = kinv(piv);
    AlgSweepHit hit;
    hit.c0 = c0;
    bool a2_nonzero = false;
    for (long j = 0; j <= 2; ++j) {
      std::vector<Fp> c;
      for (long i = 0; i <= d_f; ++i) c.push_back(pi * v[j * (d_f + 1) + i]);
      hit.mp[j] = UPoly<Fp>(std::move(c));
      if (j == 2 && !hit.mp[j].zero()) a2_nonzero = true;
    }
    if (!a2_nonzero) continue;  // degenerate: f would be rational
    out.push_back(std::move(hit));
  }
  return out;
}

namespace detail {

inline Fp div_exact_mod(const Int& num, const Int& m, unsigned long ell) {
  // num must be divisible by m; returns (num/m) mod ell
  assert(num % m == 0);
  return Fp::from_int(num / m, ell);
}

}  // namespace detail

// Hensel lifting of a rational pullback image, one digit of c per level, with
// rational number reconstruction attempted after every level. The accept
// callback certifies a candidate; lifting continues past spurious
// reconstructions until the modulus exceeds max_lift_bits.
inline std::optional<RatFunQ> lift_rational(const QuotientData& qd, const SweepHit& hit,
                                            unsigned long ell, long max_lift_bits,
                                            const std::function<bool(const RatFunQ&)>& accept) {
  long deg_a = hit.num.deg(), deg_b = hit.den.deg();
  std::vector<Int> A(deg_a + 1, Int(0)), B(deg_b + 1, Int(0));
  for (long i = 0; i <= deg_a; ++i) A[i] = Int((unsigned long)hit.num.c[i].v);
  for (long i = 0; i <= deg_b; ++i) B[i] = Int((unsigned long)hit.den.c[i].v);
  Int m((unsigned long)ell);
  Int c((unsigned long)hit.c0);

  while (true) {
    // rational number reconstruction attempt
    bool ok = true;
    std::vector<Rat> ra(deg_a + 1), rb(deg_b + 1);
    for (long i = 0; i <= deg_a && ok; ++i) {
      auto r = ratnum_reconstruct(A[i], m);
      if (r) ra[i] = *r; else ok = false;
    }
    for (long i = 0; i <= deg_b && ok; ++i) {
      auto r = ratnum_reconstruct(B[i], m);
      if (r) rb[i] = *r; else ok = false;
    }
    if (ok) {
      UPoly<Rat> an, bn;
      an.c = ra; an.trim();
      bn.c = rb; bn.trim();
      if (!an.zero() && !bn.zero()) {
        RatFunQ f(an, bn);
        if (accept(f)) return f;
      }
    }

    Int mnext = m * Int((unsigned long)ell);
    if ((long)mpz_sizeinbase(mnext.get_mpz_t(), 2) > max_lift_bits) return std::nullopt;
    auto mod = Zl::make_modulus(mnext);
    Zl z0(Int(0), mod);
    ReducedQuotient<Zl> rq(qd, [&](const Rat& a) { return Zl::from_rat(a, mod); }, z0);
    Series<Zl> h0 = rq.eval(Zl(c, mod));
    Series<Zl> h1 = rq.eval(Zl(c + m, mod));

    long n = qd.prec;  // a_f = 1, tprec = prec
    std::vector<Fp> hbar(n), d1(n);
    for (long i = 0; i < n; ++i) {
      hbar[i] = Fp::from_int(h0.c[i].v, ell);
      Int diff = h1.c[i].v - h0.c[i].v;
      if (diff < 0) diff += mnext;
      d1[i] = detail::div_exact_mod(diff, m, ell);
    }
    // defect R = (B*h0 - A)/m mod ell
    std::vector<Fp> R(n);
    for (long i = 0; i < n; ++i) {
      Int s(0);
      for (long j = 0; j <= deg_b && j <= i; ++j) s += B[j] * h0.c[i - j].v;
      if (i <= deg_a) s -= A[i];
      s %= mnext;
      if (s < 0) s += mnext;
      R[i] = detail::div_exact_mod(s, m, ell);
    }
    // (B mod ell) * d1
    std::vector<Fp> bd(n, Fp(0, ell));
    for (long j = 0; j <= deg_b; ++j) {
      Fp bj = Fp::from_int(B[j], ell);
      if (is_zero(bj)) continue;
      for (long i = j; i < n; ++i) bd[i] += bj * d1[i - j];
    }
    // A1_i - sum_j B1_j hbar_{i-j} - t (B*d1)_i = R_i ; B1 has no constant term
    long cols = (deg_a + 1) + deg_b + 1;
    Mat<Fp> mat((std::size_t)n, Vec<Fp>(cols, Fp(0, ell)));
    Vec<Fp> rhs(n, Fp(0, ell));
    for (long i = 0; i < n; ++i) {
      if (i <= deg_a) mat[i][i] = Fp(1, ell);
      for (long j = 1; j <= deg_b && j <= i; ++j) mat[i][deg_a + j] = -hbar[i - j];
      mat[i][cols - 1] = -bd[i];
      rhs[i] = R[i];
    }
    auto sol = solve_linear(mat, rhs);
    if (!sol) return std::nullopt;
    const auto& x = sol->particular;
    for (long i = 0; i <= deg_a; ++i) A[i] = (A[i] + m * Int((unsigned long)x[i].v)) % mnext;
    for (long j = 1; j <= deg_b; ++j)
      B[j] = (B[j] + m * Int((unsigned long)x[deg_a + j].v)) % mnext;
    c = (c + m * Int((unsigned long)x[cols - 1].v)) % mnext;
    m = mnext;
  }
}

// joint denominator clearing and integer-primitive scaling of a minimal
// polynomial; sign fixed by the leading coefficient of the y^2 part
inline std::array<UPoly<Rat>, 3> normalize_minpoly(std::array<UPoly<Rat>, 3> mp) {
  Int den(1), num(0);
  for (const auto& p : mp)
    for (const auto& coeff : p.c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denom(coeff).get_mpz_t());
  for (const auto& p : mp)
    for (const auto& coeff : p.c) {
      Int nn = numer(coeff) * (den / denom(coeff));
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), nn.get_mpz_t());
    }
  if (num == 0) num = 1;
  Rat s(den, num);
  s.canonicalize();
  if (!mp[2].zero() && sgn(mp[2].lead()) < 0) s = -s;
  for (auto& p : mp) p = s * p;
  return mp;
}

inline std::optional<std::array<UPoly<Rat>, 3>> lift_algebraic(
    const QuotientData& qd, const AlgSweepHit& hit, unsigned long ell, long d_f,
    long max_lift_bits, const std::function<bool(const std::array<UPoly<Rat>, 3>&)>& accept) {
  long w = d_f + 1;
  std::vector<Int> A(3 * w, Int(0));
  long pivot = -1;
  for (long j = 0; j <= 2; ++j)
    for (long i = 0; i <= d_f; ++i) {
      A[j * w + i] = Int((unsigned long)hit.mp[j].at(i).v);
      if (pivot < 0 && A[j * w + i] != 0) pivot = j * w + i;
    }
  assert(pivot >= 0);
  Int m((unsigned long)ell);
  Int c((unsigned long)hit.c0);
  long n = qd.tprec;

  while (true) {
    bool ok = true;
    std::array<UPoly<Rat>, 3> mp;
    for (long j = 0; j <= 2 && ok; ++j) {
      std::vector<Rat> cj(w);
      for (long i = 0; i < w && ok; ++i) {
        auto r = ratnum_reconstruct(A[j * w + i], m);
        if (r) cj[i] = *r; else ok = false;
      }
      if (ok) {
        mp[j] = UPoly<Rat>(std::move(cj));
      }
    }
    if (ok && !mp[2].zero()) {
      auto nm = normalize_minpoly(mp);
      if (accept(nm)) return nm;
    }

    Int mnext = m * Int((unsigned long)ell);
    if ((long)mpz_sizeinbase(mnext.get_mpz_t(), 2) > max_lift_bits) return std::nullopt;
    auto mod = Zl::make_modulus(mnext);
    Zl z0(Int(0), mod);
    ReducedQuotient<Zl> rq(qd, [&](const Rat& a) { return Zl::from_rat(a, mod); }, z0);
    Series<Zl> h0 = rq.eval(Zl(c, mod));
    Series<Zl> h1 = rq.eval(Zl(c + m, mod));
    Series<Zl> h0sq = h0 * h0;

    std::vector<Fp> hbar(n), d1(n);
    for (long i = 0; i < n; ++i) {
      hbar[i] = Fp::from_int(h0.c[i].v, ell);
      Int diff = h1.c[i].v - h0.c[i].v;
      if (diff < 0) diff += mnext;
      d1[i] = detail::div_exact_mod(diff, m, ell);
    }
    // defect R = (sum_j A_j(t^2) h0^j)/m mod ell
    std::vector<Fp> R(n);
    {
      std::vector<Int> s(n, Int(0));
      for (long i = 0; i <= d_f; ++i) {
        for (long k = 0; 2 * i + k < n; ++k) {
          if (k == 0) s[2 * i] += A[i];
          s[2 * i + k] += A[w + i] * h0.c[k].v + A[2 * w + i] * h0sq.c[k].v;
        }
      }
      for (long i = 0; i < n; ++i) {
        s[i] %= mnext;
        if (s[i] < 0) s[i] += mnext;
        R[i] = detail::div_exact_mod(s[i], m, ell);
      }
    }
    // t-coefficient: (A1bar + 2 A2bar hbar) * d1 with A_j(t^2) embedded
    std::vector<Fp> hbar2(n, Fp(0, ell)), tvec(n, Fp(0, ell));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j <= i; ++j) hbar2[i] += hbar[j] * hbar[i - j];
    {
      std::vector<Fp> q(n, Fp(0, ell));  // sum_j j A_j hbar^(j-1)
      for (long i = 0; i <= d_f; ++i) {
        Fp a1 = Fp::from_int(A[w + i], ell), a2 = Fp::from_int(A[2 * w + i], ell);
        for (long k = 0; 2 * i + k < n; ++k) {
          if (k == 0 && !is_zero(a1)) q[2 * i] += a1;
          if (!is_zero(a2)) q[2 * i + k] += (a2 + a2) * hbar[k];
        }
      }
      for (long i = 0; i < n; ++i)
        for (long j = 0; j <= i; ++j) tvec[i] += q[j] * d1[i - j];
    }
    // unknowns: corrections for all coefficients except the pivot, plus t
    long cols = 3 * w;  // 3w-1 corrections + 1 digit unknown
    Mat<Fp> mat((std::size_t)n, Vec<Fp>(cols, Fp(0, ell)));
    Vec<Fp> rhs(n, Fp(0, ell));
    auto colof = [&](long idx) { return idx < pivot ? idx : idx - 1; };
    for (long i = 0; i <= d_f; ++i) {
      for (long k = 0; 2 * i + k < n; ++k) {
        long row = 2 * i + k;
        if (k == 0 && i != pivot) mat[row][colof(i)] += Fp(1, ell);
        if (w + i != pivot) mat[row][colof(w + i)] += hbar[k];
        if (2 * w + i != pivot) mat[row][colof(2 * w + i)] += hbar2[k];
      }
    }
    for (long i = 0; i < n; ++i) {
      mat[i][cols - 1] = tvec[i];
      rhs[i] = -R[i];
    }
    auto sol = solve_linear(mat, rhs);
    if (!sol) return std::nullopt;
    const auto& x = sol->particular;
    for (long idx = 0; idx < 3 * w; ++idx) {
      if (idx == pivot) continue;
      A[idx] = (A[idx] + m * Int((unsigned long)x[colof(idx)].v)) % mnext;
    }
    c = (c + m * Int((unsigned long)x[cols - 1].v)) % mnext;
    m = mnext;
  }
}

// r from the subleading coefficients, with exact certification
inline std::optional<RatFunQ> recover_r(const DiffOpQ& m, const DiffOpQ& l_inp) {
  if (m.order() != 2 || l_inp.order() != 2) return std::nullopt;
  DiffOpQ mm = m.monic(), lm = l_inp.monic();
  RatFunQ r = RatFunQ(Rat(1, 2)) * (mm.at(1) - lm.at(1));
  if (exp_product(mm, r) == lm) return r;
  return std::nullopt;
}

// whether a rational function has a square root in Q(x)
inline bool ratfun_is_square(const RatFunQ& f) {
  if (f.zero()) return true;
  auto poly_square = [](const UPoly<Rat>& p) {
    if (p.deg() % 2 != 0) return false;
    auto parts = squarefree_parts(primitive_int(p));
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].deg() > 0 && (i + 1) % 2 != 0) return false;
    return true;
  };
  if (!poly_square(f.num) || !poly_square(f.den)) return false;
  Rat lc = f.num.lead() / f.den.lead();
  return sgn(lc) > 0 && rat_sqrt(lc).has_value();
}

// exp-product parameter for an algebraic pullback given by sum mp[j] y^j = 0,
// using the branch f = (-A1 + z)/(2 A2) with z^2 = A1^2 - 4 A2 A0
inline std::optional<QuadFun> recover_r_algebraic(const DiffOpQ& base_op,
                                                  const std::array<UPoly<Rat>, 3>& mp,
                                                  const DiffOpQ& l_inp) {
  if (l_inp.order() != 2 || mp[2].zero()) return std::nullopt;
  RatFunQ a0(mp[0]), a1(mp[1]), a2(mp[2]);
  RatFunQ d = a1 * a1 - RatFunQ(Rat(4)) * a2 * a0;
  if (d.zero() || ratfun_is_square(d)) return std::nullopt;  // degenerate: f rational
  RatFunQ inv2a2 = kinv(RatFunQ(Rat(2)) * a2);
  QuadFun f(-(a1 * inv2a2), inv2a2, d);
  QuadFun fp = f.derivative();
  if (fp.zero()) return std::nullopt;
  DiffOpQ bm = base_op.monic();
  QuadFun p1f = quadfun_eval(bm.at(1), f);
  QuadFun p0f = quadfun_eval(bm.at(0), f);
  QuadFun b1 = -(fp.derivative() / fp) + fp * p1f;
  QuadFun b0 = fp * fp * p0f;
  DiffOpQ lm = l_inp.monic();
  QuadFun ia1 = QuadFun::from_ratfun(lm.at(1), d);
  QuadFun ia0 = QuadFun::from_ratfun(lm.at(0), d);
  QuadFun half(RatFunQ(Rat(1, 2)), RatFunQ(), d);
  QuadFun r = half * (b1 - ia1);
  QuadFun lhs = b0 - b1 * r + r * r - r.derivative();
  if (lhs == ia0) return r;
  return std::nullopt;
}

struct HypSolution {
  GHDOParams params;
  bool algebraic = false;
  RatFunQ f;                             // rational pullback (a_f = 1)
  std::array<UPoly<Rat>, 3> minpoly{};   // algebraic pullback (a_f = 2)
  bool plus_branch = true;               // which y-root of minpoly is used
  RatFunQ r;
  QuadFun r_alg;
  std::optional<GaugeOp> gauge;
  std::optional<DiffOpQ> transformed;  // gauge case: the operator actually solved
  bool certified = false;
};

// substitute x -> g(x) in a minimal polynomial and clear denominators
inline std::array<UPoly<Rat>, 3> minpoly_compose(const std::array<UPoly<Rat>, 3>& mp,
                                                 const RatFunQ& g) {
  auto embed = [](const Rat& a) { return RatFunQ(a); };
  std::array<RatFunQ, 3> r;
  UPoly<Rat> den(Rat(1));
  for (int j = 0; j < 3; ++j) {
    r[j] = mp[j].eval_map(g, embed);
    den = (den * r[j].den) / upoly_gcd(den, r[j].den);
  }
  std::array<UPoly<Rat>, 3> out;
  for (int j = 0; j < 3; ++j) out[j] = r[j].num * (den / r[j].den);
  return normalize_minpoly(out);
}

namespace detail {

struct ExpansionPoint {
  bool at_infinity = false;
  Rat p;
  bool log_mode = false;
  Rat delta;
};

inline std::optional<ExpansionPoint> choose_expansion_point(const SingStructure& ss) {
  auto key = [](const ExpansionPoint& e) {
    // height, then magnitude, then nonnegative first; infinity last
    Rat h = e.at_infinity ? Rat(0) : Rat(std::max(rat_abs(Rat(numer(e.p))), Rat(denom(e.p))));
    return std::make_tuple(e.at_infinity ? 1 : 0, h, rat_abs(e.p), sgn(e.p) < 0 ? 1 : 0);
  };
  std::optional<ExpansionPoint> best_nonlog, best_log;
  for (const auto& pl : ss.places) {
    if (!pl.cls.rational_delta || !pl.cls.true_sing) continue;
    if (!pl.at_infinity && !pl.rational_point()) continue;
    ExpansionPoint e;
    e.at_infinity = pl.at_infinity;
    e.p = pl.at_infinity ? Rat(0) : pl.point();
    e.delta = pl.cls.delta;
    if (!pl.cls.is_log && !is_integer(e.delta)) {
      e.log_mode = false;
      if (!best_nonlog || key(e) < key(*best_nonlog)) best_nonlog = e;
    } else if (pl.cls.is_log && is_zero(e.delta)) {
      e.log_mode = true;
      if (!best_log || key(e) < key(*best_log)) best_log = e;
    }
  }
  if (best_nonlog) return best_nonlog;
  return best_log;
}

}  // namespace detail

// Algorithm 1: certified 2F1-type solutions of an irreducible regular
// singular second-order operator. Returns at most one solution (the first
// certified hit in a deterministic candidate order).
inline std::vector<HypSolution> find_2f1(const DiffOpQ& l_inp, const SolveConfig& cfg) {
  std::vector<HypSolution> out;
  if (l_inp.order() != 2) throw Unsupported("operator order must be 2");
  SingStructure ss = analyze_singularities(l_inp);
  if (!ss.all_rational_delta) return out;  // no 2F1 pullback can exist
  auto pt = detail::choose_expansion_point(ss);
  if (!pt) throw Unsupported("no rational true singularity suitable for expansion");

  std::vector<UPoly<Rat>> pci =
      pt->at_infinity ? coeffs_at_infinity(l_inp) : coeffs_at_point(l_inp, pt->p);
  DiffOpQ lm = l_inp.monic();
  auto mobius_back = [&](const RatFunQ& f_loc) {
    if (pt->at_infinity) return ratfun_compose(f_loc, RatFunQ(Rat(1)) / RatFunQ::x());
    if (is_zero(pt->p)) return f_loc;
    return ratfun_compose(f_loc, RatFunQ::x() - RatFunQ(pt->p));
  };

  for (long a_f = 1; a_f <= cfg.a_fmax; ++a_f) {
    for (const auto& cand : find_expdiffs(ss, a_f)) {
      // arrangements with a matching slot moved to the base point 0
      std::vector<std::array<Rat, 3>> arrangements;
      for (int s = 0; s < 3; ++s) {
        const Rat& al = cand.alpha[s];
        bool dup = false;
        for (int t = 0; t < s; ++t)
          if (cand.alpha[t] == al) dup = true;
        if (dup) continue;
        if (pt->log_mode) {
          if (!is_zero(al)) continue;
        } else {
          if (is_integer(al)) continue;
          Rat ev = Rat(a_f) * pt->delta / al;
          if (!is_integer(ev) || sgn(ev) <= 0 || ev > Rat(a_f) * Rat(cand.d)) continue;
        }
        std::array<Rat, 3> rest;
        int idx = 0;
        for (int t = 0; t < 3; ++t)
          if (t != s) rest[idx++] = cand.alpha[t];
        arrangements.push_back({al, rest[0], rest[1]});
        if (rest[0] != rest[1]) arrangements.push_back({al, rest[1], rest[0]});
      }
      for (const auto& tri : arrangements) {
        auto base = ghdo_from_triple(tri);
        if (!base) continue;
        if (cfg.stats) ++cfg.stats->candidates;
        std::vector<long> evals;
        if (pt->log_mode) {
          for (long v0 = 1; v0 <= cand.d; ++v0) evals.push_back(a_f * v0);
        } else {
          Rat ev = Rat(a_f) * pt->delta / tri[0];
          evals.push_back((long)floor_int(ev).get_si());
        }
        long prec = 2 * (a_f + 1) * (cand.d + 1) + 6;
        if (cfg.precision_factor != Rat(1)) {
          Rat scaled = cfg.precision_factor * Rat(prec);
          prec = (long)floor_int(scaled).get_si();
          if (Rat(prec) != scaled) ++prec;
        }
        auto pcb = poly_coeffs(base->op());
        // in log mode several multiplicities v0 can certify Mobius-equivalent
        // pullbacks; keep the first hit as fallback but prefer one with r = 0
        std::optional<HypSolution> fallback;
        for (long e : evals) {
          QuotientData qd;
          try {
            qd = build_quotients(pcb, pci, a_f, e, prec, pt->log_mode);
          } catch (const Unsupported&) {
            continue;
          }
          for (unsigned long ell : {cfg.prime, cfg.retry_prime}) {
            bool swept = false;
            try {
              if (a_f == 1) {
                auto hits = sweep_c(qd, ell, cand.d);
                if (hits.empty()) continue;  // retry prime
                swept = true;
                if (cfg.stats) {
                  ++cfg.stats->sweeps;
                  cfg.stats->note_prime(ell);
                }
                for (const auto& hit : hits) {
                  std::optional<HypSolution> found;
                  auto accept = [&](const RatFunQ& floc) {
                    RatFunQ fg = mobius_back(floc);
                    if (fg.zero() || fg.derivative().zero()) return false;
                    DiffOpQ mop = change_of_variables(base->op(), fg);
                    auto r = recover_r(mop, lm);
                    if (!r) return false;
                    HypSolution sol;
                    sol.params = *base;
                    sol.f = fg;
                    sol.r = *r;
                    sol.certified = true;
                    found = std::move(sol);
                    return true;
                  };
                  if (cfg.stats) ++cfg.stats->lifts;
                  if (lift_rational(qd, hit, ell, cfg.max_lift_bits, accept)) {
                    if (!pt->log_mode || found->r.zero()) {
                      out.push_back(std::move(*found));
                      return out;
                    }
                    if (!fallback) fallback = std::move(*found);
                  }
                }
              } else {
                auto hits = sweep_c_algebraic(qd, ell, cand.d);
                if (hits.empty()) continue;
                swept = true;
                if (cfg.stats) {
                  ++cfg.stats->sweeps;
                  cfg.stats->note_prime(ell);
                }
                for (const auto& hit : hits) {
                  auto accept = [&](const std::array<UPoly<Rat>, 3>& mloc) {
                    std::array<UPoly<Rat>, 3> mg = mloc;
                    if (pt->at_infinity)
                      mg = minpoly_compose(mloc, RatFunQ(Rat(1)) / RatFunQ::x());
                    else if (!is_zero(pt->p))
                      mg = minpoly_compose(mloc, RatFunQ::x() - RatFunQ(pt->p));
                    auto r = recover_r_algebraic(base->op(), mg, lm);
                    if (!r) return false;
                    HypSolution sol;
                    sol.params = *base;
                    sol.algebraic = true;
                    sol.minpoly = mg;
                    sol.r_alg = *r;
                    sol.certified = true;
                    out.push_back(std::move(sol));
                    return true;
                  };
                  if (cfg.stats) ++cfg.stats->lifts;
                  if (lift_algebraic(qd, hit, ell, cand.d, cfg.max_lift_bits, accept)) return out;
                }
              }
            } catch (const BadPrime&) {
              continue;  // retry prime
            }
            if (swept) break;  // sweep ran but nothing certified: no prime retry
          }
        }
        if (fallback) {
          out.push_back(std::move(*fallback));
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace hyp

#endif
