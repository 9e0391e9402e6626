#ifndef HYP_CANDIDATES_HPP
#define HYP_CANDIDATES_HPP

#include <array>
#include <map>
#include <set>

#include "hyp/frobenius.hpp"

namespace hyp {

struct SingPlace {
  bool at_infinity = false;
  UPoly<Rat> minpoly;  // monic-free integer-primitive irreducible, finite places
  long deg = 1;
  PlaceClass cls;

  bool rational_point() const { return !at_infinity && deg == 1; }
  Rat point() const {
    assert(rational_point());
    return -minpoly.c[0] / minpoly.c[1];
  }
};

struct SingStructure {
  std::vector<SingPlace> places;  // every singular place, true or removable
  bool all_rational_delta = true;
  long n_true = 0;                // true singular points counted over C
  Rat covol;                      // -2 + sum over places deg*(1 - delta)
  std::vector<Rat> log_deltas;    // per point (repeated deg times), integers
  std::vector<Rat> nonlog_deltas; // per point, non-integer deltas of true sings
  std::vector<Rat> removable_deltas;  // per point, integer deltas, no log
  bool has_log() const { return !log_deltas.empty(); }
  bool has_zero_log() const {
    for (const auto& d : log_deltas)
      if (is_zero(d)) return true;
    return false;
  }
};

inline SingStructure analyze_singularities(const DiffOpQ& l) {
  if (l.order() != 2) throw Unsupported("operator order must be 2");
  SingStructure ss;
  ss.covol = Rat(-2);
  auto pc = poly_coeffs(l);
  // drop content common to all coefficients
  UPoly<Rat> content;
  for (const auto& p : pc)
    if (!p.zero()) content = content.zero() ? p : upoly_gcd(content, p);
  if (content.deg() > 0)
    for (auto& p : pc) p = p / content;

  auto add_place = [&](SingPlace pl) {
    if (!pl.cls.rational_delta) {
      ss.all_rational_delta = false;
      ss.places.push_back(std::move(pl));
      return;
    }
    Rat delta = pl.cls.delta;
    if (pl.cls.true_sing) {
      ss.n_true += pl.deg;
      for (long i = 0; i < pl.deg; ++i) {
        if (pl.cls.is_log) ss.log_deltas.push_back(delta);
        else ss.nonlog_deltas.push_back(delta);
      }
    } else if (delta != 1) {
      for (long i = 0; i < pl.deg; ++i) ss.removable_deltas.push_back(delta);
    }
    ss.covol += Rat(pl.deg) * (Rat(1) - delta);
    ss.places.push_back(std::move(pl));
  };

  DiffOpQ lp;
  lp.c.resize(pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) lp.c[i] = RatFunQ(pc[i]);
  for (const auto& fm : factor_rational(pc.back())) {
    SingPlace pl;
    pl.minpoly = fm.poly;
    pl.deg = fm.poly.deg();
    if (pl.deg == 1) {
      pl.cls = classify_rational_place(coeffs_at_point(lp, pl.point()));
    } else {
      auto ctx = std::make_shared<const NFCtx>(fm.poly.monic());
      pl.cls = classify_algebraic_place(coeffs_at_algebraic(lp, ctx), ctx);
    }
    add_place(std::move(pl));
  }
  {
    SingPlace pl;
    pl.at_infinity = true;
    pl.cls = classify_rational_place(coeffs_at_infinity(lp));
    add_place(std::move(pl));
  }
  return ss;
}

// a priori bound on deg f, by whether the operator has a logarithmic
// singularity
inline long degree_bound(const SingStructure& ss) {
  if (ss.has_log()) return 6 * (ss.n_true - 2);
  Rat b = Rat(36) * (Rat(ss.n_true) - Rat(7, 3));
  return (long)floor_int(b).get_si();
}

struct GHDOParams {
  Rat a1, a2, b1;

  std::array<Rat, 3> expdiffs() const {
    return {rat_abs(1 - b1), rat_abs(b1 - a1 - a2), rat_abs(a1 - a2)};
  }
  bool irreducible() const {
    return !is_integer(a1) && !is_integer(a2) && !is_integer(b1 - a1) && !is_integer(b1 - a2);
  }
  DiffOpQ op() const {
    RatFunQ x = RatFunQ::x();
    RatFunQ one(Rat(1));
    DiffOpQ dx = DiffOpQ::dx(one);
    DiffOpQ l = (x * (one - x)) * (dx * dx);
    l = l + (RatFunQ(b1) - RatFunQ(a1 + a2 + 1) * x) * dx;
    l = l - DiffOpQ::from_fun(RatFunQ(a1 * a2));
    return l;
  }
};

// construct an irreducible GHDO with the given absolute exponent differences
// [alpha_0, alpha_1, alpha_inf]; sign choices are tried in a fixed order
inline std::optional<GHDOParams> ghdo_from_triple(const std::array<Rat, 3>& alpha) {
  for (int s0 = 0; s0 < 2; ++s0)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        Rat b1 = Rat(1) - (s0 ? -alpha[0] : alpha[0]);
        Rat sum = b1 - (s1 ? -alpha[1] : alpha[1]);
        Rat diff = s2 ? alpha[2] : -alpha[2];
        GHDOParams p{(sum + diff) / 2, (sum - diff) / 2, b1};
        if (p.a1 > p.a2) std::swap(p.a1, p.a2);
        if (p.irreducible()) return p;
      }
  return std::nullopt;
}

struct Candidate {
  std::array<Rat, 3> alpha;  // candidate [alpha_0, alpha_1, alpha_inf]
  long d = 0;                // candidate degree of f
  GHDOParams base;
};

namespace detail {

// is delta = e*alpha with a_f*e a positive integer not exceeding cap
inline bool covers(const Rat& delta, const Rat& alpha, long a_f, long cap) {
  if (is_zero(alpha)) return is_zero(delta);
  Rat e = Rat(a_f) * delta / alpha;
  return sgn(e) > 0 && is_integer(e) && e <= Rat(cap);
}

// set of degrees d <= dmax realizable as subset sums of the integer
// quotients a_f*delta/v, with unlimited copies of a_f/v (points where the
// pullback is locally v -> v*e with no visible singularity)
inline std::set<long> degree_set(const Rat& v, const std::vector<Rat>& all_deltas, long a_f,
                                 long dmax) {
  std::set<long> out;
  if (dmax < 1) return out;
  std::vector<long> items;
  for (const auto& delta : all_deltas) {
    if (is_zero(v)) continue;
    Rat e = Rat(a_f) * delta / v;
    if (sgn(e) > 0 && is_integer(e) && e <= Rat(dmax)) items.push_back((long)floor_int(e).get_si());
  }
  std::vector<char> reach(dmax + 1, 0);
  reach[0] = 1;
  for (long it : items)
    for (long s = dmax; s >= it; --s)
      if (reach[s - it]) reach[s] = 1;
  long hidden = 0;
  {
    Rat h = Rat(a_f) / v;
    if (sgn(h) > 0 && is_integer(h) && h <= Rat(dmax)) hidden = (long)floor_int(h).get_si();
  }
  for (long d = 1; d <= dmax; ++d) {
    bool ok = false;
    if (hidden > 0) {
      for (long s = d % hidden; s <= d && !ok; s += hidden)
        if (reach[s]) ok = true;
    } else {
      ok = reach[d];
    }
    if (ok) out.insert(d);
  }
  return out;
}

}  // namespace detail

// enumerate candidate exponent difference triples with degrees, following
// the combinatorial restrictions from the singularity structure
inline std::vector<Candidate> find_expdiffs(const SingStructure& ss, long a_f) {
  std::vector<Candidate> out;
  if (!ss.all_rational_delta) return out;
  long dmax = degree_bound(ss);
  if (dmax < 1) return out;

  const auto& sn = ss.nonlog_deltas;
  const auto& slog = ss.log_deltas;
  std::vector<Rat> all_deltas = sn;
  for (const auto& d : slog) all_deltas.push_back(d);
  for (const auto& d : ss.removable_deltas) all_deltas.push_back(d);

  Rat log_sum(0);
  for (const auto& d : slog) log_sum += d;

  // integer slot values allowed by the logarithmic singularities
  std::set<Rat> int_slot_set;
  if (ss.has_zero_log()) int_slot_set.insert(Rat(0));
  for (const auto& d : slog) {
    if (is_zero(d)) continue;
    Int n = numer(Rat(a_f) * d);
    for (Int m = 1; m * m <= n; m += 1) {
      if (n % m == 0) {
        int_slot_set.insert(Rat(m));
        int_slot_set.insert(Rat(n / m));
      }
    }
  }

  // non-integer first-slot candidates
  std::set<Rat> gamma1;
  if (!sn.empty()) {
    Rat mx = sn[0];
    for (const auto& d : sn) mx = std::max(mx, d);
    for (long b = 1; b <= dmax; ++b) {
      Rat v = Rat(a_f) * mx / Rat(b);
      if (!is_integer(v)) gamma1.insert(v);
    }
  } else {
    std::vector<Rat> pool = ss.removable_deltas;
    pool.push_back(Rat(1));
    for (const auto& aa : pool)
      for (long b = 1; b <= dmax; ++b) {
        Rat v = Rat(a_f) * aa / Rat(b);
        if (!is_integer(v)) gamma1.insert(v);
      }
  }

  // broad slot pool: divisors of every true exponent difference, of the
  // removable differences, and of 1 (slots whose preimages all become
  // removable); used for slots not forced to cover max(S_N)
  std::set<Rat> gammab = gamma1;
  {
    std::vector<Rat> pool = sn;
    for (const auto& d : ss.removable_deltas) pool.push_back(d);
    pool.push_back(Rat(1));
    for (const auto& aa : pool)
      for (long b = 1; b <= dmax; ++b) {
        Rat v = Rat(a_f) * aa / Rat(b);
        if (!is_integer(v) && sgn(v) > 0) gammab.insert(v);
      }
  }

  // degree restriction D_v per slot value, memoized across candidates
  std::map<Rat, std::set<long>> dmemo;
  auto degset = [&](const Rat& v) -> const std::set<long>& {
    auto it = dmemo.find(v);
    if (it == dmemo.end())
      it = dmemo.emplace(v, detail::degree_set(v, all_deltas, a_f, dmax)).first;
    return it->second;
  };
  auto restrict_d = [&](std::vector<long> ds, const Rat& v) {
    if (is_zero(v)) return ds;
    const auto& dv = degset(v);
    std::vector<long> out;
    for (long d : ds)
      if (dv.count(d)) out.push_back(d);
    return out;
  };

  std::set<std::pair<std::array<Rat, 3>, long>> seen;
  auto try_candidate = [&](std::array<Rat, 3> alpha, long d) {
    if (d < 1 || d > dmax) return;
    // canonical order: integer slots first (descending), then non-integer
    // descending
    std::sort(alpha.begin(), alpha.end(), [](const Rat& x, const Rat& y) {
      bool ix = is_integer(x), iy = is_integer(y);
      if (ix != iy) return ix;
      return x > y;
    });
    if (!seen.insert({alpha, d}).second) return;
    // requirement: every exponent difference is a multiple of some slot
    for (const auto& delta : sn) {
      bool ok = false;
      for (const auto& a : alpha)
        if (!is_integer(a) && detail::covers(delta, a, a_f, d)) ok = true;
      if (!ok) return;
    }
    for (const auto& delta : slog) {
      bool ok = false;
      for (const auto& a : alpha)
        if (is_integer(a) && detail::covers(delta, a, a_f, d)) ok = true;
      if (!ok) return;
    }
    bool has_zero_slot = false, has_int_slot = false;
    for (const auto& a : alpha) {
      if (is_zero(a)) has_zero_slot = true;
      if (is_integer(a)) has_int_slot = true;
    }
    if (has_zero_slot != ss.has_zero_log()) return;
    if (ss.has_log() && !has_int_slot) return;
    for (const auto& a : alpha) {
      if (!is_integer(a)) continue;
      // every integer slot must cover some logarithmic singularity
      bool ok = false;
      for (const auto& delta : slog)
        if (detail::covers(delta, a, a_f, d)) ok = true;
      if (!ok) return;
    }
    // Schwarz list: exclude GHDOs with Liouvillian solutions
    Rat schwarz(0);
    for (const auto& a : alpha)
      if (!is_integer(a)) schwarz += Rat(1, denom(a));
    if (schwarz >= 1) return;
    // conservation of covolume
    Rat base_covol = Rat(1) - alpha[0] - alpha[1] - alpha[2];
    if (ss.covol * Rat(a_f) != Rat(d) * base_covol) return;
    // subset-sum degree restriction per nonzero slot
    for (const auto& a : alpha) {
      if (is_zero(a)) continue;
      if (!degset(a).count(d)) return;
    }
    auto base = ghdo_from_triple(alpha);
    if (!base) return;
    out.push_back(Candidate{alpha, d, *base});
  };

  // choose the integer slots (k of 3), then fill the rest
  std::vector<Rat> int_slots(int_slot_set.begin(), int_slot_set.end());
  std::vector<std::vector<Rat>> int_choices;  // all multisets of size k
  for (long k = 0; k <= 3; ++k) {
    if (k > 0 && int_slots.empty()) break;
    if (ss.has_log() && k == 0) continue;
    if (!ss.has_log() && k > 0) break;
    std::vector<std::vector<Rat>> chosen = {{}};
    for (long t = 0; t < k; ++t) {
      std::vector<std::vector<Rat>> next;
      for (const auto& c : chosen)
        for (const auto& v : int_slots) {
          if (!c.empty() && v < c.back()) continue;  // non-decreasing multisets
          auto cc = c;
          cc.push_back(v);
          next.push_back(std::move(cc));
        }
      chosen = std::move(next);
    }

    for (const auto& ints : chosen) {
      Rat islot_sum(0);
      for (const auto& v : ints) islot_sum += v;
      std::vector<long> dcands;
      if (k > 0 && !is_zero(islot_sum)) {
        Rat dd = Rat(a_f) * log_sum / islot_sum;
        if (!is_integer(dd) || dd < 1 || dd > Rat(dmax)) continue;
        dcands = {(long)floor_int(dd).get_si()};
      } else {
        for (long d = 1; d <= dmax; ++d) dcands.push_back(d);
      }

      for (const auto& v : ints) dcands = restrict_d(std::move(dcands), v);
      if (dcands.empty()) continue;

      long nfree = 3 - k;
      auto finish = [&](std::vector<Rat> fixed, const std::vector<long>& ds) {
        // last free slot from the covolume identity, per candidate degree
        for (long d : ds) {
          Rat s(0);
          for (const auto& v : ints) s += v;
          for (const auto& v : fixed) s += v;
          Rat last = Rat(1) - s - Rat(a_f) * ss.covol / Rat(d);
          if (sgn(last) < 0) last = -last;
          if (is_integer(last) && k < 3) continue;  // free slots are non-integer
          std::array<Rat, 3> alpha;
          std::size_t idx = 0;
          for (const auto& v : ints) alpha[idx++] = v;
          for (const auto& v : fixed) alpha[idx++] = v;
          if (idx < 3) alpha[idx++] = last;
          if (idx != 3) continue;
          try_candidate(alpha, d);
        }
      };

      if (nfree == 0) {
        if (!sn.empty()) continue;
        for (long d : dcands) try_candidate({ints[0], ints[1], ints[2]}, d);
      } else if (nfree == 1) {
        finish({}, dcands);
      } else if (nfree == 2) {
        // the looped slot need not cover max(S_N) (the covol slot may)
        for (const auto& a1v : gammab) {
          auto ds = restrict_d(dcands, a1v);
          if (!ds.empty()) finish({a1v}, ds);
        }
      } else {
        // nfree == 3: the slot covering max(S_N) can be placed first, the
        // second slot ranges over the broad pool, the third comes from covol
        for (const auto& a1v : gamma1) {
          auto ds1 = restrict_d(dcands, a1v);
          if (ds1.empty()) continue;
          for (const auto& a2v : gammab) {
            auto ds2 = restrict_d(ds1, a2v);
            if (!ds2.empty()) finish({a1v, a2v}, ds2);
          }
        }
      }
    }
  }

  // deterministic order: degree, then denominator size, then value
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.d != b.d) return a.d < b.d;
    auto denlcm = [](const Candidate& c) {
      Int l = 1;
      for (const auto& v : c.alpha) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denom(v).get_mpz_t());
      return l;
    };
    Int la = denlcm(a), lb = denlcm(b);
    if (la != lb) return la < lb;
    return a.alpha < b.alpha;
  });
  return out;
}

}  // namespace hyp

#endif
