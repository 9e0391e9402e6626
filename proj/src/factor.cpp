#include "hyp/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace hyp {

namespace {

using PZ = UPoly<Rat>;  // integer coefficients assumed where noted
using PF = UPoly<Fp>;

PF reduce_poly(const PZ& f, std::uint64_t l) {
  std::vector<Fp> c;
  c.reserve(f.c.size());
  for (const auto& a : f.c) c.push_back(Fp::from_int(numer(a), l));
  return PF(std::move(c));
}

PF pow_mod(const PF& a, Int e, const PF& m) {
  PF r(Fp(1, m.lead().p));
  PF b = a % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

std::mt19937_64 rng(0x5eed);

PF random_poly(long deg, std::uint64_t l) {
  std::vector<Fp> c(deg + 1);
  for (auto& x : c) x = Fp(rng() % l, l);
  if (is_zero(c.back())) c.back() = Fp(1, l);
  return PF(std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus); f is a squarefree monic
// product of irreducibles of degree d.
void equal_degree(const PF& f, long d, std::vector<PF>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  std::uint64_t l = f.lead().p;
  Int e = (int_pow(Int((unsigned long)l), d) - 1) / 2;
  while (true) {
    PF r = random_poly(2 * d, l);
    PF g = upoly_gcd(f, r);
    if (g.deg() <= 0 || g.deg() >= f.deg()) {
      PF h = pow_mod(r, e, f) - PF(Fp(1, l));
      g = upoly_gcd(f, h);
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, out);
      equal_degree((f / g).monic(), d, out);
      return;
    }
  }
}

std::vector<PF> factor_mod(const PF& f0) {
  std::vector<PF> out;
  PF f = f0.monic();
  std::uint64_t l = f.lead().p;
  PF x = PF::x(Fp(0, l));
  PF h = x;
  long d = 0;
  while (f.deg() > 0) {
    ++d;
    if (2 * d > f.deg()) {
      out.push_back(f.monic());
      break;
    }
    h = pow_mod(h, Int((unsigned long)l), f);
    PF g = upoly_gcd(f, h - x);
    if (g.deg() > 0) {
      equal_degree(g, d, out);
      f = (f / g).monic();
      h = h % f;
    }
  }
  return out;
}

Int coeff_bound(const PZ& f) {
  // Mignotte-style: 2^(n+1) * l2norm(f)
  Int s = 0;
  for (const auto& c : f.c) s += numer(c) * numer(c);
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  r += 1;
  return (r << (unsigned long)(f.deg() + 1));
}

Int smod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

PZ lift_sym(const PZ& f, const Int& m) {
  std::vector<Rat> c;
  c.reserve(f.c.size());
  for (const auto& a : f.c) c.emplace_back(smod(numer(a), m));
  return PZ(std::move(c));
}

PZ mulmod(const PZ& a, const PZ& b, const Int& m) { return lift_sym(a * b, m); }

// One quadratic Hensel step: f = g*h and s*g + t*h = 1 mod m, with h monic;
// updates everything to hold mod m^2.
void hensel_step(const PZ& f, PZ& g, PZ& h, PZ& s, PZ& t, const Int& m) {
  Int m2 = m * m;
  auto div_monic = [&](const PZ& a, const PZ& b) {
    PZ q, r = a;
    while (!r.zero() && r.deg() >= b.deg()) {
      PZ term = PZ::monomial(r.lead(), r.deg() - b.deg());
      q += term;
      r = lift_sym(r - term * b, m2);
    }
    return std::pair<PZ, PZ>(q, r);
  };
  PZ e = lift_sym(f - g * h, m2);
  auto [q, r] = div_monic(mulmod(s, e, m2), h);
  g = lift_sym(g + mulmod(t, e, m2) + mulmod(q, g, m2), m2);
  h = lift_sym(h + r, m2);
  PZ b = lift_sym(s * g + t * h - PZ(Rat(1)), m2);
  auto [c, d] = div_monic(mulmod(s, b, m2), h);
  s = lift_sym(s - d, m2);
  t = lift_sym(t - mulmod(t, b, m2) - mulmod(c, g, m2), m2);
}

// Lift the modular factorization of monic f (exact over Z) from mod l to a
// modulus >= target. facs enter reduced mod l and leave lifted.
void multifactor_lift(const PZ& f, std::vector<PZ>& facs, std::uint64_t l, const Int& target) {
  if (facs.size() == 1) {
    facs[0] = f;
    return;
  }
  Int lz((unsigned long)l);
  std::size_t half = facs.size() / 2;
  PZ g(Rat(1)), h(Rat(1));
  for (std::size_t i = 0; i < half; ++i) g = lift_sym(g * facs[i], lz);
  for (std::size_t i = half; i < facs.size(); ++i) h = lift_sym(h * facs[i], lz);
  PF gf = reduce_poly(g, l), hf = reduce_poly(h, l), gg, sf, tf;
  upoly_ext_gcd(gf, hf, gg, sf, tf);
  auto to_z = [&](const PF& p) {
    std::vector<Rat> c;
    for (const auto& a : p.c) c.emplace_back(smod(Int((unsigned long)a.v), lz));
    return PZ(std::move(c));
  };
  PZ s = to_z(sf), t = to_z(tf);
  Int m = lz;
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m = m * m;
  }
  std::vector<PZ> left(facs.begin(), facs.begin() + half);
  std::vector<PZ> right(facs.begin() + half, facs.end());
  multifactor_lift(g, left, l, target);
  multifactor_lift(h, right, l, target);
  facs = std::move(left);
  facs.insert(facs.end(), right.begin(), right.end());
}

// Primitive squarefree integer polynomial with positive lead.
std::vector<PZ> factor_squarefree_z(const PZ& f) {
  long n = f.deg();
  if (n <= 1) return {f};
  Int lc = numer(f.lead());

  // Monicize: F(x) = lc^(n-1) f(x/lc), monic with integer coefficients.
  PZ F;
  {
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    Int p = 1;
    for (long i = n - 1; i >= 0; --i) {
      c[i] = f.at(i) * Rat(p);
      p *= lc;
    }
    F = PZ(std::move(c));
  }

  static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                         41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
                                         89, 97, 101, 103, 107, 109, 113, 127};
  std::uint64_t best_l = 0;
  std::vector<PF> best;
  int tried = 0;
  for (std::uint64_t l : primes) {
    PF Fl = reduce_poly(F, l);
    if (Fl.deg() != n) continue;
    if (upoly_gcd(Fl, Fl.derivative()).deg() != 0) continue;
    auto facs = factor_mod(Fl);
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_l = l;
    }
    if (best.size() == 1) break;
    if (++tried >= 4) break;
  }
  if (best.empty()) throw std::runtime_error("no usable factoring prime");
  if (best.size() == 1) return {f};

  Int target = 2 * coeff_bound(F) + 1;
  Int lz((unsigned long)best_l);
  std::vector<PZ> lifted;
  for (auto& b : best) {
    PF bm = b.monic();
    std::vector<Rat> c;
    for (const auto& a : bm.c) c.emplace_back(smod(Int((unsigned long)a.v), lz));
    lifted.emplace_back(std::move(c));
  }
  multifactor_lift(F, lifted, best_l, target);
  Int m = lz;
  while (m < target) m = m * m;

  // Subset recombination with exact trial division.
  std::vector<PZ> resultF;
  std::vector<int> alive(lifted.size(), 1);
  PZ rem = F;
  std::size_t k = 1;
  while (true) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (alive[i]) idx.push_back(i);
    if (2 * k > idx.size()) break;
    std::vector<std::size_t> comb(k);
    bool found = false;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
      if (pos == k) {
        PZ cand(Rat(1));
        for (std::size_t j = 0; j < k; ++j) cand = lift_sym(cand * lifted[comb[j]], m);
        auto [q, r] = PZ::divrem(rem, cand);
        if (!r.zero()) return false;
        for (const auto& c : q.c)
          if (denom(c) != 1) return false;
        resultF.push_back(cand);
        rem = q;
        for (std::size_t j = 0; j < k; ++j) alive[comb[j]] = 0;
        return true;
      }
      for (std::size_t i = start; i < idx.size(); ++i) {
        comb[pos] = idx[i];
        if (rec(pos + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0))
      found = true;
    if (!found) ++k;
  }
  if (rem.deg() > 0) resultF.push_back(rem);

  // Map factors of F back: g(x) -> primitive part of g(lc*x).
  std::vector<PZ> out;
  for (const auto& g : resultF) {
    if (lc == 1) {
      out.push_back(primitive_int(g));
      continue;
    }
    std::vector<Rat> c(g.c.size());
    Int p = 1;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      c[i] = g.c[i] * Rat(p);
      p *= lc;
    }
    out.push_back(primitive_int(PZ(std::move(c))));
  }
  return out;
}

}  // namespace

std::vector<UPoly<Rat>> squarefree_parts(const UPoly<Rat>& f0) {
  // Yun's algorithm
  std::vector<PZ> parts;
  PZ f = primitive_int(f0);
  if (f.deg() < 1) return parts;
  PZ fp = f.derivative();
  PZ g = upoly_gcd(f, fp);
  PZ w = f / g, y = fp / g;
  while (w.deg() > 0) {
    PZ z = y - w.derivative();
    PZ p = upoly_gcd(w, z);
    parts.push_back(primitive_int(p));
    w = w / p;
    y = z / p;
  }
  return parts;
}

std::vector<FactorMult> factor_rational(const UPoly<Rat>& f0) {
  std::vector<FactorMult> out;
  PZ f = primitive_int(f0);
  if (f.deg() < 1) return out;
  auto parts = squarefree_parts(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].deg() < 1) continue;
    for (const auto& irr : factor_squarefree_z(primitive_int(parts[i])))
      if (irr.deg() >= 1) out.push_back({primitive_int(irr), (long)i + 1});
  }
  return out;
}

bool is_irreducible(const UPoly<Rat>& f) {
  auto fs = factor_rational(f);
  return fs.size() == 1 && fs[0].mult == 1 && fs[0].poly.deg() == f.deg();
}

std::vector<Rat> rational_roots(const UPoly<Rat>& f) {
  std::vector<Rat> roots;
  for (const auto& fm : factor_rational(f))
    if (fm.poly.deg() == 1) roots.push_back(-fm.poly.c[0] / fm.poly.c[1]);
  return roots;
}

}  // namespace hyp
