#ifndef HYP_DIFFOP_HPP
#define HYP_DIFFOP_HPP

#include <optional>

#include "hyp/linalg.hpp"
#include "hyp/ratfun.hpp"

namespace hyp {

// Differential operator sum c[i] * Dx^i over K(x), with Dx*a = a*Dx + a'.
template <class K>
struct DiffOp {
  std::vector<RatFun<K>> c;

  DiffOp() = default;
  explicit DiffOp(std::vector<RatFun<K>> coeffs) : c(std::move(coeffs)) { trim(); }
  static DiffOp from_fun(RatFun<K> f) {
    DiffOp l;
    if (!f.zero()) l.c.push_back(std::move(f));
    return l;
  }
  static DiffOp dx(const RatFun<K>& like) {
    DiffOp l;
    l.c = {RatFun<K>(), kfrom_int(like, 1)};
    return l;
  }

  void trim() {
    while (!c.empty() && c.back().zero()) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  long order() const { return (long)c.size() - 1; }
  const RatFun<K>& lead() const {
    assert(!c.empty());
    return c.back();
  }
  RatFun<K> at(std::size_t i) const { return i < c.size() ? c[i] : RatFun<K>(); }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size() && i < b.c.size()) r.c[i] = a.c[i] + b.c[i];
      else if (i < a.c.size()) r.c[i] = a.c[i];
      else r.c[i] = b.c[i];
    }
    r.trim();
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  DiffOp operator-() const {
    DiffOp r = *this;
    for (auto& f : r.c) f = -f;
    return r;
  }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c == b.c; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a.c == b.c); }

  // left multiplication by a rational function
  friend DiffOp operator*(const RatFun<K>& f, const DiffOp& a) {
    DiffOp r = a;
    for (auto& x : r.c) x = f * x;
    r.trim();
    return r;
  }

  // Dx * this
  DiffOp dx_mul() const {
    DiffOp r;
    r.c.resize(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      r.c[i + 1] += c[i];
      r.c[i] += c[i].derivative();
    }
    r.trim();
    return r;
  }

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    DiffOp s = b;  // Dx^i * b
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (!a.c[i].zero()) r = r + a.c[i] * s;
      if (i + 1 < a.c.size()) s = s.dx_mul();
    }
    return r;
  }

  DiffOp monic() const {
    assert(!zero());
    return kinv(lead()) * *this;
  }
};

// A = Q*B + R with ord R < ord B.
template <class K>
std::pair<DiffOp<K>, DiffOp<K>> op_divrem(DiffOp<K> a, const DiffOp<K>& b) {
  assert(!b.zero());
  DiffOp<K> q;
  RatFun<K> bl_inv = kinv(b.lead());
  while (!a.zero() && a.order() >= b.order()) {
    long d = a.order() - b.order();
    RatFun<K> f = a.lead() * bl_inv;
    DiffOp<K> term;
    term.c.assign(d + 1, RatFun<K>());
    term.c[d] = f;
    q = q + term;
    a = a - term * b;
  }
  return {q, a};
}

// greatest common right divisor
template <class K>
DiffOp<K> op_gcrd(DiffOp<K> a, DiffOp<K> b) {
  while (!b.zero()) {
    auto r = op_divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.zero() ? a : a.monic();
}

// extended Euclid: g = gcrd(a, b) = u*a + v*b
template <class K>
void op_ext_gcrd(DiffOp<K> a, DiffOp<K> b, DiffOp<K>& g, DiffOp<K>& u, DiffOp<K>& v) {
  DiffOp<K> u0 = DiffOp<K>::from_fun(RatFun<K>(kfrom_int(K{}, 1))), u1;
  DiffOp<K> v0, v1 = u0;
  while (!b.zero()) {
    auto [q, r] = op_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    DiffOp<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!a.zero()) {
    RatFun<K> li = kinv(a.lead());
    g = li * a;
    u = li * u0;
    v = li * v0;
  } else {
    g = a; u = u0; v = v0;
  }
}

// least common left multiple: the minimal operator vanishing on the
// solutions of both a and b
template <class K>
DiffOp<K> op_lclm(DiffOp<K> a, DiffOp<K> b) {
  DiffOp<K> u0 = DiffOp<K>::from_fun(RatFun<K>(kfrom_int(K{}, 1))), u1;
  DiffOp<K> a0 = a;
  while (!b.zero()) {
    auto [q, r] = op_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    DiffOp<K> u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return (u1 * a0).monic();
}

using DiffOpQ = DiffOp<Rat>;

// Clear denominators: L scaled to coprime polynomial coefficients over Z.
inline std::vector<UPoly<Rat>> poly_coeffs(const DiffOpQ& l) {
  UPoly<Rat> den(Rat(1));
  for (const auto& f : l.c) den = (den * f.den) / upoly_gcd(den, f.den);
  std::vector<UPoly<Rat>> out;
  out.reserve(l.c.size());
  for (const auto& f : l.c) out.push_back(f.num * (den / f.den));
  // make integer and primitive jointly
  Int scale_den = 1, scale_num = 0;
  for (const auto& p : out)
    for (const auto& coeff : p.c)
      mpz_lcm(scale_den.get_mpz_t(), scale_den.get_mpz_t(), denom(coeff).get_mpz_t());
  for (const auto& p : out)
    for (const auto& coeff : p.c) {
      Int n = numer(coeff) * (scale_den / denom(coeff));
      mpz_gcd(scale_num.get_mpz_t(), scale_num.get_mpz_t(), n.get_mpz_t());
    }
  if (scale_num == 0) scale_num = 1;
  Rat s(scale_den, scale_num);
  s.canonicalize();
  for (auto& p : out) p = s * p;
  return out;
}

// substitute x -> f in every coefficient and Dx -> (1/f') Dx, giving the
// operator whose solutions are y(f(x)) for solutions y of l
inline DiffOpQ change_of_variables(const DiffOpQ& l, const RatFunQ& f) {
  RatFunQ fp = f.derivative();
  assert(!fp.zero());
  DiffOpQ d;  // (1/f') Dx
  d.c = {RatFunQ(), kinv(fp)};
  auto embed = [](const Rat& a) { return RatFunQ(a); };
  DiffOpQ r, dk = DiffOpQ::from_fun(RatFunQ(Rat(1)));
  for (std::size_t i = 0; i < l.c.size(); ++i) {
    if (!l.c[i].zero()) {
      RatFunQ ai = l.c[i].num.eval_map(f, embed) / l.c[i].den.eval_map(f, embed);
      r = r + ai * dk;
    }
    if (i + 1 < l.c.size()) dk = d * dk;
  }
  return r;
}

// substitute Dx -> Dx - r: if y solves l then exp(int r)*y solves the result
inline DiffOpQ exp_product(const DiffOpQ& l, const RatFunQ& r) {
  DiffOpQ p;  // Dx - r
  p.c = {-r, RatFunQ(Rat(1))};
  DiffOpQ out;
  for (std::size_t i = l.c.size(); i-- > 0;) {
    out = out * p;
    out = out + DiffOpQ::from_fun(l.c[i]);
  }
  return out;
}

// operator G = r0 + r1*Dx acting on solutions
struct GaugeOp {
  RatFunQ r0, r1;

  DiffOpQ as_op() const {
    DiffOpQ g;
    g.c = {r0, r1};
    g.trim();
    return g;
  }
  bool is_identity() const { return r1.zero() && is_one(r0); }
};

// minimal operator annihilating G(y) for all solutions y of l (order 2)
inline DiffOpQ gauge_transform(const DiffOpQ& l, const GaugeOp& g) {
  DiffOpQ gop = g.as_op();
  assert(!gop.zero());
  DiffOpQ lm = l.monic();
  // reduce Dx^k * G mod l, find a linear dependence
  std::vector<DiffOpQ> reds;
  DiffOpQ cur = op_divrem(gop, lm).second;
  for (long k = 0; k <= l.order(); ++k) {
    reds.push_back(cur);
    cur = op_divrem(cur.dx_mul(), lm).second;
    // try dependence among reds
    std::size_t m = reds.size();
    Mat<RatFunQ> a((std::size_t)l.order(), Vec<RatFunQ>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (long i = 0; i < l.order(); ++i) a[i][j] = reds[j].at(i);
    auto ker = nullspace(a);
    if (!ker.empty()) {
      // choose the kernel vector with nonzero top coefficient
      for (const auto& v : ker) {
        if (v.back().zero()) continue;
        DiffOpQ out;
        out.c.assign(m, RatFunQ());
        for (std::size_t j = 0; j < m; ++j) out.c[j] = v[j];
        out.trim();
        return out.monic();
      }
    }
  }
  assert(false && "gauge_transform: no relation found");
  return DiffOpQ();
}

// operator H with H*G = 1 mod l; maps G(y) back to y on solutions of l.
// exists when gcrd(G, l) = 1
inline std::optional<GaugeOp> inverse_gauge(const DiffOpQ& l, const GaugeOp& g) {
  DiffOpQ gop = g.as_op(), gg, u, v;
  op_ext_gcrd(l, gop, gg, u, v);
  if (gg.order() != 0) return std::nullopt;
  // gg = u*l + v*gop = 1 after monic normalization; H = v mod l
  DiffOpQ h = op_divrem(v, l.monic()).second;
  GaugeOp out;
  out.r0 = h.at(0);
  out.r1 = h.at(1);
  return out;
}

}  // namespace hyp

#endif
