#include "hyp/cli.hpp"
#include "hyp/factor.hpp"

namespace hyp {

std::string render_rat(const Rat& a) { return a.get_str(); }

namespace {

long nonzero_terms(const UPoly<Rat>& p) {
  long n = 0;
  for (const auto& c : p.c)
    if (!is_zero(c)) ++n;
  return n;
}

std::string monomial_str(const Rat& mag, long k) {
  std::string s;
  if (k == 0) return render_rat(mag);
  if (!is_one(mag)) s = render_rat(mag) + "*";
  s += "x";
  if (k >= 2) s += "^" + std::to_string(k);
  return s;
}

// magnitude string safe inside a product, with the sign returned separately
std::pair<bool, std::string> coeff_abs(const RatFunQ& f) {
  bool neg = sgn(f.num.lead()) < 0;
  UPoly<Rat> num = neg ? -f.num : f.num;
  if (f.den.deg() == 0) {
    std::string s = render_poly(num);
    if (nonzero_terms(num) > 1) s = "(" + s + ")";
    return {neg, s};
  }
  return {neg, "(" + render_poly(num) + ")/(" + render_poly(f.den) + ")"};
}

}  // namespace

std::string render_poly(const UPoly<Rat>& p) {
  if (p.zero()) return "0";
  std::string out;
  for (long k = p.deg(); k >= 0; --k) {
    const Rat& c = p.at(k);
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    std::string term = monomial_str(rat_abs(c), k);
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::string render_ratfun(const RatFunQ& f) {
  if (f.zero()) return "0";
  if (f.den.deg() == 0) return render_poly(f.num);
  return "(" + render_poly(f.num) + ")/(" + render_poly(f.den) + ")";
}

std::string render_operator(const DiffOpQ& l) {
  if (l.zero()) return "0";
  std::string out;
  for (long i = l.order(); i >= 0; --i) {
    RatFunQ c = l.at(i);
    if (c.zero()) continue;
    auto [neg, mag] = coeff_abs(c);
    std::string term;
    if (i == 0) term = mag;
    else {
      std::string dxs = i == 1 ? "Dx" : "Dx^" + std::to_string(i);
      term = is_one(c) || (neg && is_one(-c)) ? dxs : mag + "*" + dxs;
    }
    if (out.empty()) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

std::pair<RatFunQ, RatFunQ> quadfun_to_f_basis(const QuadFun& r,
                                               const std::array<UPoly<Rat>, 3>& mp) {
  // z = 2*A2*f + A1, so a + b*z = (a + b*A1) + (2*A2*b)*f
  RatFunQ a1(mp[1]), a2(mp[2]);
  return {r.a + r.b * a1, RatFunQ(Rat(2)) * a2 * r.b};
}

std::string render_quadfun_in_f(const QuadFun& r, const std::array<UPoly<Rat>, 3>& mp) {
  auto [base, fcoeff] = quadfun_to_f_basis(r, mp);
  if (fcoeff.zero()) return render_ratfun(base);
  std::string fpart = "(" + render_ratfun(fcoeff) + ")*f";
  if (base.zero()) return fpart;
  return "(" + render_ratfun(base) + ") + " + fpart;
}

std::optional<std::vector<PrefactorPart>> prefactor_parts(const RatFunQ& r) {
  std::vector<PrefactorPart> parts;
  if (r.zero()) return parts;
  if (r.den.deg() == 0) return std::nullopt;  // nonzero polynomial part
  if (r.num.deg() >= r.den.deg()) return std::nullopt;
  if (upoly_gcd(r.den, r.den.derivative()).deg() > 0) return std::nullopt;  // repeated pole
  UPoly<Rat> sum;
  for (const auto& fm : factor_rational(r.den)) {
    UPoly<Rat> pm = fm.poly.monic();
    UPoly<Rat> q = r.den / pm;
    UPoly<Rat> t = UPoly<Rat>::divrem(pm.derivative() * q, pm).second;
    UPoly<Rat> n = UPoly<Rat>::divrem(r.num, pm).second;
    if (t.zero()) return std::nullopt;
    long i = t.deg();
    Rat c = n.at(i) / t.at(i);
    if (n != c * t) return std::nullopt;
    if (!is_zero(c)) parts.push_back({fm.poly, c});
    sum = sum + c * (pm.derivative() * q);
  }
  if (sum != r.num) return std::nullopt;
  return parts;
}

std::string render_prefactor(const RatFunQ& r) {
  if (r.zero()) return "1";
  auto parts = prefactor_parts(r);
  if (!parts) return "exp(Int(" + render_ratfun(r) + ", x))";
  if (parts->empty()) return "1";
  std::string out;
  for (const auto& pt : *parts) {
    if (!out.empty()) out += "*";
    out += "(" + render_poly(pt.base) + ")";
    if (!is_one(pt.exponent)) out += "^(" + render_rat(pt.exponent) + ")";
  }
  return out;
}

namespace {

std::string render_params(const GHDOParams& p, long shift) {
  Rat s(shift);
  return render_rat(p.a1 + s) + "," + render_rat(p.a2 + s) + ";" + render_rat(p.b1 + s);
}

std::string hyp2f1(const GHDOParams& p, long shift, const std::string& arg) {
  return "2F1(" + render_params(p, shift) + "; " + arg + ")";
}

}  // namespace

std::string render_solution(const HypSolution& s) {
  std::string out;
  if (s.algebraic) {
    out = "f defined by (" + render_poly(s.minpoly[2]) + ")*f^2 + (" + render_poly(s.minpoly[1]) +
          ")*f + (" + render_poly(s.minpoly[0]) + ") = 0, branch f = (-A1 " +
          (s.plus_branch ? "+" : "-") + " sqrt(A1^2 - 4*A2*A0))/(2*A2)\n";
    std::string rstr = render_quadfun_in_f(s.r_alg, s.minpoly);
    std::string pre = s.r_alg.zero() ? "" : "exp(Int(" + rstr + ", x)) * ";
    if (s.gauge) {
      out += "F = " + pre + hyp2f1(s.params, 0, "f") + "\n";
      out += "y = (" + render_ratfun(s.gauge->r0) + ")*F + (" + render_ratfun(s.gauge->r1) +
             ")*F'";
    } else {
      out += "y = " + pre + hyp2f1(s.params, 0, "f");
    }
    return out;
  }
  std::string arg = render_ratfun(s.f);
  if (s.f.den.deg() == 0 && nonzero_terms(s.f.num) > 1) arg = "(" + arg + ")";
  std::string pre = render_prefactor(s.r);
  if (!s.gauge) {
    out = "y = ";
    if (pre != "1") out += pre + " * ";
    out += hyp2f1(s.params, 0, arg);
    return out;
  }
  // derivative of the prefactored 2F1 via the contiguous identity:
  // F' = P*(r*G + f'*(a1*a2/b1)*G1) with G1 the parameter-shifted 2F1
  RatFunQ w0 = s.gauge->r0 + s.gauge->r1 * s.r;
  RatFunQ w1 = s.gauge->r1 * s.f.derivative() * RatFunQ(s.params.a1 * s.params.a2 / s.params.b1);
  out = "y = ";
  if (pre != "1") out += pre + " * ( ";
  out += "(" + render_ratfun(w0) + ") * " + hyp2f1(s.params, 0, arg);
  if (!w1.zero())
    out += " + (" + render_ratfun(w1) + ") * " + hyp2f1(s.params, 1, arg);
  if (pre != "1") out += " )";
  return out;
}

}  // namespace hyp
