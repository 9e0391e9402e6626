#ifndef HYP_EXPFACTOR_HPP
#define HYP_EXPFACTOR_HPP

#include "hyp/candidates.hpp"

namespace hyp {

namespace detail {

// rational roots of a degree-2 indicial polynomial over a number field;
// empty unless the polynomial has rational coefficients after monicizing
inline std::vector<Rat> rational_indicial_roots(const UPoly<NFElem>& ind) {
  if (ind.deg() != 2) return {};
  NFElem ai = kinv(ind.c[2]);
  NFElem b = ind.c[1] * ai, cc = ind.c[0] * ai;
  if (b.r.deg() > 0 || cc.r.deg() > 0) return {};
  Rat rb = b.r.zero() ? Rat(0) : b.r.c[0];
  Rat rc = cc.r.zero() ? Rat(0) : cc.r.c[0];
  Rat disc = rb * rb - Rat(4) * rc;
  auto sq = rat_sqrt(disc);
  if (!sq) return {};
  Rat e1 = (-rb - *sq) / 2, e2 = (-rb + *sq) / 2;
  if (e1 > e2) std::swap(e1, e2);
  // an integer difference is absorbed by the polynomial part
  if (is_integer(e2 - e1) && e1 != e2) return {e1};
  if (e1 == e2) return {e1};
  return {e1, e2};
}

inline std::vector<Rat> rational_indicial_roots(const UPoly<Rat>& ind) {
  if (ind.deg() != 2) return {};
  Rat a = ind.c[2], b = ind.c[1] / a, cc = ind.c[0] / a;
  Rat disc = b * b - Rat(4) * cc;
  auto sq = rat_sqrt(disc);
  if (!sq) return {};
  Rat e1 = (-b - *sq) / 2, e2 = (-b + *sq) / 2;
  if (e1 > e2) std::swap(e1, e2);
  if (is_integer(e2 - e1) && e1 != e2) return {e1};
  if (e1 == e2) return {e1};
  return {e1, e2};
}

}  // namespace detail

// whether the operator has a nonzero polynomial solution of bounded degree;
// the bound comes from the integer indicial roots at infinity
inline bool has_polynomial_solution(const DiffOpQ& l) {
  if (l.zero()) return false;
  auto pinf = coeffs_at_infinity(l);
  auto dinf = local_data_at_zero(pinf, Rat(0));
  long dmax = -1;
  for (const Rat& rho : rational_roots(dinf.indicial()))
    if (is_integer(rho) && sgn(rho) <= 0) {
      long d = (long)floor_int(-rho).get_si();
      dmax = std::max(dmax, d);
    }
  if (dmax < 0) return false;
  auto pc = poly_coeffs(l);
  // image of x^i under sum pc[k] * d^k/dx^k
  long ord = (long)pc.size() - 1;
  long top = 0;
  for (const auto& p : pc) top = std::max(top, p.deg());
  std::size_t rows = (std::size_t)(dmax + top + 1);
  Mat<Rat> m(rows, Vec<Rat>(dmax + 1, Rat(0)));
  for (long i = 0; i <= dmax; ++i) {
    UPoly<Rat> xi = UPoly<Rat>::monomial(Rat(1), i);
    UPoly<Rat> img;
    UPoly<Rat> der = xi;
    for (long k = 0; k <= ord; ++k) {
      img += pc[k] * der;
      der = der.derivative();
    }
    for (long rrow = 0; rrow <= img.deg(); ++rrow) m[rrow][i] = img.c[rrow];
  }
  return !nullspace(m).empty();
}

// search for a first-order right factor Dx - r with r in Q(x): a solution
// exp(int r) = N * prod m_p^{e_p} with polynomial N and rational local
// exponents e_p at the finite singularities
inline bool has_exponential_right_factor(const DiffOpQ& l) {
  if (l.order() != 2) return false;
  auto pc = poly_coeffs(l);
  UPoly<Rat> content;
  for (const auto& p : pc)
    if (!p.zero()) content = content.zero() ? p : upoly_gcd(content, p);
  if (content.deg() > 0)
    for (auto& p : pc) p = p / content;
  DiffOpQ lp;
  lp.c.resize(pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) lp.c[i] = RatFunQ(pc[i]);

  std::vector<UPoly<Rat>> mps;
  std::vector<std::vector<Rat>> choices;
  for (const auto& fm : factor_rational(pc.back())) {
    std::vector<Rat> ch;
    if (fm.poly.deg() == 1) {
      Rat p = -fm.poly.c[0] / fm.poly.c[1];
      auto d = local_data_at_zero(coeffs_at_point(lp, p), Rat(0));
      ch = detail::rational_indicial_roots(d.indicial());
    } else {
      auto ctx = std::make_shared<const NFCtx>(fm.poly.monic());
      auto d = local_data_at_zero(coeffs_at_algebraic(lp, ctx), NFElem::from_rat(ctx, Rat(0)));
      ch = detail::rational_indicial_roots(d.indicial());
    }
    if (ch.empty()) return false;  // no admissible exponent at this place
    mps.push_back(fm.poly);
    choices.push_back(std::move(ch));
  }

  std::vector<std::size_t> pick(mps.size(), 0);
  while (true) {
    RatFunQ r0;
    for (std::size_t i = 0; i < mps.size(); ++i) {
      RatFunQ mp(mps[i]);
      r0 = r0 + RatFunQ(choices[i][pick[i]]) * (mp.derivative() / mp);
    }
    if (has_polynomial_solution(exp_product(lp, -r0))) return true;
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return false;
}

}  // namespace hyp

#endif
