#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/frobenius.hpp"

using namespace hyp;

namespace {

RatFunQ rf(const Rat& a) { return RatFunQ(a); }

DiffOpQ dx() { return DiffOpQ::dx(rf(Rat(1))); }

// x(1-x)Dx^2 + (b1 - (a1+a2+1)x)Dx - a1*a2
DiffOpQ ghdo(const Rat& a1, const Rat& a2, const Rat& b1) {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  DiffOpQ l = (x * (one - x)) * (dx() * dx());
  l = l + (rf(b1) - rf(a1 + a2 + 1) * x) * dx();
  l = l - DiffOpQ::from_fun(rf(a1 * a2));
  return l;
}

Rat pochhammer(const Rat& a, long n) {
  Rat r(1);
  for (long k = 0; k < n; ++k) r *= a + Rat(k);
  return r;
}

// multiply a series by a polynomial, same precision
Series<Rat> pmul(const UPoly<Rat>& p, const Series<Rat>& s) {
  Series<Rat> ps(s.prec(), Rat(0));
  for (long i = 0; i <= p.deg() && i < s.prec(); ++i) ps.c[i] = p.c[i];
  return ps * s;
}

// x^2 * L(A*log x + B) must vanish for a solution; returns the two parts
// (log coefficient, pure part) of x^2*L, both series
std::pair<Series<Rat>, Series<Rat>> apply_log(const std::vector<UPoly<Rat>>& p,
                                              const Series<Rat>& A, const Series<Rat>& B) {
  long n = A.prec();
  Series<Rat> x(n, Rat(0));
  if (n > 1) x.c[1] = Rat(1);
  auto L2 = [&](const Series<Rat>& s) {
    // x^2 * (p0 s + p1 s' + p2 s'')
    Series<Rat> r(n, Rat(0));
    if (p.size() > 0) r += x * x * pmul(p[0], s);
    if (p.size() > 1) r += x * x * pmul(p[1], s.derivative());
    if (p.size() > 2) r += x * x * pmul(p[2], s.derivative().derivative());
    return r;
  };
  // x^2 * R(A) with R(A) = (p1/x - p2/x^2) A + (2 p2/x) A'
  Series<Rat> r(n, Rat(0));
  if (p.size() > 1) r += x * pmul(p[1], A);
  if (p.size() > 2) r = r - pmul(p[2], A) + Rat(2) * (x * pmul(p[2], A.derivative()));
  return {L2(A), r + L2(B)};
}

}  // namespace

TEST_CASE("indicial data of the GHDO") {
  DiffOpQ l = ghdo(Rat(5, 42), Rat(11, 42), Rat(2, 3));
  auto p = poly_coeffs(l);
  auto d = local_data_at_zero(p, Rat(0));
  CHECK(d.nu == -1);
  // indicial roots 0 and 1 - b1 = 1/3
  CHECK(is_zero(d.indicial().eval(Rat(0))));
  CHECK(is_zero(d.indicial().eval(Rat(1, 3))));
  CHECK(!is_zero(d.indicial().eval(Rat(1))));
}

TEST_CASE("2F1 series from the Frobenius recurrence") {
  Rat a1(5, 42), a2(11, 42), b1(2, 3);
  DiffOpQ l = ghdo(a1, a2, b1);
  auto pair = formal_solutions(poly_coeffs(l), 8);
  CHECK(pair.e_low == Rat(0));
  CHECK(pair.e_high == Rat(1, 3));
  CHECK(!pair.log_case);
  for (long n = 0; n < 8; ++n) {
    Rat expect = pochhammer(a1, n) * pochhammer(a2, n) /
                 (pochhammer(b1, n) * pochhammer(Rat(1), n));
    CHECK(pair.u_low.at(n) == expect);
  }
  // second exponent: x^(1/3) 2F1(a1+1/3, a2+1/3; 4/3; x)
  for (long n = 0; n < 8; ++n) {
    Rat expect = pochhammer(a1 + Rat(1, 3), n) * pochhammer(a2 + Rat(1, 3), n) /
                 (pochhammer(Rat(4, 3), n) * pochhammer(Rat(1), n));
    CHECK(pair.u_high.at(n) == expect);
  }
}

TEST_CASE("classification at the GHDO singularities") {
  Rat a1(5, 42), a2(11, 42), b1(2, 3);
  DiffOpQ l = ghdo(a1, a2, b1);
  auto c0 = classify_rational_place(coeffs_at_point(l, Rat(0)));
  CHECK(c0.delta == Rat(1, 3));
  CHECK(c0.true_sing);
  auto c1 = classify_rational_place(coeffs_at_point(l, Rat(1)));
  CHECK(c1.delta == Rat(2, 7));
  auto ci = classify_rational_place(coeffs_at_infinity(l));
  CHECK(ci.delta == Rat(1, 7));
}

TEST_CASE("false singularity") {
  // x*Dx^2 - Dx kills {1, x^2}: delta 2, no log, removable
  RatFunQ x = RatFunQ::x();
  DiffOpQ l = x * (dx() * dx()) - dx();
  auto c = classify_rational_place(coeffs_at_point(l, Rat(0)));
  CHECK(c.delta == Rat(2));
  CHECK(!c.is_log);
  CHECK(!c.true_sing);
}

TEST_CASE("ordinary point classifies as false") {
  DiffOpQ l = dx() * dx() - DiffOpQ::from_fun(rf(Rat(1)));
  auto c = classify_rational_place(coeffs_at_point(l, Rat(5)));
  CHECK(c.delta == Rat(1));
  CHECK(!c.true_sing);
}

TEST_CASE("pure log point") {
  // x*Dx^2 + Dx kills {1, log x}
  RatFunQ x = RatFunQ::x();
  DiffOpQ l = x * (dx() * dx()) + dx();
  auto c = classify_rational_place(coeffs_at_point(l, Rat(0)));
  CHECK(c.delta == Rat(0));
  CHECK(c.is_log);
  auto pair = formal_solutions(coeffs_at_point(l, Rat(0)), 8);
  CHECK(pair.log_case);
  CHECK(pair.u_high.at(0) == Rat(1));
  for (long i = 1; i < 8; ++i) CHECK(pair.u_high.at(i) == Rat(0));
  CHECK(pair.h.is_zero_series());
}

TEST_CASE("log solution of x*y'' + y' - y = 0") {
  RatFunQ x = RatFunQ::x();
  DiffOpQ l = x * (dx() * dx()) + dx() - DiffOpQ::from_fun(rf(Rat(1)));
  auto p = poly_coeffs(l);
  auto c = classify_rational_place(p);
  CHECK(c.delta == Rat(0));
  CHECK(c.is_log);
  long n = 12;
  auto pair = formal_solutions(p, n);
  REQUIRE(pair.log_case);
  // u_high is sum x^k/(k!)^2
  for (long k = 0; k < n; ++k) {
    Rat f(1);
    for (long j = 1; j <= k; ++j) f *= Rat(j);
    CHECK(pair.u_high.at(k) == Rat(1) / (f * f));
  }
  CHECK(pair.h.at(0) == Rat(0));
  // verify y = U*log x + g solves the equation, where g = h*U
  auto g = pair.h * pair.u_high;
  auto [logpart, purepart] = apply_log(p, pair.u_high, g);
  for (long k = 0; k < n; ++k) {
    CHECK(logpart.at(k) == Rat(0));
    CHECK(purepart.at(k) == Rat(0));
  }
}

TEST_CASE("log_occurs at integer delta > 0") {
  RatFunQ x = RatFunQ::x();
  // x*Dx^2 kills {1, x}: delta 1, no log
  auto c = classify_rational_place(poly_coeffs(x * (dx() * dx())));
  CHECK(c.delta == Rat(1));
  CHECK(!c.is_log);
  // x*Dx^2 + x*Dx + 1: indicial roots 0 and 1, obstruction P_1(0) = 1 != 0
  DiffOpQ l = x * (dx() * dx()) + x * dx() + DiffOpQ::from_fun(rf(Rat(1)));
  auto cl = classify_rational_place(poly_coeffs(l));
  CHECK(cl.delta == Rat(1));
  CHECK(cl.is_log);
  CHECK(cl.true_sing);
}

TEST_CASE("algebraic place classification") {
  RatFunQ x = RatFunQ::x();
  // (x^2+1)Dx^2 + x*Dx: indicial at the roots of x^2+1 is 2t*s(s-1) + t*s,
  // roots 0 and 1/2
  DiffOpQ l = (x * x + RatFunQ(Rat(1))) * (dx() * dx()) + x * dx();
  auto ctx = std::make_shared<const NFCtx>(from_ints({1, 0, 1}));
  auto pc = coeffs_at_algebraic(l, ctx);
  auto c = classify_algebraic_place(pc, ctx);
  CHECK(c.rational_delta);
  CHECK(c.delta == Rat(1, 2));
  CHECK(c.true_sing);
}

TEST_CASE("irrational exponent difference detected") {
  RatFunQ x = RatFunQ::x();
  // x^2*Dx^2 - 2: indicial s(s-1) - 2*x^0... exponents (1 +- sqrt(1+8))/2 -> 2, -1
  // use x^2*Dx^2 - 1 instead: s^2 - s - 1, irrational roots
  DiffOpQ l = (x * x) * (dx() * dx()) - DiffOpQ::from_fun(rf(Rat(1)));
  auto c = classify_rational_place(poly_coeffs(l));
  CHECK(!c.rational_delta);
}
