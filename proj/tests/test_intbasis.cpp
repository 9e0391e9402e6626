#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/intbasis.hpp"

using namespace hyp;

namespace {

RatFunQ rf(const Rat& a) { return RatFunQ(a); }

DiffOpQ dx() { return DiffOpQ::dx(rf(Rat(1))); }

DiffOpQ example_gauge() {
  RatFunQ x = RatFunQ::x();
  UPoly<Rat> den1 = from_ints({0, 1}) * from_ints({-1, 4}) * from_ints({1, 4}) *
                    from_ints({1, 5, 24, 16});
  UPoly<Rat> den0 = from_ints({0, 0, 1}) * from_ints({-1, 4}) * from_ints({1, 4}) *
                    from_ints({1, 5, 24, 16});
  DiffOpQ l = dx() * dx();
  l = l - RatFunQ(from_ints({-1, -10, -88, -64, 384, 512}), den1) * dx();
  l = l + DiffOpQ::from_fun(RatFunQ(from_ints({-1, -8, -60, -128, 64, 512}), den0));
  return l;
}

IBElem paper_b0() {
  UPoly<Rat> den = from_ints({1, 5, 24, 16}) * from_ints({0, 1});
  IBElem e;
  e.b1 = RatFunQ(from_ints({0, 0, -1, 0, 16}), den);
  e.b0 = RatFunQ(UPoly<Rat>({Rat(Int("-2147483648")), Rat(Int("-10737418241")),
                             Rat(Int("-51539607556")), Rat(Int("-34359738400"))}),
                 den);
  return e;
}

IBElem paper_b1() {
  UPoly<Rat> den = from_ints({1, 5, 24, 16}) * from_ints({0, 1});
  IBElem e;
  e.b1 = RatFunQ(from_ints({0, -1, 0, 16}), den);
  e.b0 = RatFunQ(from_ints({-1, -4, -32}), den);
  return e;
}

// q0*A + q1*B = target with polynomial q's
bool in_module(const IBElem& target, const IBElem& a, const IBElem& b) {
  RatFunQ det = a.b0 * b.b1 - a.b1 * b.b0;
  if (det.zero()) return false;
  RatFunQ q0 = (target.b0 * b.b1 - target.b1 * b.b0) / det;
  RatFunQ q1 = (a.b0 * target.b1 - a.b1 * target.b0) / det;
  return q0.is_poly() && q1.is_poly();
}

bool module_equal(const std::array<IBElem, 2>& x, const std::array<IBElem, 2>& y) {
  return in_module(x[0], y[0], y[1]) && in_module(x[1], y[0], y[1]) &&
         in_module(y[0], x[0], x[1]) && in_module(y[1], x[0], x[1]);
}

std::vector<UPoly<Rat>> finite_place_minpolys(const DiffOpQ& l) {
  std::vector<UPoly<Rat>> out;
  for (const auto& fm : factor_rational(poly_coeffs(l).back())) out.push_back(fm.poly);
  return out;
}

}  // namespace

TEST_CASE("log point basis") {
  RatFunQ x = RatFunQ::x();
  DiffOpQ l = x * (dx() * dx()) + dx();  // solutions 1, log x
  auto ib = global_integral_basis(l);
  CHECK(ib.elems[0].b0 == rf(Rat(1)));
  CHECK(ib.elems[0].b1.zero());
  CHECK(ib.elems[1].b0.zero());
  CHECK(ib.elems[1].b1 == x);
}

TEST_CASE("regular operator keeps the trivial basis") {
  auto ib = global_integral_basis(dx() * dx());
  CHECK(ib.elems[0].b0 == rf(Rat(1)));
  CHECK(ib.elems[1].b1 == rf(Rat(1)));
}

TEST_CASE("half-integer exponents pull the derivation down") {
  RatFunQ x = RatFunQ::x();
  // solutions 1, x^(5/2)
  DiffOpQ l = (rf(Rat(2)) * x) * (dx() * dx()) - rf(Rat(3)) * dx();
  auto ib = global_integral_basis(l);
  CHECK(ib.elems[0].b0 == rf(Rat(1)));
  CHECK(ib.elems[0].b1.zero());
  CHECK(ib.elems[1].b0.zero());
  CHECK(ib.elems[1].b1 == rf(Rat(1)) / x);
  for (const auto& mp : finite_place_minpolys(l))
    for (const auto& e : ib.elems) {
      auto v = min_valuation_at(l, e, mp);
      if (v) CHECK(*v >= 0);
    }
}

TEST_CASE("integral basis of the gauge example") {
  DiffOpQ l = example_gauge();
  auto ib = global_integral_basis(l);
  for (const auto& mp : finite_place_minpolys(l))
    for (const auto& e : ib.elems) {
      auto v = min_valuation_at(l, e, mp);
      if (v) CHECK(*v >= 0);
    }
  CHECK(module_equal(ib.elems, {paper_b0(), paper_b1()}));

  auto nb = normalize_at_infinity(l, ib);
  CHECK(nb.normalized);
  CHECK(module_equal(nb.elems, {paper_b0(), paper_b1()}));
  for (const auto& mp : finite_place_minpolys(l))
    for (const auto& e : nb.elems) {
      auto v = min_valuation_at(l, e, mp);
      if (v) CHECK(*v >= 0);
    }
  // one normalized element is proportional to the paper's B1
  IBElem pb = paper_b1();
  bool prop = false;
  for (const auto& e : nb.elems) {
    if (e.b1.zero()) continue;
    RatFunQ c = e.b1 / pb.b1;
    if (c.is_poly() && c.num.deg() == 0 && e.b0 == c * pb.b0) prop = true;
  }
  CHECK(prop);
}

TEST_CASE("gauge driver solves the paper operator") {
  DiffOpQ l = example_gauge();
  auto sols = hypergeometricsols(l, SolveConfig{});
  REQUIRE(sols.size() == 1);
  const auto& s = sols[0];
  CHECK(s.certified);
  REQUIRE(s.gauge);
  CHECK(s.params.a1 == Rat(1, 2));
  CHECK(s.params.a2 == Rat(1, 2));
  CHECK(s.params.b1 == Rat(1));
  RatFunQ x = RatFunQ::x();
  CHECK(s.f == rf(Rat(16)) * x * x);
  CHECK(s.r.zero());
  // mapped-back solution agrees with the paper's up to one rational constant:
  // Y = r0*F + 8x*r1*F2 should match (4x^3+x^2+x/2)*F + (32x^5-2x^3)*F2
  RatFunQ w0 = RatFunQ(from_ints({0, 1, 2, 8})) * rf(Rat(1, 2));
  RatFunQ w1 = RatFunQ(from_ints({0, 0, 0, -2, 0, 32}));
  RatFunQ c = s.gauge->r0 / w0;
  CHECK(c.is_poly());
  CHECK(c.num.deg() == 0);
  CHECK(rf(Rat(8)) * x * s.gauge->r1 == c * w1);
}

TEST_CASE("direct short circuit") {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  DiffOpQ l = (rf(Rat(147)) * x * (x - one) * (x + one)) * (dx() * dx());
  l = l + (rf(Rat(266)) * x * x - rf(Rat(42)) * x - rf(Rat(98))) * dx();
  l = l + DiffOpQ::from_fun(rf(Rat(20)) * x - rf(Rat(5)));
  auto sols = hypergeometricsols(l, SolveConfig{});
  REQUIRE(sols.size() == 1);
  CHECK(!sols[0].gauge);
}
