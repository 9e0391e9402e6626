#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/quotient.hpp"

using namespace hyp;

namespace {

RatFunQ rf(const Rat& a) { return RatFunQ(a); }

DiffOpQ dx() { return DiffOpQ::dx(rf(Rat(1))); }

// 147x(x-1)(x+1)Dx^2 + (266x^2-42x-98)Dx + (20x-5)
DiffOpQ example_rational() {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  DiffOpQ l = (rf(Rat(147)) * x * (x - one) * (x + one)) * (dx() * dx());
  l = l + (rf(Rat(266)) * x * x - rf(Rat(42)) * x - rf(Rat(98))) * dx();
  l = l + DiffOpQ::from_fun(rf(Rat(20)) * x - rf(Rat(5)));
  return l;
}

// Dx^2 + (x^4-44x^3+1206x^2-44x+1)/(4x^2(x^2-34x+1)^2)
DiffOpQ example_algebraic() {
  RatFunQ x = RatFunQ::x();
  UPoly<Rat> q = from_ints({1, -44, 1206, -44, 1});
  UPoly<Rat> s = from_ints({1, -34, 1});
  DiffOpQ l = dx() * dx();
  l = l + DiffOpQ::from_fun(RatFunQ(Rat(1, 4) * q, from_ints({0, 0, 1}) * s * s));
  return l;
}

// operator with gauge-only solutions
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

}  // namespace

TEST_CASE("self quotient recovers the identity pullback at level one") {
  auto base = ghdo_from_triple({Rat(1, 3), Rat(2, 7), Rat(1, 7)});
  REQUIRE(base);
  auto pcb = poly_coeffs(base->op());
  auto qd = build_quotients(pcb, pcb, 1, 1, 14, false);
  auto hits = sweep_c(qd, 4099, 1);
  bool found = false;
  for (const auto& hit : hits) {
    if (hit.c0 != 1) continue;
    found = true;
    CHECK(hit.num.deg() == 1);
    CHECK(is_one(hit.num.c[1]));
    CHECK(is_zero(hit.num.at(0)));
    CHECK(hit.den.deg() == 0);
    auto f = lift_rational(qd, hit, 4099, 2000,
                           [](const RatFunQ& g) { return g == RatFunQ::x(); });
    REQUIRE(f);
    CHECK(*f == RatFunQ::x());
  }
  CHECK(found);
}

TEST_CASE("sweep and lift recover the degree two pullback") {
  auto base = ghdo_from_triple({Rat(1, 3), Rat(2, 7), Rat(1, 7)});
  REQUIRE(base);
  auto pcb = poly_coeffs(base->op());
  auto pci = coeffs_at_point(example_rational(), Rat(0));
  long prec = 2 * 2 * 3 + 6;
  auto qd = build_quotients(pcb, pci, 1, 1, prec, false);
  RatFunQ x = RatFunQ::x();
  RatFunQ expect = rf(Rat(4)) * x / ((x + rf(Rat(1))) * (x + rf(Rat(1))));
  auto hits = sweep_c(qd, 4099, 2);
  REQUIRE(!hits.empty());
  bool lifted = false;
  for (const auto& hit : hits) {
    auto f = lift_rational(qd, hit, 4099, 2000,
                           [&](const RatFunQ& g) { return g == expect; });
    if (f) lifted = true;
  }
  CHECK(lifted);
}

TEST_CASE("a wrong triple leaves the sweep empty") {
  auto base = ghdo_from_triple({Rat(1, 3), Rat(2, 7), Rat(2, 7)});
  REQUIRE(base);
  auto pcb = poly_coeffs(base->op());
  auto pci = coeffs_at_point(example_rational(), Rat(0));
  auto qd = build_quotients(pcb, pci, 1, 1, 2 * 2 * 3 + 6, false);
  CHECK(sweep_c(qd, 4099, 2).empty());
}

TEST_CASE("rational pullback solution end to end") {
  auto sols = find_2f1(example_rational(), SolveConfig{});
  REQUIRE(sols.size() == 1);
  const auto& s = sols[0];
  CHECK(s.certified);
  CHECK(!s.algebraic);
  CHECK(s.params.a1 == Rat(5, 42));
  CHECK(s.params.a2 == Rat(11, 42));
  CHECK(s.params.b1 == Rat(2, 3));
  RatFunQ x = RatFunQ::x();
  CHECK(s.f == rf(Rat(4)) * x / ((x + rf(Rat(1))) * (x + rf(Rat(1)))));
  CHECK(s.r == rf(Rat(-5, 21)) / (x + rf(Rat(1))));
}

TEST_CASE("algebraic pullback solution end to end") {
  auto sols = find_2f1(example_algebraic(), SolveConfig{});
  REQUIRE(sols.size() == 1);
  const auto& s = sols[0];
  CHECK(s.certified);
  CHECK(s.algebraic);
  CHECK(s.params.a1 == Rat(1, 3));
  CHECK(s.params.a2 == Rat(2, 3));
  CHECK(s.params.b1 == Rat(1));
  // (1+x)^3 y^2 - N y + (N^2 - W)/(4(1+x)^3)
  UPoly<Rat> n = from_ints({1, 30, -24, 1});
  UPoly<Rat> w = from_ints({1, -7, 1});
  w = w * w * from_ints({1, -34, 1});
  UPoly<Rat> cube = upoly_pow(from_ints({1, 1}), 3);
  auto [a0, rem] = UPoly<Rat>::divrem(n * n - w, Rat(4) * cube);
  REQUIRE(rem.zero());
  auto oracle = normalize_minpoly({a0, -n, cube});
  CHECK(s.minpoly[0] == oracle[0]);
  CHECK(s.minpoly[1] == oracle[1]);
  CHECK(s.minpoly[2] == oracle[2]);
}

TEST_CASE("gauge-only operator yields no direct solution") {
  auto sols = find_2f1(example_gauge(), SolveConfig{});
  CHECK(sols.empty());
}
