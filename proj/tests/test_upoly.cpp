#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/fp.hpp"
#include "hyp/ratfun.hpp"
#include "hyp/upoly.hpp"

using namespace hyp;

TEST_CASE("UPoly basic arithmetic over Q") {
  auto f = from_ints({1, 2, 1});   // (x+1)^2
  auto g = from_ints({-1, 1});     // x - 1
  CHECK((f * g) == from_ints({-1, -1, 1, 1}));
  CHECK((f + g) == from_ints({0, 3, 1}));
  CHECK(f.eval(Rat(2)) == Rat(9));
  auto [q, r] = UPoly<Rat>::divrem(f * g, f);
  CHECK(q == g);
  CHECK(r.zero());
}

TEST_CASE("UPoly gcd and extended gcd") {
  auto f = from_ints({1, 2, 1});
  auto g = from_ints({1, 1});
  CHECK(upoly_gcd(f, g) == g.monic());
  auto a = from_ints({-1, 0, 1});  // (x-1)(x+1)
  auto b = from_ints({2, 3, 1});   // (x+1)(x+2)
  CHECK(upoly_gcd(a, b) == from_ints({1, 1}));

  UPoly<Rat> gg, s, t;
  auto p1 = from_ints({1, 1});
  auto p2 = from_ints({3, 1});
  upoly_ext_gcd(p1, p2, gg, s, t);
  CHECK(gg == UPoly<Rat>(Rat(1)));
  CHECK(s * p1 + t * p2 == gg);
}

TEST_CASE("UPoly shift compose derivative") {
  auto f = from_ints({0, 0, 1});  // x^2
  CHECK(f.shift(Rat(1)) == from_ints({1, 2, 1}));
  CHECK(f.derivative() == from_ints({0, 2}));
  auto inner = from_ints({1, 1});
  CHECK(from_ints({0, 1, 1}).compose(inner) == from_ints({2, 3, 1}));
  CHECK(from_ints({3, 2, 1}).reverse(2) == from_ints({1, 2, 3}));
}

TEST_CASE("UPoly over Fp") {
  std::uint64_t l = 13;
  UPoly<Fp> f(std::vector<Fp>{Fp(1, l), Fp(0, l), Fp(1, l)});  // x^2 + 1
  UPoly<Fp> g(std::vector<Fp>{Fp(5, l), Fp(1, l)});  // x + 5, root of x^2+1 mod 13
  auto [q, r] = UPoly<Fp>::divrem(f, g);
  CHECK(r.zero());
  CHECK((q * g) == f);
  UPoly<Fp> gg, s, t;
  upoly_ext_gcd(f, UPoly<Fp>(std::vector<Fp>{Fp(1, l), Fp(1, l)}), gg, s, t);
  CHECK(gg.deg() == 0);
}

TEST_CASE("primitive_int") {
  std::vector<Rat> c = {Rat(1, 2), Rat(3, 4)};
  CHECK(primitive_int(UPoly<Rat>(c)) == from_ints({2, 3}));
  std::vector<Rat> c2 = {Rat(-4), Rat(-6)};
  CHECK(primitive_int(UPoly<Rat>(c2)) == from_ints({2, 3}));
}

TEST_CASE("RatFun arithmetic") {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  RatFunQ f = one / (x + one);       // 1/(x+1)
  RatFunQ g = x / (x + one);         // x/(x+1)
  CHECK(f + g == one);
  CHECK((f * (x + one)).is_poly());
  RatFunQ h = (x * x - one) / (x - one);
  CHECK(h == x + one);  // reduction
  CHECK(f.derivative() == -(one / ((x + one) * (x + one))));
}

TEST_CASE("valuations") {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  RatFunQ f = (x * x) / (x + one);
  CHECK(valuation_at(f, Rat(0)) == 2);
  CHECK(valuation_at(f, Rat(-1)) == -1);
  CHECK(valuation_at(f, Rat(3)) == 0);
  CHECK(valuation_at_infinity(f) == -1);
  CHECK(valuation_at_infinity(one / (x * x)) == 2);
}
