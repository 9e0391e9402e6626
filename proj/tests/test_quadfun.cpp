#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/quadfun.hpp"

using namespace hyp;

namespace {
RatFunQ rf(const Rat& a) { return RatFunQ(a); }
}  // namespace

TEST_CASE("square root relation") {
  RatFunQ x = RatFunQ::x();
  QuadFun z(RatFunQ(), rf(Rat(1)), x);  // z with z^2 = x
  QuadFun zz = z * z;
  CHECK(zz.a == x);
  CHECK(zz.b.zero());
  UPoly<Rat> p({Rat(0), Rat(0), Rat(1)});  // y^2
  QuadFun ev = quadfun_eval(p, z);
  CHECK(ev.a == x);
  CHECK(ev.b.zero());
}

TEST_CASE("inverse and division") {
  RatFunQ x = RatFunQ::x();
  QuadFun u(x, rf(Rat(1)), x);  // x + z
  QuadFun one = u * u.inv();
  CHECK(is_one(one));
  QuadFun v(rf(Rat(2)), x, x);
  CHECK(is_one((v / u) * u * v.inv()));
}

TEST_CASE("conjugate norm is rational") {
  RatFunQ x = RatFunQ::x();
  QuadFun u(x + rf(Rat(3)), x, x);
  QuadFun n = u * u.conj();
  CHECK(n.b.zero());
  CHECK(n.a == (x + rf(Rat(3))) * (x + rf(Rat(3))) - x * x * x);
}

TEST_CASE("derivation extends the square root") {
  RatFunQ x = RatFunQ::x();
  QuadFun z(RatFunQ(), rf(Rat(1)), x);
  // (z^2)' = x' = 1 must match 2 z z'
  QuadFun lhs = kfrom_int(z, 2) * z * z.derivative();
  CHECK(lhs.b.zero());
  CHECK(is_one(lhs.a));
  // quotient rule survives in the extension
  QuadFun q = z / (z + kfrom_int(z, 1));
  QuadFun qp = q.derivative();
  QuadFun alt = (z.derivative() * (z + kfrom_int(z, 1)) - z * z.derivative()) *
                ((z + kfrom_int(z, 1)) * (z + kfrom_int(z, 1))).inv();
  CHECK(qp == alt);
}
