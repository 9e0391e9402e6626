#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyp/fp.hpp"
#include "hyp/series.hpp"

using namespace hyp;

namespace {

Series<Rat> from_coeffs(std::initializer_list<long> cs, long prec) {
  Series<Rat> s(prec, Rat(0));
  long i = 0;
  for (long x : cs) s.c[i++] = Rat(x);
  return s;
}

Series<Rat> geometric(long prec) {
  // 1/(1-x)
  Series<Rat> s(prec, Rat(0));
  for (auto& x : s.c) x = Rat(1);
  return s;
}

}  // namespace

TEST_CASE("series mul and inverse") {
  long n = 10;
  auto one_minus_x = from_coeffs({1, -1}, n);
  CHECK(one_minus_x.inverse() == geometric(n));
  CHECK(one_minus_x * geometric(n) == from_coeffs({1}, n));
}

TEST_CASE("series derivative integrate") {
  auto g = geometric(8);
  auto d = g.derivative();
  for (long i = 0; i + 1 < 8; ++i) CHECK(d.at(i) == Rat(i + 1));
  auto back = d.integrate();
  CHECK(back.at(0) == Rat(0));
  for (long i = 1; i < 8; ++i) CHECK(back.at(i) == Rat(1));
}

TEST_CASE("series exp log") {
  long n = 12;
  auto u = from_coeffs({1, 1}, n);  // 1 + x
  auto l = series_log(u);
  for (long k = 1; k < n; ++k) {
    Rat expect = Rat((k % 2) ? 1 : -1, k);
    CHECK(l.at(k) == expect);
  }
  CHECK(series_exp(l) == u);
}

TEST_CASE("series pow_rat") {
  long n = 10;
  auto u = from_coeffs({1, 1}, n);
  auto r = series_pow_rat(u, Rat(1, 2), Rat(0));
  CHECK(r * r == u);
  auto r3 = series_pow_rat(u, Rat(-2, 3), Rat(0));
  CHECK(r3 * r3 * r3 * u * u == from_coeffs({1}, n));
}

TEST_CASE("series compose and reversion") {
  long n = 10;
  Series<Rat> x = from_coeffs({0, 1}, n);
  auto u = x * geometric(n);  // x/(1-x)
  auto v = series_reversion(u);
  // inverse is x/(1+x)
  auto expect = x * from_coeffs({1, 1}, n).inverse();
  CHECK(v == expect);
  CHECK(series_compose(u, v) == x);
  CHECK(series_compose(v, u) == x);
}

TEST_CASE("series over Fp") {
  std::uint64_t l = 4099;
  long n = 20;
  Series<Fp> u(n, Fp(0, l));
  u.c[0] = Fp(1, l);
  u.c[1] = Fp(1, l);
  auto lg = series_log(u);
  CHECK(series_exp(lg) == u);
  auto h = series_pow_rat(u, Rat(1, 3), Fp(0, l));
  CHECK(h * h * h == u);
  Series<Fp> x(n, Fp(0, l));
  x.c[1] = Fp(1, l);
  auto w = x * u;  // x(1+x)
  auto v = series_reversion(w);
  CHECK(series_compose(w, v) == x);
}

TEST_CASE("series_of_ratfun") {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  auto s = series_of_ratfun(one / (one - x), 6, [](const Rat& a) { return a; }, Rat(0));
  CHECK(s == geometric(6));
  std::uint64_t l = 7919;
  auto sf = series_of_ratfun(
      one / (one - x), 6, [&](const Rat& a) { return Fp::from_rat(a, l); }, Fp(0, l));
  for (long i = 0; i < 6; ++i) CHECK(sf.at(i).v == 1);
}

TEST_CASE("series shift and valuation") {
  auto g = geometric(6);
  auto sh = g.shift(2);
  CHECK(sh.valuation() == 2);
  CHECK(sh.at(5) == Rat(1));
  CHECK(sh.at(0) == Rat(0));
  CHECK(sh.shift(-2).at(0) == Rat(1));
}
