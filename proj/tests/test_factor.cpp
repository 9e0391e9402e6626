#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyp/factor.hpp"

using namespace hyp;

namespace {

UPoly<Rat> product(const std::vector<FactorMult>& fs) {
  UPoly<Rat> p(Rat(1));
  for (const auto& fm : fs)
    for (long i = 0; i < fm.mult; ++i) p *= fm.poly;
  return p;
}

}  // namespace

TEST_CASE("squarefree_parts") {
  // (x-1)^2 (x+2)^3 -> parts [1, x-1, x+2]
  auto f = upoly_pow(from_ints({-1, 1}), 2) * upoly_pow(from_ints({2, 1}), 3);
  auto parts = squarefree_parts(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].deg() == 0);
  CHECK(parts[1] == from_ints({-1, 1}));
  CHECK(parts[2] == from_ints({2, 1}));
}

TEST_CASE("factor products of linears") {
  auto f = from_ints({-1, 1}) * from_ints({2, 1}) * from_ints({0, 1});
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 3);
  CHECK(primitive_int(product(fs)) == primitive_int(f));
  auto roots = rational_roots(f);
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rat(-2));
  CHECK(roots[1] == Rat(0));
  CHECK(roots[2] == Rat(1));
}

TEST_CASE("factor with multiplicities and non-monic lead") {
  // 4(2x-1)^2 (x^2+1)
  auto f = Rat(4) * upoly_pow(from_ints({-1, 2}), 2) * from_ints({1, 0, 1});
  auto fs = factor_rational(f);
  REQUIRE(fs.size() == 2);
  long quad = fs[0].poly.deg() == 2 ? 0 : 1;
  CHECK(fs[quad].poly == from_ints({1, 0, 1}));
  CHECK(fs[quad].mult == 1);
  CHECK(fs[1 - quad].poly == from_ints({-1, 2}));
  CHECK(fs[1 - quad].mult == 2);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(from_ints({1, 0, 1})));
  CHECK(is_irreducible(from_ints({1, 5, 24, 16})));  // 16x^3+24x^2+5x+1
  CHECK(is_irreducible(from_ints({1, -34, 1})));
  CHECK(is_irreducible(from_ints({-2, 0, 0, 0, 0, 1})));  // x^5 - 2
  CHECK(!is_irreducible(from_ints({-1, 0, 1})));
  CHECK(!is_irreducible(from_ints({1, 2, 1})));
}

TEST_CASE("factor paper singularities") {
  // x^2 - 7x + 1 and x^2 - 34x + 1 both irreducible; their product splits back
  auto a = from_ints({1, -7, 1});
  auto b = from_ints({1, -34, 1});
  auto fs = factor_rational(a * b);
  REQUIRE(fs.size() == 2);
  CHECK(primitive_int(product(fs)) == primitive_int(a * b));
  for (const auto& fm : fs) CHECK(fm.poly.deg() == 2);
}

TEST_CASE("random factor round trips") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    UPoly<Rat> f(Rat(1));
    int nf = 1 + (int)(rng() % 3);
    for (int i = 0; i < nf; ++i) {
      long deg = 1 + (long)(rng() % 3);
      std::vector<Rat> c(deg + 1);
      for (auto& x : c) x = Rat((long)(rng() % 11) - 5);
      c[deg] = Rat(1 + (long)(rng() % 3));
      f *= UPoly<Rat>(c);
    }
    auto fs = factor_rational(f);
    CHECK(primitive_int(product(fs)) == primitive_int(f));
    for (const auto& fm : fs) CHECK(is_irreducible(fm.poly));
  }
}
