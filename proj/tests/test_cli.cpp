#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "hyp/cli.hpp"

using namespace hyp;

namespace {

RatFunQ rf(const Rat& a) { return RatFunQ(a); }

DiffOpQ dx() { return DiffOpQ::dx(rf(Rat(1))); }

DiffOpQ example_rational() {
  RatFunQ x = RatFunQ::x();
  RatFunQ one(Rat(1));
  DiffOpQ l = (rf(Rat(147)) * x * (x - one) * (x + one)) * (dx() * dx());
  l = l + (rf(Rat(266)) * x * x - rf(Rat(42)) * x - rf(Rat(98))) * dx();
  l = l + DiffOpQ::from_fun(rf(Rat(20)) * x - rf(Rat(5)));
  return l;
}

DiffOpQ example_algebraic() {
  RatFunQ x = RatFunQ::x();
  UPoly<Rat> q = from_ints({1, -44, 1206, -44, 1});
  UPoly<Rat> s = from_ints({1, -34, 1});
  DiffOpQ l = dx() * dx();
  l = l + DiffOpQ::from_fun(RatFunQ(Rat(1, 4) * q, from_ints({0, 0, 1}) * s * s));
  return l;
}

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

const char* kExample11 =
    "147*x*(x-1)*(x+1)*Dx^2 + (266*x^2-42*x-98)*Dx + (20*x-5)";
const char* kExample14 =
    "Dx^2 - (512*x^5+384*x^4-64*x^3-88*x^2-10*x-1)"
    "/(x*(4*x-1)*(4*x+1)*(16*x^3+24*x^2+5*x+1))*Dx"
    " + (512*x^5+64*x^4-128*x^3-60*x^2-8*x-1)"
    "/(x^2*(4*x-1)*(4*x+1)*(16*x^3+24*x^2+5*x+1))";

}  // namespace

TEST_CASE("operator parsing") {
  CHECK(parse_operator("Dx^2") == dx() * dx());
  CHECK(parse_operator(kExample11) == example_rational());
  CHECK(parse_operator("-Dx + x") == DiffOpQ::from_fun(RatFunQ::x()) - dx());
  CHECK_THROWS_AS(parse_operator("Dx^3"), ParseError);
  CHECK_THROWS_AS(parse_operator("1/Dx"), ParseError);
  CHECK_THROWS_AS(parse_operator("x*Dx^2/(Dx+1)"), ParseError);
  try {
    parse_operator("x + * 2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_operator("(x+1"), ParseError);
  CHECK_THROWS_AS(parse_operator("x + y"), ParseError);
}

TEST_CASE("parse of render is the identity") {
  for (const DiffOpQ& l : {example_rational(), example_algebraic(), example_gauge(),
                           dx() * dx(), DiffOpQ::from_fun(rf(Rat(0)))}) {
    CHECK(parse_operator(render_operator(l)) == l);
  }
  RatFunQ x = RatFunQ::x();
  for (const RatFunQ& f :
       {rf(Rat(4)) * x / ((x + rf(Rat(1))) * (x + rf(Rat(1)))), rf(Rat(16)) * x * x,
        rf(Rat(-5, 21)) / (x + rf(Rat(1))), RatFunQ(), rf(Rat(-3, 7))}) {
    CHECK(parse_ratfun(render_ratfun(f)) == f);
  }
}

TEST_CASE("prefactor decomposition") {
  RatFunQ x = RatFunQ::x();
  RatFunQ r = rf(Rat(-5, 21)) / (x + rf(Rat(1)));
  auto parts = prefactor_parts(r);
  REQUIRE(parts);
  REQUIRE(parts->size() == 1);
  CHECK((*parts)[0].base.monic() == from_ints({1, 1}));
  CHECK((*parts)[0].exponent == Rat(-5, 21));
  CHECK(render_prefactor(r) == "(x + 1)^(-5/21)");

  // two places plus an irreducible quadratic factor
  RatFunQ r2 = rf(Rat(1, 2)) / x + rf(Rat(-2, 3)) * (rf(Rat(2)) * x) / (x * x + rf(Rat(1)));
  auto p2 = prefactor_parts(r2);
  REQUIRE(p2);
  CHECK(p2->size() == 2);

  CHECK(!prefactor_parts(rf(Rat(1)) / (x * x)));          // repeated pole
  CHECK(!prefactor_parts(x));                             // polynomial part
  CHECK(!prefactor_parts(rf(Rat(1, 3)) + rf(Rat(1)) / x));  // improper part
  CHECK(prefactor_parts(RatFunQ())->empty());
}

TEST_CASE("solve command on the rational example") {
  SolverOptions opt;
  SolveReport rep = solve_command(kExample11, opt);
  CHECK(rep.status == SolveStatus::solved);
  CHECK(exit_code(rep.status) == 0);
  REQUIRE(rep.solutions.size() == 1);
  RatFunQ x = RatFunQ::x();
  CHECK(rep.solutions[0].f == rf(Rat(4)) * x / ((x + rf(Rat(1))) * (x + rf(Rat(1)))));
  CHECK(rep.stats.candidates >= 1);
  std::string text = report_to_text(rep);
  CHECK(text.find("(x + 1)^(-5/21)") != std::string::npos);
  CHECK(text.find("2F1(5/42,11/42;2/3;") != std::string::npos);
}

TEST_CASE("solve command status mapping") {
  SolverOptions opt;
  CHECK(solve_command("Dx^3", opt).status == SolveStatus::invalid_input);
  CHECK(solve_command("Dx", opt).status == SolveStatus::invalid_input);
  CHECK(solve_command("x + * 2", opt).status == SolveStatus::invalid_input);
  CHECK(solve_command("x*Dx^2 - 1", opt).status == SolveStatus::unsupported);
  SolveReport red = solve_command("x^2*Dx^2 - 2*x*Dx + 2", opt);
  CHECK(red.status == SolveStatus::invalid_input);
  CHECK(red.message.find("Kovacic") != std::string::npos);
  CHECK(exit_code(red.status) == 3);
}

TEST_CASE("gauge example per mode") {
  SolverOptions opt;
  opt.mode = SolveMode::find2f1_only;
  CHECK(solve_command(kExample14, opt).status == SolveStatus::no_solution_found);
  opt.mode = SolveMode::automatic;
  SolveReport rep = solve_command(kExample14, opt);
  CHECK(rep.status == SolveStatus::solved);
  REQUIRE(rep.solutions.size() == 1);
  REQUIRE(rep.solutions[0].gauge);
  std::string text = report_to_text(rep);
  CHECK(text.find("2F1(1/2,1/2;1; 16*x^2)") != std::string::npos);
  CHECK(text.find("2F1(3/2,3/2;2; 16*x^2)") != std::string::npos);
  opt.mode = SolveMode::gauge_only;
  CHECK(solve_command(kExample14, opt).status == SolveStatus::solved);
}

TEST_CASE("json round trip recertifies") {
  SolverOptions opt;
  SolveReport rep = solve_command(kExample11, opt);
  REQUIRE(rep.status == SolveStatus::solved);
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["status"] == "solved");
  REQUIRE(j["solutions"].size() == 1);
  const auto& js = j["solutions"][0];
  CHECK(js["pullback"]["type"] == "rational");
  GHDOParams params{Rat(parse_ratfun(js["params"][0].get<std::string>()).num.at(0)),
                    Rat(parse_ratfun(js["params"][1].get<std::string>()).num.at(0)),
                    Rat(parse_ratfun(js["params"][2].get<std::string>()).num.at(0))};
  RatFunQ f = parse_ratfun(js["pullback"]["expr"].get<std::string>());
  RatFunQ r = parse_ratfun(js["r"].get<std::string>());
  CHECK(js["gauge"].is_null());
  DiffOpQ l = parse_operator(kExample11);
  auto rr = recover_r(change_of_variables(params.op(), f), l.monic());
  REQUIRE(rr);
  CHECK(*rr == r);
}

TEST_CASE("json round trip recertifies the algebraic case") {
  SolverOptions opt;
  std::string text =
      "Dx^2 + (x^4-44*x^3+1206*x^2-44*x+1)/(4*x^2*(x^2-34*x+1)^2)";
  SolveReport rep = solve_command(text, opt);
  REQUIRE(rep.status == SolveStatus::solved);
  auto j = nlohmann::json::parse(report_to_json(rep));
  const auto& js = j["solutions"][0];
  REQUIRE(js["pullback"]["type"] == "algebraic");
  std::array<UPoly<Rat>, 3> mp;
  for (int i = 0; i < 3; ++i) {
    RatFunQ p = parse_ratfun(js["pullback"]["minpoly"][i].get<std::string>());
    REQUIRE(p.is_poly());
    mp[i] = p.num;
  }
  QuadFun r = parse_quadfun_in_f(js["r"].get<std::string>(), mp);
  GHDOParams params{Rat(1, 3), Rat(2, 3), Rat(1)};
  DiffOpQ l = parse_operator(text);
  auto rr = recover_r_algebraic(params.op(), mp, l.monic());
  REQUIRE(rr);
  CHECK(*rr == r);
}

TEST_CASE("batch command") {
  const char* path = "test_cli_corpus.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << kExample11 << "\n"
        << "\n"
        << "this ( is broken\n"
        << kExample14 << "\n";
  }
  SolverOptions opt;
  BatchResult br = batch_command(path, opt);
  std::remove(path);
  REQUIRE(br.entries.size() == 3);
  CHECK(br.entries[0].line_no == 2);
  CHECK(br.entries[0].report.status == SolveStatus::solved);
  CHECK(br.entries[1].report.status == SolveStatus::invalid_input);
  CHECK(br.entries[2].report.status == SolveStatus::solved);
  CHECK(br.solved == 2);
  CHECK(br.invalid == 1);
  std::string sum = batch_summary(br);
  CHECK(sum.find(": 2") != std::string::npos);

  {
    std::ofstream out(path);
    out << "# only comments\n\n";
  }
  BatchResult empty = batch_command(path, opt);
  std::remove(path);
  CHECK(empty.entries.empty());
  CHECK(empty.solved + empty.no_solution + empty.unsupported + empty.invalid == 0);
}
