#ifndef HYP_CLI_HPP
#define HYP_CLI_HPP

#include <string>

#include "hyp/intbasis.hpp"

namespace hyp {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t p) : std::runtime_error(what), pos(p) {}
};

// grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' uint)?; base := 'x' | 'Dx' | integer | '(' expr ')';
// a leading sign on an expr is allowed. Division builds rationals and
// coefficient quotients; Dx in a denominator is an error, as is order > 2.
DiffOpQ parse_operator(const std::string& text);

// same grammar restricted to order 0 (no Dx)
RatFunQ parse_ratfun(const std::string& text);

// expression in x and the extra symbol f, evaluated in Q(x)[z]/(z^2 - d)
// where f is the +z root of mp[2] f^2 + mp[1] f + mp[0] = 0
QuadFun parse_quadfun_in_f(const std::string& text, const std::array<UPoly<Rat>, 3>& mp);

std::string render_rat(const Rat& a);
std::string render_poly(const UPoly<Rat>& p);
std::string render_ratfun(const RatFunQ& f);
std::string render_operator(const DiffOpQ& l);

// r written in the f-basis of the quadratic extension: r = first + second*f
std::pair<RatFunQ, RatFunQ> quadfun_to_f_basis(const QuadFun& r,
                                               const std::array<UPoly<Rat>, 3>& mp);
std::string render_quadfun_in_f(const QuadFun& r, const std::array<UPoly<Rat>, 3>& mp);

// exp(int r dx) as a product of factor^exponent when r is a sum of rational
// multiples of logarithmic derivatives of the irreducible factors of its
// denominator; nullopt otherwise
struct PrefactorPart {
  UPoly<Rat> base;
  Rat exponent;
};
std::optional<std::vector<PrefactorPart>> prefactor_parts(const RatFunQ& r);
std::string render_prefactor(const RatFunQ& r);
std::string render_solution(const HypSolution& s);

enum class SolveMode { automatic, find2f1_only, gauge_only };
enum class SolveStatus { solved, no_solution_found, unsupported, invalid_input };

const char* status_name(SolveStatus st);
int exit_code(SolveStatus st);

struct SolverOptions {
  SolveConfig cfg;
  SolveMode mode = SolveMode::automatic;
  bool json = false;
};

struct SolveReport {
  SolveStatus status = SolveStatus::no_solution_found;
  std::vector<HypSolution> solutions;
  std::string message;
  SolveStats stats;
  long time_ms = 0;
};

SolveReport solve_command(const std::string& text, const SolverOptions& opt);
std::string report_to_json(const SolveReport& rep);
std::string report_to_text(const SolveReport& rep);

struct BatchEntry {
  std::size_t line_no = 0;
  std::string text;
  SolveReport report;
};

struct BatchResult {
  std::vector<BatchEntry> entries;  // in input order
  long solved = 0, no_solution = 0, unsupported = 0, invalid = 0;
};

// one report per non-comment line; a bad line yields an invalid-input report
// instead of aborting the batch. HYP_SOLVE_THREADS caps the worker count.
BatchResult batch_command(const std::string& path, const SolverOptions& opt);
std::string batch_summary(const BatchResult& br);

}  // namespace hyp

#endif
