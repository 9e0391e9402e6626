#include <iostream>

#include <CLI11.hpp>

#include "hyp/cli.hpp"

namespace {

struct Flags {
  unsigned long prime = 4099;
  unsigned long retry_prime = 7919;
  long afmax = 2;
  long max_lift_bits = 2000;
  std::string precision_factor = "1";
  std::string mode = "auto";
  bool json = false;
};

void add_flags(CLI::App* cmd, Flags& fl) {
  cmd->add_option("--prime", fl.prime, "working prime for the modular sweep");
  cmd->add_option("--retry-prime", fl.retry_prime, "fallback prime");
  cmd->add_option("--afmax", fl.afmax, "maximal algebraic degree of the pullback")
      ->check(CLI::Range(1, 2));
  cmd->add_option("--max-lift-bits", fl.max_lift_bits, "modulus size cap for Hensel lifting");
  cmd->add_option("--precision-factor", fl.precision_factor,
                  "rational multiplier for the series working precision");
  cmd->add_option("--mode", fl.mode, "auto, find2f1, or gauge")
      ->check(CLI::IsMember({"auto", "find2f1", "gauge"}));
  cmd->add_flag("--json", fl.json, "JSON output");
}

hyp::SolverOptions to_options(const Flags& fl) {
  hyp::SolverOptions opt;
  opt.cfg.prime = fl.prime;
  opt.cfg.retry_prime = fl.retry_prime;
  opt.cfg.a_fmax = fl.afmax;
  opt.cfg.max_lift_bits = fl.max_lift_bits;
  hyp::RatFunQ pf = hyp::parse_ratfun(fl.precision_factor);
  if (!pf.is_poly() || pf.num.deg() > 0)
    throw CLI::ValidationError("--precision-factor must be a rational constant");
  hyp::Rat pfr = pf.zero() ? hyp::Rat(0) : pf.num.c[0];
  if (pfr < 1) throw CLI::ValidationError("--precision-factor must be >= 1");
  opt.cfg.precision_factor = pfr;
  if (fl.mode == "find2f1") opt.mode = hyp::SolveMode::find2f1_only;
  else if (fl.mode == "gauge") opt.mode = hyp::SolveMode::gauge_only;
  else opt.mode = hyp::SolveMode::automatic;
  opt.json = fl.json;
  return opt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2F1-type closed form solver for second order linear differential operators"};
  app.require_subcommand(1);

  Flags fl;
  std::string operator_text, batch_path;

  CLI::App* solve = app.add_subcommand("solve", "solve one operator expression");
  solve->add_option("operator", operator_text, "operator in x and Dx")->required();
  add_flags(solve, fl);

  CLI::App* batch = app.add_subcommand("batch", "solve a file of operators, one per line");
  batch->add_option("file", batch_path, "input file; '#' starts a comment line")->required();
  add_flags(batch, fl);

  CLI11_PARSE(app, argc, argv);

  try {
    hyp::SolverOptions opt = to_options(fl);
    if (solve->parsed()) {
      hyp::SolveReport rep = hyp::solve_command(operator_text, opt);
      std::cout << (opt.json ? hyp::report_to_json(rep) + "\n" : hyp::report_to_text(rep));
      return hyp::exit_code(rep.status);
    }
    hyp::BatchResult br = hyp::batch_command(batch_path, opt);
    if (opt.json) {
      std::cout << "[\n";
      for (std::size_t i = 0; i < br.entries.size(); ++i) {
        std::cout << hyp::report_to_json(br.entries[i].report);
        std::cout << (i + 1 < br.entries.size() ? ",\n" : "\n");
      }
      std::cout << "]\n";
    } else {
      for (const auto& e : br.entries) {
        std::cout << "line " << e.line_no << ": " << hyp::status_name(e.report.status);
        if (!e.report.solutions.empty())
          std::cout << "  params (" << hyp::render_rat(e.report.solutions[0].params.a1) << ","
                    << hyp::render_rat(e.report.solutions[0].params.a2) << ";"
                    << hyp::render_rat(e.report.solutions[0].params.b1) << ")";
        std::cout << "\n";
      }
      std::cout << hyp::batch_summary(br);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
