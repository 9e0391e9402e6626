#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hyp/cli.hpp"
#include "hyp/expfactor.hpp"

namespace hyp {

const char* status_name(SolveStatus st) {
  switch (st) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::no_solution_found: return "no-solution-found";
    case SolveStatus::unsupported: return "unsupported";
    case SolveStatus::invalid_input: return "invalid-input";
  }
  return "?";
}

int exit_code(SolveStatus st) {
  switch (st) {
    case SolveStatus::solved: return 0;
    case SolveStatus::no_solution_found: return 1;
    case SolveStatus::unsupported: return 2;
    case SolveStatus::invalid_input: return 3;
  }
  return 3;
}

SolveReport solve_command(const std::string& text, const SolverOptions& opt) {
  SolveReport rep;
  auto t0 = std::chrono::steady_clock::now();
  auto done = [&]() {
    rep.time_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
  };
  DiffOpQ l;
  try {
    l = parse_operator(text);
  } catch (const ParseError& e) {
    rep.status = SolveStatus::invalid_input;
    rep.message = e.what();
    return done();
  }
  if (l.order() != 2) {
    rep.status = SolveStatus::invalid_input;
    rep.message = "operator order must be 2 (got " + std::to_string(l.order()) + ")";
    return done();
  }
  try {
    analyze_singularities(l);  // throws Unsupported at an irregular singularity
    if (has_exponential_right_factor(l)) {
      rep.status = SolveStatus::invalid_input;
      rep.message =
          "operator is reducible (it has an exponential right factor); "
          "apply Kovacic-style preprocessing and solve the factors instead";
      return done();
    }
    SolveConfig cfg = opt.cfg;
    cfg.stats = &rep.stats;
    switch (opt.mode) {
      case SolveMode::find2f1_only: rep.solutions = find_2f1(l, cfg); break;
      case SolveMode::gauge_only: rep.solutions = gauge_2f1(l, cfg); break;
      case SolveMode::automatic: rep.solutions = hypergeometricsols(l, cfg); break;
    }
    rep.status =
        rep.solutions.empty() ? SolveStatus::no_solution_found : SolveStatus::solved;
  } catch (const Unsupported& e) {
    rep.status = SolveStatus::unsupported;
    rep.message = e.what();
  } catch (const std::exception& e) {
    rep.status = SolveStatus::unsupported;
    rep.message = e.what();
  }
  return done();
}

namespace {

nlohmann::json solution_to_json(const HypSolution& s) {
  nlohmann::json j;
  j["params"] = {render_rat(s.params.a1), render_rat(s.params.a2), render_rat(s.params.b1)};
  if (s.algebraic) {
    j["pullback"] = {{"type", "algebraic"},
                     {"minpoly", {render_poly(s.minpoly[0]), render_poly(s.minpoly[1]),
                                  render_poly(s.minpoly[2])}}};
    j["r"] = render_quadfun_in_f(s.r_alg, s.minpoly);
  } else {
    j["pullback"] = {{"type", "rational"}, {"expr", render_ratfun(s.f)}};
    j["r"] = render_ratfun(s.r);
  }
  if (s.gauge)
    j["gauge"] = {{"r0", render_ratfun(s.gauge->r0)}, {"r1", render_ratfun(s.gauge->r1)}};
  else
    j["gauge"] = nullptr;
  return j;
}

}  // namespace

std::string report_to_json(const SolveReport& rep) {
  nlohmann::json j;
  j["status"] = status_name(rep.status);
  j["solutions"] = nlohmann::json::array();
  for (const auto& s : rep.solutions) j["solutions"].push_back(solution_to_json(s));
  nlohmann::json d;
  d["candidates"] = rep.stats.candidates;
  d["sweeps"] = rep.stats.sweeps;
  d["lifts"] = rep.stats.lifts;
  d["primes"] = rep.stats.primes_used;
  d["time_ms"] = rep.time_ms;
  if (!rep.message.empty()) d["message"] = rep.message;
  j["diagnostics"] = d;
  return j.dump(2);
}

std::string report_to_text(const SolveReport& rep) {
  std::ostringstream os;
  os << "status: " << status_name(rep.status) << "\n";
  if (!rep.message.empty()) os << rep.message << "\n";
  for (const auto& s : rep.solutions) os << render_solution(s) << "\n";
  os << "candidates tried: " << rep.stats.candidates << ", sweeps: " << rep.stats.sweeps
     << ", lifts: " << rep.stats.lifts << ", time: " << rep.time_ms << " ms\n";
  return os.str();
}

BatchResult batch_command(const std::string& path, const SolverOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  BatchResult br;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    BatchEntry e;
    e.line_no = line_no;
    e.text = line;
    br.entries.push_back(std::move(e));
  }

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("HYP_SOLVE_THREADS")) {
    long cap = std::atol(env);
    if (cap >= 1 && (unsigned long)cap < workers) workers = (unsigned)cap;
  }
  if (br.entries.size() < workers) workers = (unsigned)br.entries.size();

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= br.entries.size()) break;
      br.entries[i].report = solve_command(br.entries[i].text, opt);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const auto& e : br.entries) {
    switch (e.report.status) {
      case SolveStatus::solved: ++br.solved; break;
      case SolveStatus::no_solution_found: ++br.no_solution; break;
      case SolveStatus::unsupported: ++br.unsupported; break;
      case SolveStatus::invalid_input: ++br.invalid; break;
    }
  }
  return br;
}

std::string batch_summary(const BatchResult& br) {
  std::ostringstream os;
  os << "lines solved      : " << br.solved << "\n"
     << "no-solution-found : " << br.no_solution << "\n"
     << "unsupported       : " << br.unsupported << "\n"
     << "invalid-input     : " << br.invalid << "\n";
  return os.str();
}

}  // namespace hyp
