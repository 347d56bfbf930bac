#include "davis/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "davis/clause.hpp"
#include "davis/dioph.hpp"
#include "davis/dp.hpp"
#include "davis/dpll.hpp"
#include "davis/error.hpp"
#include "davis/formats.hpp"
#include "davis/herbrand.hpp"

namespace davis::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_model(std::ostream& out, const Assignment& model) {
  out << 'v';
  for (const auto& [var, value] : model.bindings()) out << ' ' << (value ? var : -var);
  out << " 0\n";
}

std::string join(const Tuple& t, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(t[i]);
  }
  return s;
}

// Solves with the selected engine and prints the verdict block.
int solve_and_report(const ClauseSet& s, const RunConfig& cfg, std::ostream& out,
                     std::ostream& err) {
  Verdict verdict;
  std::vector<std::string> stats;
  if (cfg.engine == "dp") {
    const DpResult r = dp_run(s);
    verdict = r.verdict;
    stats.push_back("eliminations " + std::to_string(r.stats.eliminations));
    stats.push_back("peak clauses " + std::to_string(r.stats.peak_clauses));
    stats.push_back("peak literals " + std::to_string(r.stats.peak_literals));
  } else if (cfg.engine == "dpll") {
    DpllOptions options;
    if (cfg.trace) options.on_event = [&err](const TraceEvent& e) { err << to_string(e) << '\n'; };
    const DpllResult r = dpll_run(s, options);
    verdict = r.verdict;
    stats.push_back("decisions " + std::to_string(r.stats.decisions));
    stats.push_back("backtracks " + std::to_string(r.stats.backtracks));
    stats.push_back("max depth " + std::to_string(r.stats.max_depth));
  } else {
    verdict = brute_force_sat(s);
  }
  out << (verdict.is_sat() ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
  if (verdict.is_sat()) print_model(out, verdict.model);
  out << "c engine " << cfg.engine << '\n';
  for (const auto& line : stats) out << "c " << line << '\n';
  return verdict.is_sat() ? kExitSat : kExitUnsat;
}

int cmd_sat(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const DimacsFile file = parse_dimacs(read_file(cfg.input_path));
  for (const auto& w : file.warnings) err << "c warning: " << w << '\n';
  return solve_and_report(file.clauses, cfg, out, err);
}

int cmd_prove(const RunConfig& cfg, std::ostream& out) {
  const FolProblem problem = parse_fol(read_file(cfg.input_path));
  const FolClauseSet clauses = problem_clauses(problem);
  for (const FolClause& c : clauses) out << "c clause " << c << '\n';
  const RefuteResult r = refute(clauses, {cfg.max_level, cfg.clause_cap});
  if (r.refuted()) {
    out << "s UNSATISFIABLE\n";
    out << "c refuted at level " << r.level << '\n';
    out << "c ground clauses " << r.ground.size() << '\n';
    out << "c ground atoms " << r.registry.size() << '\n';
    return kExitUnsat;
  }
  out << "s UNKNOWN\n";
  out << "c no refutation up to level " << cfg.max_level << '\n';
  return kExitUnknown;
}

int cmd_dioph(const RunConfig& cfg, std::ostream& out) {
  const DioMachine m = parse_machine(read_file(cfg.input_path));
  const SearchBound bound{cfg.bound};
  if (cfg.input.has_value() == cfg.enumerate.has_value())
    throw CLI::ValidationError("dioph", "give exactly one of --input and --enumerate");

  if (cfg.input) {
    if (m.bounded()) {
      const std::uint64_t z_max = cfg.z_max.value_or(cfg.bound);
      const DavisOutcome r = davis_nf_search(m, *cfg.input, z_max, cfg.bound);
      if (!r.holds) {
        out << "s NOT_WITHIN_BOUND\n";
        return kExitUnknown;
      }
      out << "s HOLDS\n";
      out << "c z " << r.z << '\n';
      for (std::size_t y = 0; y < r.witnesses.size(); ++y)
        out << "c y " << y << " x " << join(r.witnesses[y]) << '\n';
      return kExitSat;
    }
    const NddmOutcome r = nddm_run(m, *cfg.input, bound);
    if (!r.accepted) {
      out << "s NOT_WITHIN_BOUND\n";
      return kExitUnknown;
    }
    out << "s ACCEPTED\n";
    out << "v " << join(r.witness) << '\n';
    return kExitSat;
  }

  if (cfg.check.empty()) {
    const std::vector<Tuple> accepted = nddm_enumerate(m, *cfg.enumerate, bound);
    for (const Tuple& t : accepted) out << "a " << join(t) << '\n';
    out << "c accepted " << accepted.size() << '\n';
    return kExitSat;
  }
  const RepresentationReport report =
      check_representation(m, library_predicate(cfg.check), *cfg.enumerate, bound);
  for (const Discrepancy& d : report.discrepancies)
    out << (d.kind == Discrepancy::Kind::Fatal ? "FATAL " : "INCONCLUSIVE ") << join(d.tuple)
        << '\n';
  out << "c agreements " << report.agreements << '\n';
  out << "c fatal " << report.fatal_count() << '\n';
  out << "c inconclusive " << report.inconclusive_count() << '\n';
  if (report.fatal_count() > 0) return kExitUnsat;
  return report.inconclusive_count() > 0 ? kExitUnknown : kExitSat;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.family == "php") {
    const ClauseSet s = gen_pigeonhole(cfg.size);
    if (cfg.emit) {
      out << render_dimacs(s);
      return 0;
    }
    out << "c php " << cfg.size + 1 << " pigeons " << cfg.size << " holes, " << s.size()
        << " clauses\n";
    return solve_and_report(s, cfg, out, err);
  }
  // random: cross-check all three engines on seeded instances.
  std::mt19937_64 rng(cfg.seed);
  std::size_t sat = 0, unsat = 0, mismatches = 0;
  for (int i = 0; i < cfg.size; ++i) {
    const ClauseSet s = random_cnf(rng);
    const Verdict table = brute_force_sat(s);
    const Verdict dp = dp_solve(s);
    const Verdict dpll = dpll_solve(s);
    const bool agree = table.status == dp.status && dp.status == dpll.status &&
                       (!dp.is_sat() || evaluate(s, dp.model)) &&
                       (!dpll.is_sat() || evaluate(s, dpll.model));
    if (!agree) {
      ++mismatches;
      out << "c mismatch on " << s << '\n';
    }
    ++(table.is_sat() ? sat : unsat);
  }
  out << "c seed " << cfg.seed << '\n';
  out << "c instances " << cfg.size << " sat " << sat << " unsat " << unsat << " mismatches "
      << mismatches << '\n';
  return mismatches == 0 ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Davis-Putnam, DPLL, Herbrand refutation and Diophantine machines", "davis"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "seed for randomized commands (DAVIS_SEED overrides)");

  const auto engines = CLI::IsMember({"dp", "dpll", "table"});

  auto* sat = app.add_subcommand("sat", "decide a DIMACS CNF file");
  sat->add_option("file", cfg.input_path, "CNF file")->required();
  sat->add_option("--engine", cfg.engine, "dp | dpll | table")->check(engines);
  sat->add_flag("--trace", cfg.trace, "print D/B/U/P decision trace to stderr (dpll)");

  auto* prove = app.add_subcommand("prove", "refute axioms plus negated conjecture");
  prove->add_option("file", cfg.input_path, "first-order problem file")->required();
  prove->add_option("--max-level", cfg.max_level, "highest Herbrand level")
      ->check(CLI::NonNegativeNumber);
  prove->add_option("--clause-cap", cfg.clause_cap, "ground clause limit");

  auto* dioph = app.add_subcommand("dioph", "run a Diophantine machine");
  dioph->add_option("file", cfg.input_path, "machine file")->required();
  std::vector<std::uint64_t> input;
  auto* input_opt = dioph->add_option("--input", input, "parameter tuple a1,...,an")->delimiter(',');
  std::uint64_t range = 0;
  auto* enum_opt = dioph->add_option("--enumerate", range, "enumerate parameters 0..R");
  dioph->add_option("--bound", cfg.bound, "largest value guessed per unknown")->required();
  std::uint64_t z_max = 0;
  auto* z_opt = dioph->add_option("--z-max", z_max, "largest z for normal-form machines");
  dioph->add_option("--check", cfg.check, "compare against a closed form")
      ->check(CLI::IsMember(library_names()));
  input_opt->excludes(enum_opt);

  auto* bench = app.add_subcommand("bench", "benchmark families");
  bench->add_option("family", cfg.family, "php | random")
      ->required()
      ->check(CLI::IsMember({"php", "random"}));
  bench->add_option("n", cfg.size, "holes (php) or instance count (random)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--engine", cfg.engine, "dp | dpll | table")->check(engines);
  bench->add_flag("--emit", cfg.emit, "print the php instance as DIMACS instead of solving");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (const char* env = std::getenv("DAVIS_SEED"); env && *env) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: DAVIS_SEED must be a nonnegative integer\n";
      return kExitUsage;
    }
  }
  if (input_opt->count() > 0) cfg.input = input;
  if (enum_opt->count() > 0) cfg.enumerate = range;
  if (z_opt->count() > 0) cfg.z_max = z_max;

  if (sat->parsed()) cfg.command = RunConfig::Command::Sat;
  if (prove->parsed()) cfg.command = RunConfig::Command::Prove;
  if (dioph->parsed()) cfg.command = RunConfig::Command::Dioph;
  if (bench->parsed()) cfg.command = RunConfig::Command::Bench;

  try {
    switch (cfg.command) {
      case RunConfig::Command::Sat: return cmd_sat(cfg, out, err);
      case RunConfig::Command::Prove: return cmd_prove(cfg, out);
      case RunConfig::Command::Dioph: return cmd_dioph(cfg, out);
      case RunConfig::Command::Bench: return cmd_bench(cfg, out, err);
    }
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    out << "s UNKNOWN\n";
    err << "error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace davis::cli
