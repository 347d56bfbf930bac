// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "davis/clause.hpp"
#include "davis/dioph.hpp"
#include "davis/dp.hpp"
#include "davis/dpll.hpp"
#include "davis/error.hpp"
#include "davis/formats.hpp"
#include "davis/herbrand.hpp"
#include "gmp_oracle.hpp"
#include "oracles.hpp"

using namespace davis;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void report(const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.detail.str() << std::endl;
}

bool engines_agree(const ClauseSet& s, std::string& why) {
  const Verdict table = brute_force_sat(s);
  const Verdict dp = dp_solve(s);
  const Verdict dpll = dpll_solve(s);
  if (dp.status != table.status || dpll.status != table.status) {
    why = "verdicts differ on " + to_string(s);
    return false;
  }
  if (dp.is_sat() && !evaluate(s, dp.model)) {
    why = "dp model fails on " + to_string(s);
    return false;
  }
  if (dpll.is_sat() && !evaluate(s, dpll.model)) {
    why = "dpll model fails on " + to_string(s);
    return false;
  }
  return true;
}

void exhaustive(Check& c) {
  const auto t0 = Clock::now();
  const auto pool = oracle::all_clauses(3, 3);
  std::size_t sets = 0, sat = 0;
  std::string why;
  oracle::for_each_clause_set(pool, 4, [&](const ClauseSet& s) {
    ++sets;
    if (brute_force_sat(s).is_sat()) ++sat;
    if (!engines_agree(s, why)) c.require(false, why);
  });
  const double secs = seconds_since(t0);
  c.require(secs < 60, "runtime over 60 s");
  c.detail << sets << " clause sets from " << pool.size() << " clauses (" << sat << " sat, "
           << sets - sat << " unsat), 3 engines agree, " << secs << " s";
}

void randomized(Check& c) {
  const auto t0 = Clock::now();
  const std::uint64_t seed = 20240601;
  std::mt19937_64 rng(seed);
  const int n = 10000;
  int sat = 0;
  std::string why;
  for (int i = 0; i < n; ++i) {
    const ClauseSet s = random_cnf(rng, {6, 20, 3});
    if (brute_force_sat(s).is_sat()) ++sat;
    if (!engines_agree(s, why)) c.require(false, why);
  }
  const double secs = seconds_since(t0);
  c.require(secs < 300, "runtime over 5 min");
  c.detail << n << " random CNFs, seed " << seed << " (" << sat << " sat, " << n - sat
           << " unsat), 0 failures, " << secs << " s";
}

void pigeonhole(Check& c) {
  const auto t0 = Clock::now();
  c.detail << "dpll decisions";
  for (int n = 1; n <= 7; ++n) {
    const DpllResult r = dpll_run(gen_pigeonhole(n));
    c.require(r.verdict.is_unsat(), "dpll php " + std::to_string(n));
    c.detail << " n" << n << "=" << r.stats.decisions;
  }
  c.detail << "; dp peak clauses (input)";
  std::size_t prev_peak = 0;
  for (int n = 1; n <= 4; ++n) {
    const ClauseSet s = gen_pigeonhole(n);
    const DpResult r = dp_run(s);
    c.require(r.verdict.is_unsat(), "dp php " + std::to_string(n));
    c.require(r.stats.peak_clauses > prev_peak, "dp peak not growing");
    prev_peak = r.stats.peak_clauses;
    c.detail << " n" << n << "=" << r.stats.peak_clauses << "(" << s.size() << ")";
    if (n == 4) c.require(r.stats.peak_clauses > s.size(), "no blowup beyond the input at n=4");
  }
  const double secs = seconds_since(t0);
  c.require(secs < 300, "runtime over 5 min");
  c.detail << "; " << secs << " s";
}

struct BatteryItem {
  const char* name;
  const char* text;
  bool valid;
};

const BatteryItem kBattery[] = {
    {"barbara",
     "axiom: (forall x (imp (Man x) (Mortal x)))\naxiom: (Man socrates)\n"
     "conjecture: (Mortal socrates)\n",
     true},
    {"celarent",
     "axiom: (forall x (imp (M x) (not (P x))))\naxiom: (forall x (imp (S x) (M x)))\n"
     "conjecture: (forall x (imp (S x) (not (P x))))\n",
     true},
    {"darii",
     "axiom: (forall x (imp (M x) (P x)))\naxiom: (exists x (and (S x) (M x)))\n"
     "conjecture: (exists x (and (S x) (P x)))\n",
     true},
    {"transitivity chain",
     "axiom: (forall (x y z) (imp (and (Lt x y) (Lt y z)) (Lt x z)))\n"
     "axiom: (Lt a b)\naxiom: (Lt b c)\naxiom: (Lt c d)\nconjecture: (Lt a d)\n",
     true},
    {"exists-forall to forall-exists",
     "axiom: (exists y (forall x (R x y)))\nconjecture: (forall x (exists y (R x y)))\n", true},
    {"instance of a universal",
     "axiom: (forall x (P x))\nconjecture: (exists y (P (f y)))\n", true},
    {"undistributed middle",
     "axiom: (forall x (imp (P x) (M x)))\naxiom: (forall x (imp (S x) (M x)))\n"
     "conjecture: (forall x (imp (S x) (P x)))\n",
     false},
    {"reversed chain",
     "axiom: (forall (x y z) (imp (and (Lt x y) (Lt y z)) (Lt x z)))\n"
     "axiom: (Lt a b)\naxiom: (Lt b c)\nconjecture: (Lt c a)\n",
     false},
    {"exists to forall", "axiom: (exists x (P x))\nconjecture: (forall x (P x))\n", false},
    {"forall-exists to exists-forall",
     "axiom: (forall x (exists y (R x y)))\nconjecture: (exists y (forall x (R x y)))\n", false},
};

void first_order(Check& c) {
  const Term x = Term::variable("x");
  const Term a = Term::constant("a");
  const FolLiteral px{true, Atom{"P", {x}}};
  const FolLiteral npx{false, Atom{"P", {x}}};
  const FolClauseSet examples[] = {
      {{npx, FolLiteral{true, Atom{"Q", {x}}}},
       {FolLiteral{true, Atom{"P", {a}}}},
       {FolLiteral{false, Atom{"Q", {a}}}}},
      {{FolLiteral{true, Atom{"P", {a}}}}},
      {{px}, {FolLiteral{false, Atom{"P", {Term::application("f", {Term::variable("y")})}}}}},
  };
  int confirmed = 0;
  auto confirm = [&](const RefuteResult& r, const std::string& what) {
    if (!r.refuted() || r.registry.size() > kDefaultOracleCap) return;
    c.require(brute_force_sat(r.ground).is_unsat(), what + " ground set is satisfiable");
    ++confirmed;
  };

  const RefuteResult r0 = refute(examples[0], {.max_level = 2});
  c.require(r0.refuted() && r0.level == 0, "example 1 is not Refuted(0)");
  confirm(r0, "example 1");
  const RefuteResult r1 = refute(examples[1], {.max_level = 2});
  c.require(!r1.refuted(), "example 2 is not Unknown");
  const RefuteResult r2 = refute(examples[2], {.max_level = 2});
  c.require(r2.refuted() && r2.level == 1, "example 3 is not Refuted(1)");
  confirm(r2, "example 3");

  int errors = 0;
  for (const BatteryItem& item : kBattery) {
    const RefuteResult r = refute(problem_clauses(parse_fol(item.text)), {.max_level = 2});
    if (r.refuted() != item.valid) {
      ++errors;
      c.require(false, std::string("misclassified ") + item.name);
    }
    confirm(r, item.name);
  }
  c.detail << "examples Refuted(" << r0.level << "), Unknown, Refuted(" << r2.level << "); battery "
           << std::size(kBattery) << " sentences, " << errors << " errors at max level 2; "
           << confirmed << " refuted ground sets confirmed unsat by truth table";
}

Term random_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars) {
  const int pick = static_cast<int>(rng() % (depth > 0 ? 6 : 3));
  switch (pick) {
    case 0: return Term::variable(vars[rng() % vars.size()]);
    case 1: return Term::constant("a");
    case 2: return Term::constant("b");
    case 3: return Term::application("g", {random_term(rng, depth - 1, vars)});
    case 4: return Term::application("h", {random_term(rng, depth - 1, vars)});
    default:
      return Term::application(
          "f", {random_term(rng, depth - 1, vars), random_term(rng, depth - 1, vars)});
  }
}

// Replaces one randomly chosen non-variable position of t by `hole`.
Term plug(const Term& t, const Term& hole, std::mt19937_64& rng, int depth = 0) {
  if (t.args().empty() || rng() % 3 == 0 || depth > 3) return hole;
  std::vector<Term> args = t.args();
  auto& slot = args[rng() % args.size()];
  slot = plug(slot, hole, rng, depth + 1);
  return Term::application(t.symbol(), std::move(args));
}

void unification(Check& c) {
  std::mt19937_64 rng(77);
  const std::vector<std::string> xs{"X0", "X1", "X2", "X3"};
  const std::vector<std::string> ys{"Y0", "Y1"};
  int unified = 0, idempotent = 0;
  for (int i = 0; i < 1000; ++i) {
    const Term common = random_term(rng, 4, xs);
    Substitution full, part;
    for (const std::string& v : xs) {
      const Term t = random_term(rng, 2, ys);
      full.bind(v, t);
      if (rng() % 2) part.bind(v, t);
    }
    const Term lhs = full.apply(common);
    const Term rhs = part.apply(common);
    const auto s = unify(lhs, rhs);
    if (!s) {
      c.require(false, "no unifier for " + lhs.to_string() + " and " + rhs.to_string());
      continue;
    }
    c.require(s->apply(lhs) == s->apply(rhs), "unified instances differ");
    c.require(s->is_idempotent(), "non-idempotent unifier " + s->to_string());
    if (s->apply(lhs) == s->apply(rhs)) ++unified;
    if (s->is_idempotent()) ++idempotent;
  }

  int failed = 0, clashes = 0, occurs = 0;
  const char* heads[] = {"a", "b", "g", "h", "f"};
  for (int i = 0; i < 1000; ++i) {
    const Term context = random_term(rng, 3, xs);
    Term lhs_hole, rhs_hole;
    if (i % 2 == 0) {
      ++clashes;
      const std::size_t p = rng() % 5, q = (p + 1 + rng() % 4) % 5;
      auto build = [&](const char* head) {
        const std::string h = head;
        if (h == "a" || h == "b") return Term::constant(h);
        if (h == "f") return Term::application(h, {random_term(rng, 2, xs), random_term(rng, 2, xs)});
        return Term::application(h, {random_term(rng, 2, xs)});
      };
      lhs_hole = build(heads[p]);
      rhs_hole = build(heads[q]);
    } else {
      ++occurs;
      const Term v = Term::variable(xs[rng() % xs.size()]);
      lhs_hole = v;
      const Term wrapper = Term::application("f", {random_term(rng, 2, xs), Term::constant("a")});
      rhs_hole = Term::application(rng() % 2 ? "g" : "h", {plug(wrapper, v, rng)});
    }
    std::mt19937_64 same(rng());
    std::mt19937_64 copy = same;
    const Term lhs = plug(context, lhs_hole, same);
    const Term rhs = plug(context, rhs_hole, copy);
    if (!unify(lhs, rhs)) {
      ++failed;
    } else {
      c.require(false, "unexpected unifier for " + lhs.to_string() + " and " + rhs.to_string());
    }
  }
  c.detail << unified << "/1000 unifiable pairs unify to identical instances, " << idempotent
           << "/1000 idempotent; " << failed << "/1000 failing pairs fail (" << clashes
           << " clash, " << occurs << " occurs check)";
}

void diophantine(Check& c) {
  for (const std::string& name : library_names()) {
    const auto r = check_representation(library_machine(name), library_predicate(name), 100, {100});
    c.require(r.fatal_count() == 0 && r.inconclusive_count() == 0, name + " disagrees");
    c.detail << name << " " << r.agreements << "/101 agree, " << r.fatal_count() << " fatal, "
             << r.inconclusive_count() << " inconclusive; ";
  }
  const IntExpr two_x = pow(2, IntExpr::var("x"));
  const BigInt mine = eval_expr(two_x, {{"x", 100}});
  const mpz_class theirs = oracle::gmp_eval(two_x, {{"x", 100}});
  c.require(mine.str() == theirs.get_str(), "2^100 disagrees with GMP");
  c.require(mine.str() == "1267650600228229401496703205376", "2^100 wrong");
  c.detail << "2^100 = " << mine << "; ";

  std::size_t checked = 0;
  for (const std::string& name : library_names()) {
    const DioMachine m = library_machine(name);
    std::vector<std::vector<Tuple>> sets;
    for (std::uint64_t b : {10, 50, 100}) sets.push_back(nddm_enumerate(m, 100, {b}));
    for (std::size_t i = 0; i + 1 < sets.size(); ++i)
      c.require(std::includes(sets[i + 1].begin(), sets[i + 1].end(), sets[i].begin(),
                              sets[i].end()),
                name + " enumeration not monotone");
    for (std::uint64_t a = 0; a <= 100; ++a) {
      NddmOutcome prev;
      for (std::uint64_t b : {10, 50, 100}) {
        const NddmOutcome cur = nddm_run(m, Tuple{a}, {b});
        if (prev.accepted)
          c.require(cur.accepted && cur.witness <= prev.witness, name + " run not monotone");
        prev = cur;
        ++checked;
      }
    }
  }
  c.detail << "monotone over B in {10,50,100} on " << checked << " runs";
}

struct Captured {
  int code;
  std::string output;
};

Captured capture(const std::string& command) {
  Captured r{-1, {}};
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void determinism(Check& c) {
  const std::string bin = DAVIS_BINARY;
  const std::string data = DAVIS_DATA_DIR;
  std::vector<std::string> commands;
  for (const auto& entry : fs::directory_iterator(data + "/cnf"))
    for (const char* e : {"dp", "dpll", "table"})
      commands.push_back("sat " + entry.path().string() + " --engine " + e + " --trace");
  for (const auto& entry : fs::directory_iterator(data + "/fol"))
    commands.push_back("prove " + entry.path().string());
  commands.push_back("dioph " + data + "/dio/composites.dio --input 9 --bound 5");
  commands.push_back("dioph " + data + "/dio/composites.dio --input 7 --bound 10");
  commands.push_back("dioph " + data + "/dio/pow2.dio --enumerate 40 --bound 10 --check pow2");
  commands.push_back("dioph " + data + "/dio/squares.dio --enumerate 30 --bound 3 --check squares");
  commands.push_back("dioph " + data + "/dio/even_nf.dio --input 6 --bound 10");
  commands.push_back("dioph " + data + "/dio/four_squares.dio --enumerate 15 --bound 4");
  commands.push_back("bench php 4 --engine dpll");
  commands.push_back("bench php 3 --engine dp");
  commands.push_back("bench php 3 --emit");
  commands.push_back("bench random 500 --seed 3");
  commands.push_back("--seed 9 bench random 500");
  commands.push_back("sat /nonexistent.cnf");
  std::sort(commands.begin(), commands.end());

  std::size_t identical = 0;
  for (const std::string& args : commands) {
    const Captured first = capture(bin + " " + args);
    const Captured second = capture(bin + " " + args);
    c.require(first.code >= 0, "could not run " + args);
    if (first.code == second.code && first.output == second.output)
      ++identical;
    else
      c.require(false, "outputs differ for " + args);
  }
  const Captured env_a = capture("DAVIS_SEED=5 " + bin + " bench random 300 --seed 1");
  const Captured env_b = capture("DAVIS_SEED=5 " + bin + " bench random 300 --seed 2");
  c.require(env_a.output == env_b.output, "DAVIS_SEED does not override --seed");
  c.detail << identical << "/" << commands.size()
           << " commands byte-identical across two runs (stdout, stderr and exit code)";
}

}  // namespace

int main() {
  report("oracle equivalence, exhaustive", exhaustive);
  report("oracle equivalence, randomized", randomized);
  report("pigeonhole", pigeonhole);
  report("first-order battery", first_order);
  report("unification", unification);
  report("diophantine", diophantine);
  report("determinism", determinism);
  std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
