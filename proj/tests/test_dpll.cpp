#include <gtest/gtest.h>

#include <random>

#include "davis/dp.hpp"
#include "davis/dpll.hpp"
#include "davis/error.hpp"
#include "davis/formats.hpp"
#include "oracles.hpp"

using namespace davis;

namespace {

std::vector<std::string> trace_of(const ClauseSet& s, DpllResult* result = nullptr) {
  std::vector<std::string> lines;
  DpllOptions options;
  options.on_event = [&](const TraceEvent& e) { lines.push_back(to_string(e)); };
  DpllResult r = dpll_run(s, options);
  if (result) *result = r;
  return lines;
}

}  // namespace

TEST(ChooseBranchLiteral, Examples) {
  EXPECT_EQ(choose_branch_literal(ClauseSet{{1, 2}, {-1, 2}, {-2, 3}, {2, -3}}), Literal(2));
  EXPECT_EQ(choose_branch_literal(ClauseSet{{1, -2}, {-1, 2}}), Literal(1));
  EXPECT_EQ(choose_branch_literal(ClauseSet{{1, 3}, {-1, 3}, {1, -3}, {-1, -3}}), Literal(1));
}

TEST(ChooseBranchLiteral, PrefersMoreFrequentPolarity) {
  EXPECT_EQ(choose_branch_literal(ClauseSet{{-1, 2}, {-1, -2}, {1, 3}, {-3, 2}}), Literal(-1));
}

TEST(ChooseBranchLiteral, PreconditionViolation) {
  EXPECT_THROW(choose_branch_literal(ClauseSet{{1, 2}, {1, 3}}), Error);
  EXPECT_THROW(choose_branch_literal(ClauseSet{}), Error);
}

TEST(DpllSolve, Examples) {
  Verdict v = dpll_solve(ClauseSet{});
  EXPECT_TRUE(v.is_sat());
  EXPECT_EQ(v.model.size(), 0u);

  const ClauseSet equiv{{1, -2}, {2, -1}};
  v = dpll_solve(equiv);
  ASSERT_TRUE(v.is_sat());
  EXPECT_TRUE(evaluate(equiv, v.model));
  EXPECT_TRUE(v.model == (Assignment{{1, false}, {2, false}}) ||
              v.model == (Assignment{{1, true}, {2, true}}));

  EXPECT_TRUE(dpll_solve(ClauseSet{{1}, {2}, {-1, -2}}).is_unsat());
  EXPECT_TRUE(dpll_solve(ClauseSet{{}}).is_unsat());
}

TEST(DpllSolve, TraceFormat) {
  // Units first, then the empty clause forces UNSAT with no choice point.
  DpllResult r;
  EXPECT_EQ(trace_of(ClauseSet{{1}, {2}, {-1, -2}}, &r), (std::vector<std::string>{"U 1", "U 2"}));
  EXPECT_TRUE(r.verdict.is_unsat());

  // No unit or pure literal: decide on 1, fail, backtrack to -1, fail.
  EXPECT_EQ(trace_of(ClauseSet{{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}),
            (std::vector<std::string>{"D 1", "U 2", "B -1", "U 2"}));

  EXPECT_EQ(trace_of(ClauseSet{{1, 2}, {1, -2}}), (std::vector<std::string>{"P 1"}));
}

// Replays every trace event through the clause_core primitives on explicit
// clause-set snapshots, so each rule application and each decision must be
// exactly what the reference definitions pick for the set at that point.
TEST(DpllSolve, TraceReplaysOnClauseSets) {
  struct Shadow {
    ClauseSet before;
    Literal literal;
    bool flipped;
  };
  std::mt19937_64 rng(21);
  std::size_t backtracks = 0;
  for (int i = 0; i < 1000; ++i) {
    const ClauseSet input = random_cnf(rng, {8, 30, 3});
    std::vector<Shadow> stack;
    ClauseSet current = input;
    DpllOptions options;
    options.on_event = [&](const TraceEvent& e) {
      switch (e.kind) {
        case TraceKind::Unit: {
          ASSERT_FALSE(current.has_empty_clause());
          auto step = unit_rule(current);
          ASSERT_TRUE(step);
          ASSERT_EQ(step->literal, e.literal);
          break;
        }
        case TraceKind::Pure: {
          ASSERT_FALSE(unit_rule(current));
          auto step = pure_literal_rule(current);
          ASSERT_TRUE(step);
          ASSERT_EQ(step->literal, e.literal);
          break;
        }
        case TraceKind::Decide:
          ASSERT_FALSE(unit_rule(current) || pure_literal_rule(current));
          ASSERT_EQ(choose_branch_literal(current), e.literal);
          stack.push_back({current, e.literal, false});
          break;
        case TraceKind::Backtrack:
          ASSERT_TRUE(current.has_empty_clause());
          while (!stack.empty() && stack.back().flipped) stack.pop_back();
          ASSERT_FALSE(stack.empty());
          ASSERT_EQ(stack.back().literal, -e.literal);
          stack.back().flipped = true;
          current = stack.back().before;
          ++backtracks;
          break;
      }
      current = simplify(current, e.literal);
    };
    const DpllResult r = dpll_run(input, options);
    if (r.verdict.is_sat()) {
      EXPECT_TRUE(current.empty()) << input;
    } else {
      EXPECT_TRUE(current.has_empty_clause()) << input;
      for (const Shadow& s : stack) EXPECT_TRUE(s.flipped) << input;
    }
  }
  EXPECT_GT(backtracks, 0u);
}

TEST(DpllSolve, RestoreIsExactUnderHashing) {
  std::mt19937_64 rng(22);
  DpllOptions options;
  options.verify_restore = true;
  for (int i = 0; i < 3000; ++i) {
    const ClauseSet s = random_cnf(rng, {8, 30, 3});
    EXPECT_NO_THROW(dpll_run(s, options)) << s;
  }
  for (int n = 1; n <= 5; ++n) EXPECT_NO_THROW(dpll_run(gen_pigeonhole(n), options));
}

TEST(DpllSolve, DepthBoundedByVariableCount) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    const ClauseSet s = random_cnf(rng, {8, 30, 3});
    EXPECT_LE(dpll_run(s).stats.max_depth, s.variables().size());
  }
}

TEST(DpllSolve, Deterministic) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const ClauseSet s = random_cnf(rng, {8, 30, 3});
    DpllResult a, b;
    EXPECT_EQ(trace_of(s, &a), trace_of(s, &b));
    EXPECT_EQ(a.verdict.status, b.verdict.status);
    EXPECT_EQ(a.verdict.model, b.verdict.model);
  }
}

TEST(DpllSolve, NonContiguousVariables) {
  const ClauseSet s{{100, -7}, {7}, {-100, 42}};
  const Verdict v = dpll_solve(s);
  ASSERT_TRUE(v.is_sat());
  EXPECT_EQ(v.model, (Assignment{{7, true}, {42, true}, {100, true}}));
}

TEST(DpllSolve, AgreesWithOracleAndDpExhaustively) {
  const auto pool = oracle::all_clauses(3, 3);
  oracle::for_each_clause_set(pool, 4, [&](const ClauseSet& s) {
    const Verdict oracle = brute_force_sat(s);
    const Verdict dpll = dpll_solve(s);
    ASSERT_EQ(oracle.status, dpll.status) << s;
    ASSERT_EQ(oracle.status, dp_solve(s).status) << s;
    if (dpll.is_sat()) {
      ASSERT_TRUE(evaluate(s, dpll.model)) << s;
    }
  });
}

TEST(DpllSolve, PigeonholeSmall) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(dpll_solve(gen_pigeonhole(n)).is_unsat()) << n;
}
