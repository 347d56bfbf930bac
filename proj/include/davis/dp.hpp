#pragma once

// The 1960 Davis-Putnam procedure: unit and pure-literal rules plus the
// rule for eliminating atomic formulas in place of splitting.

#include <cstddef>
#include <vector>

#include "davis/clause.hpp"

namespace davis {

// One application of the elimination rule on `var`, keeping the clause
// groups that mentioned it so a model can be rebuilt afterwards.
struct EliminationStep {
  int var = 0;
  std::vector<Clause> positive;  // clauses containing var
  std::vector<Clause> negative;  // clauses containing -var
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
};

struct DpStats {
  std::size_t peak_clauses = 0;
  std::size_t peak_literals = 0;
  std::size_t eliminations = 0;
  std::size_t unit_steps = 0;
  std::size_t pure_steps = 0;
};

struct DpOptions {
  // Abort with ResourceLimit once the working set exceeds this many
  // clauses; zero means unlimited.
  std::size_t clause_limit = 0;
};

struct DpResult {
  Verdict verdict;
  EliminationTrace trace;
  DpStats stats;
};

// Replaces every clause mentioning p by the non-tautological resolvents on p.
// Throws Error for p <= 0.
ClauseSet eliminate_atom(const ClauseSet& s, int p);

DpResult dp_run(const ClauseSet& s, const DpOptions& options = {});

inline Verdict dp_solve(const ClauseSet& s) { return dp_run(s).verdict; }

}  // namespace davis
