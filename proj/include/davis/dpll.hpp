#pragma once

// DPLL: unit and pure-literal rules with priority over splitting, choice
// points with one untried alternative each, chronological backtracking.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "davis/clause.hpp"

namespace davis {

enum class TraceKind : char { Decide = 'D', Backtrack = 'B', Unit = 'U', Pure = 'P' };

// For Backtrack, `literal` is the alternative now being tried.
struct TraceEvent {
  TraceKind kind;
  Literal literal;
};

std::string to_string(const TraceEvent& e);

struct ChoicePoint {
  Literal literal;            // the preferred branch
  std::size_t trail_mark = 0; // trail length before the branch
  bool flipped = false;       // -literal already attempted
  std::uint64_t state_hash = 0;
};

struct DpllStats {
  std::size_t decisions = 0;
  std::size_t backtracks = 0;
  std::size_t unit_steps = 0;
  std::size_t pure_steps = 0;
  std::size_t max_depth = 0;
};

struct DpllOptions {
  std::function<void(const TraceEvent&)> on_event;
  // Hash the working state at every choice point and check the hash after
  // each restore; throws std::logic_error on mismatch.
  bool verify_restore = false;
};

struct DpllResult {
  Verdict verdict;
  DpllStats stats;
};

// Splitting heuristic: most occurrences over both polarities, ties to the
// smallest variable; polarity by frequency, ties to affirmed. Throws Error
// when no variable occurs in both polarities.
Literal choose_branch_literal(const ClauseSet& s);

DpllResult dpll_run(const ClauseSet& s, const DpllOptions& options = {});

inline Verdict dpll_solve(const ClauseSet& s) { return dpll_run(s).verdict; }

}  // namespace davis
