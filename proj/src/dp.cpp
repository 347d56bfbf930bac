#include "davis/dp.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <variant>

#include "davis/error.hpp"

namespace davis {

ClauseSet eliminate_atom(const ClauseSet& s, int p) {
  if (p <= 0) throw Error("eliminate_atom: variable must be positive, got " + std::to_string(p));
  const Literal pos(p);
  std::vector<Clause> with_pos, with_neg, rest;
  for (const Clause& c : s) {
    if (c.contains(pos))
      with_pos.push_back(c.without(pos));
    else if (c.contains(-pos))
      with_neg.push_back(c.without(-pos));
    else
      rest.push_back(c);
  }
  rest.reserve(rest.size() + with_pos.size() * with_neg.size());
  for (const Clause& a : with_pos) {
    for (const Clause& b : with_neg) {
      std::vector<Literal> lits(a.begin(), a.end());
      lits.insert(lits.end(), b.begin(), b.end());
      // Tautological resolvents are dropped by the ClauseSet constructor.
      rest.emplace_back(std::move(lits));
    }
  }
  return ClauseSet(std::move(rest));
}

namespace {

struct Forced {
  Literal literal;
};

using Event = std::variant<Forced, std::size_t>;  // index into trace.steps

int pick_elimination_var(const ClauseSet& s) {
  std::map<int, std::size_t> occ;
  for (const Clause& c : s)
    for (Literal l : c) ++occ[l.var()];
  int best = 0;
  std::size_t best_count = 0;
  for (const auto& [var, count] : occ) {
    if (best == 0 || count < best_count) {
      best = var;
      best_count = count;
    }
  }
  return best;
}

bool clause_true(const Clause& c, const Assignment& a) {
  for (Literal l : c)
    if (a.satisfies(l)) return true;
  return false;
}

Assignment rebuild_model(const ClauseSet& input, const std::vector<Event>& events,
                         const EliminationTrace& trace) {
  Assignment model;
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (const auto* f = std::get_if<Forced>(&*it)) {
      model.assign(f->literal);
      continue;
    }
    const EliminationStep& step = trace.steps[std::get<std::size_t>(*it)];
    // Variables of the recorded groups that nothing later decided can never
    // be decided by an earlier event either; pin them false now.
    for (const auto* group : {&step.positive, &step.negative})
      for (const Clause& c : *group)
        for (Literal l : c)
          if (l.var() != step.var && !model.contains(l.var())) model.bind(l.var(), false);
    bool ok = false;
    for (bool value : {true, false}) {
      model.bind(step.var, value);
      ok = std::all_of(step.positive.begin(), step.positive.end(),
                       [&](const Clause& c) { return clause_true(c, model); }) &&
           std::all_of(step.negative.begin(), step.negative.end(),
                       [&](const Clause& c) { return clause_true(c, model); });
      if (ok) break;
    }
    if (!ok) throw std::logic_error("dp: no value of eliminated variable satisfies its clauses");
  }
  for (int var : input.variables())
    if (!model.contains(var)) model.bind(var, false);
  return model;
}

}  // namespace

DpResult dp_run(const ClauseSet& input, const DpOptions& options) {
  DpResult result;
  std::vector<Event> events;
  ClauseSet s = input;

  auto note_size = [&] {
    result.stats.peak_clauses = std::max(result.stats.peak_clauses, s.size());
    result.stats.peak_literals = std::max(result.stats.peak_literals, s.literal_count());
    if (options.clause_limit != 0 && s.size() > options.clause_limit)
      throw ResourceLimit("dp: working set exceeded " + std::to_string(options.clause_limit) +
                          " clauses");
  };
  note_size();

  for (;;) {
    if (s.has_empty_clause()) {
      result.verdict = Verdict::unsat();
      return result;
    }
    if (s.empty()) break;
    if (auto step = unit_rule(s)) {
      events.push_back(Forced{step->literal});
      s = std::move(step->result);
      ++result.stats.unit_steps;
      continue;
    }
    if (auto step = pure_literal_rule(s)) {
      events.push_back(Forced{step->literal});
      s = std::move(step->result);
      ++result.stats.pure_steps;
      continue;
    }
    const int p = pick_elimination_var(s);
    EliminationStep step;
    step.var = p;
    for (const Clause& c : s) {
      if (c.contains(Literal(p)))
        step.positive.push_back(c);
      else if (c.contains(Literal(-p)))
        step.negative.push_back(c);
    }
    s = eliminate_atom(s, p);
    events.push_back(result.trace.steps.size());
    result.trace.steps.push_back(std::move(step));
    ++result.stats.eliminations;
    note_size();
  }

  result.verdict = Verdict::sat(rebuild_model(input, events, result.trace));
  return result;
}

}  // namespace davis
