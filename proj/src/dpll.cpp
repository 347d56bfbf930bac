#include "davis/dpll.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "davis/error.hpp"

namespace davis {

std::string to_string(const TraceEvent& e) {
  return std::string(1, static_cast<char>(e.kind)) + ' ' + std::to_string(e.literal.value());
}

Literal choose_branch_literal(const ClauseSet& s) {
  std::map<int, std::pair<std::size_t, std::size_t>> occ;  // var -> (pos, neg)
  for (const Clause& c : s)
    for (Literal l : c) {
      auto& [pos, neg] = occ[l.var()];
      ++(l.positive() ? pos : neg);
    }
  int best = 0;
  std::size_t best_total = 0;
  bool best_positive = true;
  for (const auto& [var, counts] : occ) {
    const auto [pos, neg] = counts;
    if (pos == 0 || neg == 0) continue;
    if (best == 0 || pos + neg > best_total) {
      best = var;
      best_total = pos + neg;
      best_positive = pos >= neg;
    }
  }
  if (best == 0) throw Error("choose_branch_literal: no variable occurs in both polarities");
  return Literal(best_positive ? best : -best);
}

namespace {

// Working state over dense variable indices. Internal literal code is
// 2*index for the affirmed literal and 2*index+1 for its negation.
//
// A literal is present in a clause while its variable is unassigned, so
// `size_` counts unassigned literals of each unsatisfied clause and
// `lit_count_` counts the unsatisfied clauses holding each literal of an
// unassigned variable. Counters of assigned variables are frozen until the
// variable is released, which keeps undo the exact mirror of assign.
class Engine {
 public:
  Engine(const ClauseSet& s, const DpllOptions& options) : options_(options) {
    vars_ = s.variables();
    std::map<int, int> index;
    for (std::size_t i = 0; i < vars_.size(); ++i) index[vars_[i]] = static_cast<int>(i);
    const std::size_t nlits = 2 * vars_.size();
    occ_.resize(nlits);
    lit_count_.assign(nlits, 0);
    value_.assign(vars_.size(), kUnassigned);
    for (const Clause& c : s) {
      const int id = static_cast<int>(clauses_.size());
      std::vector<int> lits;
      for (Literal l : c) {
        const int code = 2 * index[l.var()] + (l.positive() ? 0 : 1);
        lits.push_back(code);
        occ_[code].push_back(id);
        ++lit_count_[code];
      }
      size_.push_back(static_cast<int>(lits.size()));
      if (lits.empty()) ++empty_count_;
      clauses_.push_back(std::move(lits));
    }
    sat_.assign(clauses_.size(), 0);
    unsat_count_ = clauses_.size();
  }

  DpllResult run() {
    DpllResult result;
    for (;;) {
      if (empty_count_ > 0) {
        if (!backtrack(result.stats)) {
          result.verdict = Verdict::unsat();
          return result;
        }
        continue;
      }
      if (unsat_count_ == 0) {
        result.verdict = Verdict::sat(model());
        return result;
      }
      if (int code = find_unit(); code >= 0) {
        emit(TraceKind::Unit, code);
        assign(code);
        ++result.stats.unit_steps;
        continue;
      }
      if (int code = find_pure(); code >= 0) {
        emit(TraceKind::Pure, code);
        assign(code);
        ++result.stats.pure_steps;
        continue;
      }
      const int code = find_branch();
      if (code < 0) throw std::logic_error("dpll: no branch literal in a non-empty set");
      ChoicePoint cp{to_literal(code), trail_.size(), false, 0};
      if (options_.verify_restore) cp.state_hash = hash();
      choices_.push_back(cp);
      ++result.stats.decisions;
      result.stats.max_depth = std::max(result.stats.max_depth, choices_.size());
      emit(TraceKind::Decide, code);
      assign(code);
    }
  }

 private:
  static constexpr signed char kUnassigned = -1;

  static int negate(int code) { return code ^ 1; }
  static int var_of(int code) { return code >> 1; }

  Literal to_literal(int code) const {
    const int v = vars_[var_of(code)];
    return Literal((code & 1) ? -v : v);
  }

  int to_code(Literal l) const {
    const auto it = std::lower_bound(vars_.begin(), vars_.end(), l.var());
    return 2 * static_cast<int>(it - vars_.begin()) + (l.positive() ? 0 : 1);
  }

  void emit(TraceKind kind, int code) {
    if (options_.on_event) options_.on_event(TraceEvent{kind, to_literal(code)});
  }

  void assign(int code) {
    const int var = var_of(code);
    value_[var] = static_cast<signed char>((code & 1) ? 0 : 1);
    trail_.push_back(code);
    for (int c : occ_[code]) {
      if (sat_[c]) continue;
      sat_[c] = var + 1;
      --unsat_count_;
      if (size_[c] == 0) --empty_count_;
      for (int m : clauses_[c])
        if (value_[var_of(m)] == kUnassigned) --lit_count_[m];
    }
    for (int c : occ_[negate(code)]) {
      if (sat_[c]) continue;
      if (--size_[c] == 0) ++empty_count_;
    }
  }

  void unassign() {
    const int code = trail_.back();
    trail_.pop_back();
    const int var = var_of(code);
    for (auto it = occ_[negate(code)].rbegin(); it != occ_[negate(code)].rend(); ++it) {
      const int c = *it;
      if (sat_[c]) continue;
      if (size_[c]++ == 0) --empty_count_;
    }
    for (auto it = occ_[code].rbegin(); it != occ_[code].rend(); ++it) {
      const int c = *it;
      if (sat_[c] != var + 1) continue;
      sat_[c] = 0;
      ++unsat_count_;
      if (size_[c] == 0) ++empty_count_;
      for (int m : clauses_[c])
        if (var_of(m) != var && value_[var_of(m)] == kUnassigned) ++lit_count_[m];
    }
    value_[var] = kUnassigned;
  }

  bool backtrack(DpllStats& stats) {
    while (!choices_.empty()) {
      ChoicePoint& cp = choices_.back();
      while (trail_.size() > cp.trail_mark) unassign();
      if (options_.verify_restore && hash() != cp.state_hash)
        throw std::logic_error("dpll: state after backtrack differs from choice-point snapshot");
      if (!cp.flipped) {
        cp.flipped = true;
        ++stats.backtracks;
        const int code = negate(to_code(cp.literal));
        emit(TraceKind::Backtrack, code);
        assign(code);
        return true;
      }
      choices_.pop_back();
    }
    return false;
  }

  int find_unit() const {
    int best = -1;
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (sat_[c] || size_[c] != 1) continue;
      for (int m : clauses_[c]) {
        if (value_[var_of(m)] != kUnassigned) continue;
        if (best < 0 || m < best) best = m;
        break;
      }
    }
    return best;
  }

  int find_pure() const {
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (value_[v] != kUnassigned) continue;
      const int pos = static_cast<int>(2 * v);
      const bool has_pos = lit_count_[pos] > 0;
      const bool has_neg = lit_count_[pos + 1] > 0;
      if (has_pos != has_neg) return has_pos ? pos : pos + 1;
    }
    return -1;
  }

  // Counts occurrences over the current clause set with duplicates
  // collapsed, matching choose_branch_literal on the simplified set.
  int find_branch() const {
    std::vector<std::vector<int>> active;
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (sat_[c]) continue;
      std::vector<int> present;
      for (int m : clauses_[c])
        if (value_[var_of(m)] == kUnassigned) present.push_back(m);
      std::sort(present.begin(), present.end());
      active.push_back(std::move(present));
    }
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    std::vector<long> count(2 * vars_.size(), 0);
    for (const auto& clause : active)
      for (int m : clause) ++count[m];

    int best = -1;
    long best_total = -1;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      const int pos = static_cast<int>(2 * v);
      const long p = count[pos], n = count[pos + 1];
      if (p == 0 || n == 0) continue;
      if (p + n > best_total) {
        best_total = p + n;
        best = p >= n ? pos : pos + 1;
      }
    }
    return best;
  }

  Assignment model() const {
    Assignment a;
    for (std::size_t v = 0; v < vars_.size(); ++v) a.bind(vars_[v], value_[v] == 1);
    return a;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    for (auto v : value_) mix(static_cast<std::uint64_t>(v + 1));
    for (auto s : sat_) mix(static_cast<std::uint64_t>(s));
    for (auto s : size_) mix(static_cast<std::uint64_t>(s));
    for (auto n : lit_count_) mix(static_cast<std::uint64_t>(n));
    mix(unsat_count_);
    mix(empty_count_);
    return h;
  }

  const DpllOptions& options_;
  std::vector<int> vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> size_;
  std::vector<int> lit_count_;
  std::vector<int> sat_;  // 1 + index of the satisfying variable, or 0
  std::vector<signed char> value_;
  std::size_t unsat_count_ = 0;
  std::size_t empty_count_ = 0;
  std::vector<int> trail_;
  std::vector<ChoicePoint> choices_;
};

}  // namespace

DpllResult dpll_run(const ClauseSet& s, const DpllOptions& options) {
  Engine engine(s, options);
  return engine.run();
}

}  // namespace davis
