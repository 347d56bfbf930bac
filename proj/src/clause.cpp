#include "davis/clause.hpp"

#include <algorithm>
#include <sstream>

#include "davis/error.hpp"

namespace davis {

Literal::Literal(int value) : value_(value) {
  if (value == 0) throw Error("literal must be nonzero");
}

std::ostream& operator<<(std::ostream& os, Literal l) { return os << l.value(); }

// ---------------------------------------------------------------------------

Clause::Clause(std::initializer_list<int> literals) {
  literals_.reserve(literals.size());
  for (int v : literals) literals_.emplace_back(v);
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

Clause Clause::from_ints(std::span<const int> literals) {
  std::vector<Literal> lits;
  lits.reserve(literals.size());
  for (int v : literals) lits.emplace_back(v);
  return Clause(std::move(lits));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::mentions(int var) const {
  Literal pos(var);
  return contains(pos) || contains(-pos);
}

bool Clause::is_tautology() const {
  // Sorted canonically, so complementary literals are adjacent.
  for (std::size_t i = 1; i < literals_.size(); ++i)
    if (literals_[i].var() == literals_[i - 1].var()) return true;
  return false;
}

Clause Clause::without(Literal l) const {
  Clause c;
  c.literals_.reserve(literals_.size());
  for (Literal m : literals_)
    if (m != l) c.literals_.push_back(m);
  return c;
}

std::strong_ordering Clause::operator<=>(const Clause& other) const {
  return std::lexicographical_compare_three_way(literals_.begin(), literals_.end(),
                                                other.literals_.begin(),
                                                other.literals_.end());
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  os << '{';
  bool first = true;
  for (Literal l : c) {
    if (!first) os << ',';
    os << l;
    first = false;
  }
  return os << '}';
}

// ---------------------------------------------------------------------------

ClauseSet::ClauseSet(std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<Clause> cs;
  cs.reserve(clauses.size());
  for (auto c : clauses) cs.emplace_back(c);
  *this = ClauseSet(std::move(cs));
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::erase_if(clauses_, [](const Clause& c) { return c.is_tautology(); });
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool ClauseSet::has_empty_clause() const {
  // The empty clause is the least element.
  return !clauses_.empty() && clauses_.front().empty();
}

bool ClauseSet::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::vector<int> ClauseSet::variables() const {
  std::vector<int> vars;
  for (const Clause& c : clauses_)
    for (Literal l : c) vars.push_back(l.var());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::size_t ClauseSet::literal_count() const {
  std::size_t n = 0;
  for (const Clause& c : clauses_) n += c.size();
  return n;
}

std::ostream& operator<<(std::ostream& os, const ClauseSet& s) {
  os << '{';
  bool first = true;
  for (const Clause& c : s) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  return os << '}';
}

std::string to_string(const ClauseSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

// ---------------------------------------------------------------------------

Assignment::Assignment(std::initializer_list<std::pair<const int, bool>> bindings) {
  for (const auto& [var, value] : bindings) bind(var, value);
}

void Assignment::bind(int var, bool value) {
  if (var <= 0) throw Error("assignment keys must be positive variable ids");
  bindings_[var] = value;
}

std::optional<bool> Assignment::value(int var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

bool Assignment::satisfies(Literal l) const {
  auto v = value(l.var());
  if (!v) throw UnboundVariable("variable " + std::to_string(l.var()) + " is unbound");
  return *v == l.positive();
}

std::ostream& operator<<(std::ostream& os, const Assignment& a) {
  os << '{';
  bool first = true;
  for (const auto& [var, value] : a.bindings()) {
    if (!first) os << ',';
    os << var << ':' << (value ? 'T' : 'F');
    first = false;
  }
  return os << '}';
}

std::string to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::Sat: return "SAT";
    case Verdict::Status::Unsat: return "UNSAT";
    case Verdict::Status::Unknown: return "UNKNOWN";
  }
  return "?";
}

// ---------------------------------------------------------------------------

ClauseSet simplify(const ClauseSet& s, Literal l) {
  std::vector<Clause> out;
  out.reserve(s.size());
  for (const Clause& c : s) {
    if (c.contains(l)) continue;
    if (c.contains(-l))
      out.push_back(c.without(-l));
    else
      out.push_back(c);
  }
  return ClauseSet(std::move(out));
}

std::optional<RuleStep> unit_rule(const ClauseSet& s) {
  std::optional<Literal> best;
  for (const Clause& c : s)
    if (c.size() == 1 && (!best || c.literals().front() < *best)) best = c.literals().front();
  if (!best) return std::nullopt;
  return RuleStep{*best, simplify(s, *best)};
}

std::optional<RuleStep> pure_literal_rule(const ClauseSet& s) {
  // Polarity mask per variable: bit 0 affirmed, bit 1 denied.
  std::map<int, unsigned> seen;
  for (const Clause& c : s)
    for (Literal l : c) seen[l.var()] |= l.positive() ? 1u : 2u;
  for (const auto& [var, mask] : seen) {
    if (mask == 3u) continue;
    Literal pure(mask == 1u ? var : -var);
    return RuleStep{pure, simplify(s, pure)};
  }
  return std::nullopt;
}

bool evaluate(const ClauseSet& s, const Assignment& a) {
  bool all = true;
  // Check every literal so that unbound variables are reported even when
  // an earlier clause already failed.
  for (const Clause& c : s) {
    bool any = false;
    for (Literal l : c) any = a.satisfies(l) || any;
    all = all && any;
  }
  return all;
}

Verdict brute_force_sat(const ClauseSet& s, std::size_t max_vars) {
  const std::vector<int> vars = s.variables();
  if (vars.size() > max_vars)
    throw ResourceLimit("truth-table oracle limited to " + std::to_string(max_vars) +
                        " variables, got " + std::to_string(vars.size()));
  const std::size_t n = vars.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment a;
    // vars[0] is the most significant position, so counting up visits
    // assignments in lexicographic order.
    for (std::size_t i = 0; i < n; ++i) a.bind(vars[i], (bits >> (n - 1 - i)) & 1u);
    if (evaluate(s, a)) return Verdict::sat(std::move(a));
  }
  return Verdict::unsat();
}

}  // namespace davis
