#pragma once

// Propositional clause sets encoded as sets of nonzero integers, the
// simplification primitive, the unit and pure-literal rules, and a
// truth-table oracle.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace davis {

// A nonzero integer: positive affirms variable |v|, negative denies it.
class Literal {
 public:
  constexpr Literal() = default;
  explicit Literal(int value);

  constexpr int value() const { return value_; }
  constexpr int var() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool positive() const { return value_ > 0; }

  constexpr Literal operator-() const {
    Literal l;
    l.value_ = -value_;
    return l;
  }

  constexpr bool operator==(const Literal&) const = default;

  // Canonical order: by variable, the affirmed literal first.
  friend constexpr std::strong_ordering operator<=>(Literal a, Literal b) {
    if (auto c = a.var() <=> b.var(); c != 0) return c;
    return b.positive() <=> a.positive();
  }

 private:
  int value_ = 1;
};

std::ostream& operator<<(std::ostream& os, Literal l);

// A finite set of literals, kept sorted in canonical order.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<int> literals);
  explicit Clause(std::vector<Literal> literals);

  static Clause from_ints(std::span<const int> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool contains(Literal l) const;
  bool mentions(int var) const;
  bool is_tautology() const;
  Clause without(Literal l) const;

  bool operator==(const Clause&) const = default;
  std::strong_ordering operator<=>(const Clause& other) const;

 private:
  std::vector<Literal> literals_;
};

std::ostream& operator<<(std::ostream& os, const Clause& c);

// A finite set of clauses. Tautologies are dropped and duplicates
// collapsed on construction, so every instance is normalized.
class ClauseSet {
 public:
  ClauseSet() = default;
  ClauseSet(std::initializer_list<std::initializer_list<int>> clauses);
  explicit ClauseSet(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  bool has_empty_clause() const;
  bool contains(const Clause& c) const;
  // Distinct variables, ascending.
  std::vector<int> variables() const;
  // Total literal occurrences.
  std::size_t literal_count() const;

  bool operator==(const ClauseSet&) const = default;

 private:
  std::vector<Clause> clauses_;
};

std::ostream& operator<<(std::ostream& os, const ClauseSet& s);
std::string to_string(const ClauseSet& s);

// Partial map from positive variable ids to truth values.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const int, bool>> bindings);

  void bind(int var, bool value);
  // Makes the literal true.
  void assign(Literal l) { bind(l.var(), l.positive()); }

  std::optional<bool> value(int var) const;
  bool contains(int var) const { return bindings_.contains(var); }
  // Throws UnboundVariable when the literal's variable is unbound.
  bool satisfies(Literal l) const;

  const std::map<int, bool>& bindings() const { return bindings_; }
  std::size_t size() const { return bindings_.size(); }

  bool operator==(const Assignment&) const = default;

 private:
  std::map<int, bool> bindings_;
};

std::ostream& operator<<(std::ostream& os, const Assignment& a);

struct Verdict {
  enum class Status { Sat, Unsat, Unknown };

  Status status = Status::Unknown;
  Assignment model;    // meaningful for Sat only
  std::string reason;  // meaningful for Unknown only

  static Verdict sat(Assignment model) { return {Status::Sat, std::move(model), {}}; }
  static Verdict unsat() { return {Status::Unsat, {}, {}}; }
  static Verdict unknown(std::string reason) { return {Status::Unknown, {}, std::move(reason)}; }

  bool is_sat() const { return status == Status::Sat; }
  bool is_unsat() const { return status == Status::Unsat; }
};

std::string to_string(Verdict::Status status);

// A literal chosen by a deterministic rule together with the set it leaves.
struct RuleStep {
  Literal literal;
  ClauseSet result;
};

// Removes the clauses containing l and deletes -l from the rest.
ClauseSet simplify(const ClauseSet& s, Literal l);

// Fires on the singleton with the smallest variable, affirmed first.
std::optional<RuleStep> unit_rule(const ClauseSet& s);

// Fires on the smallest pure literal, affirmed first.
std::optional<RuleStep> pure_literal_rule(const ClauseSet& s);

// Throws UnboundVariable if some variable of s is not bound by a.
bool evaluate(const ClauseSet& s, const Assignment& a);

inline constexpr std::size_t kDefaultOracleCap = 20;

// Exhaustive truth-table search. Returns the lexicographically first
// satisfying total assignment (smaller variables more significant, false
// before true). Throws ResourceLimit above `max_vars` variables.
Verdict brute_force_sat(const ClauseSet& s, std::size_t max_vars = kDefaultOracleCap);

}  // namespace davis
