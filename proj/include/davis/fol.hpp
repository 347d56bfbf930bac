#pragma once

// First-order syntax: terms, atoms, literals, clauses, substitutions and
// most-general unification.

#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

namespace davis {

class Term {
 public:
  enum class Kind { Variable, Application };

  static Term variable(std::string name);
  static Term constant(std::string name) { return application(std::move(name), {}); }
  static Term application(std::string symbol, std::vector<Term> args);

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::Variable; }
  bool is_constant() const { return kind_ == Kind::Application && args_.empty(); }
  // Variable name, or function symbol.
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_ground() const;
  bool contains_variable(const std::string& name) const;
  // Constants and variables have depth 0.
  int depth() const;
  // Appends variable names in first-occurrence order, without repeats.
  void collect_variables(std::vector<std::string>& out) const;

  std::string to_string() const;

  bool operator==(const Term&) const = default;

 private:
  Kind kind_ = Kind::Variable;
  std::string symbol_;
  std::vector<Term> args_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

// Herbrand enumeration order: by depth, then by printed form.
bool term_less(const Term& a, const Term& b);

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  void collect_variables(std::vector<std::string>& out) const;
  std::string to_string() const;

  bool operator==(const Atom&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

struct FolLiteral {
  bool positive = true;
  Atom atom;

  std::string to_string() const;
  bool operator==(const FolLiteral&) const = default;
};

// Set of literals in insertion order. Variables are implicitly universal.
class FolClause {
 public:
  FolClause() = default;
  FolClause(std::initializer_list<FolLiteral> literals);

  // Returns false if the literal was already present.
  bool add(FolLiteral l);

  const std::vector<FolLiteral>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool is_ground() const;
  bool is_tautology() const;
  std::vector<std::string> variables() const;
  std::string to_string() const;

  // Equality as sets.
  bool same_literals(const FolClause& other) const;
  bool operator==(const FolClause&) const = default;

 private:
  std::vector<FolLiteral> literals_;
};

std::ostream& operator<<(std::ostream& os, const FolClause& c);

// Set of clauses in insertion order.
class FolClauseSet {
 public:
  FolClauseSet() = default;
  FolClauseSet(std::initializer_list<FolClause> clauses);

  bool add(FolClause c);
  void add_all(const FolClauseSet& other);

  const std::vector<FolClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  std::string to_string() const;

 private:
  std::vector<FolClause> clauses_;
  std::unordered_set<std::string> keys_;
};

std::ostream& operator<<(std::ostream& os, const FolClauseSet& s);

// Finite map from variable names to terms, applied simultaneously.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> bindings);

  void bind(const std::string& var, Term t) { bindings_.insert_or_assign(var, std::move(t)); }
  const Term* find(const std::string& var) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::map<std::string, Term>& bindings() const { return bindings_; }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  FolLiteral apply(const FolLiteral& l) const;
  FolClause apply(const FolClause& c) const;

  // The substitution equivalent to applying *this and then `next`.
  Substitution then(const Substitution& next) const;

  bool is_idempotent() const;
  std::string to_string() const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> bindings_;
};

std::ostream& operator<<(std::ostream& os, const Substitution& s);

// Most general unifier, or nullopt on symbol clash or occurs-check failure.
std::optional<Substitution> unify(const Term& a, const Term& b);
std::optional<Substitution> unify(const Atom& a, const Atom& b);

// Renames the variables of each clause apart: variable v of clause i becomes
// "v_i". Leaves ground clauses unchanged.
FolClauseSet standardize_apart(const FolClauseSet& s);

}  // namespace davis
