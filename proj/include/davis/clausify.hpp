#pragma once

// First-order formulas and their conversion to clause form: negation normal
// form, Skolemization, and distribution of disjunction over conjunction.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "davis/fol.hpp"

namespace davis {

struct Formula {
  enum class Kind { Atom, Not, And, Or, Implies, Iff, Forall, Exists };

  Kind kind = Kind::Atom;
  Atom atom;                      // Kind::Atom
  std::string var;                // quantifiers
  std::vector<Formula> children;  // connectives and quantifier bodies

  static Formula make_atom(Atom a);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  // Variables occurring outside the scope of a binding quantifier.
  std::vector<std::string> free_variables() const;
  // Prefix syntax, e.g. (forall x (imp (P x) (Q x))).
  std::string to_string() const;
};

// Arities of function and predicate symbols; a symbol keeps one arity.
class Signature {
 public:
  // Both throw Error on an arity clash.
  void declare_function(const std::string& symbol, std::size_t arity);
  void declare_predicate(const std::string& symbol, std::size_t arity);

  void add(const Term& t);
  void add(const Atom& a);
  void add(const Formula& f);

  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }
  std::set<std::string> symbols() const;

 private:
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

// Clausifies sentences one after another, numbering Skolem symbols
// sk0, sk1, ... across all of them and skipping reserved names.
class Clausifier {
 public:
  explicit Clausifier(std::set<std::string> reserved = {}) : reserved_(std::move(reserved)) {}

  // Throws Error if `f` has free variables.
  FolClauseSet clausify(const Formula& f, bool negate);

 private:
  std::string fresh_skolem();

  std::set<std::string> reserved_;
  int next_skolem_ = 0;
};

FolClauseSet clausify(const Formula& f, bool negate);

}  // namespace davis
