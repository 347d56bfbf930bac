#pragma once

// Refutation by Herbrand-level saturation: ground every clause over the
// Herbrand universe up to a level and hand the ground set to DPLL.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "davis/clause.hpp"
#include "davis/fol.hpp"

namespace davis {

// Closed terms up to `level` function applications deep, sorted by
// term_less. With no constants a fresh constant c0 is injected.
std::vector<Term> herbrand_terms(const std::vector<std::string>& constants,
                                 const std::vector<std::pair<std::string, std::size_t>>& functions,
                                 int level);

// Constants and non-constant function symbols of a clause set.
struct HerbrandSignature {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, std::size_t>> functions;
};

HerbrandSignature herbrand_signature(const FolClauseSet& s);

// Ground atoms numbered from 1 in first-seen order.
class AtomRegistry {
 public:
  int id(const Atom& a);  // registers unseen atoms
  int find(const Atom& a) const;  // 0 if unknown
  const Atom& atom(int id) const { return atoms_.at(static_cast<std::size_t>(id) - 1); }
  std::size_t size() const { return atoms_.size(); }

  FolClause decode(const Clause& c) const;

 private:
  std::vector<Atom> atoms_;
  std::unordered_map<std::string, int> ids_;
};

struct GroundAbstraction {
  ClauseSet clauses;
  AtomRegistry registry;
};

// Throws Error on a non-ground clause.
GroundAbstraction ground_abstraction(const FolClauseSet& ground);

inline constexpr std::size_t kDefaultClauseCap = 200000;

struct RefuteOptions {
  int max_level = 2;
  std::size_t clause_cap = kDefaultClauseCap;
};

struct RefuteResult {
  enum class Outcome { Refuted, Unknown };

  Outcome outcome = Outcome::Unknown;
  int level = -1;  // level of the refutation, or the last level tried
  FolClauseSet ground_clauses;
  ClauseSet ground;  // propositional abstraction of ground_clauses
  AtomRegistry registry;

  bool refuted() const { return outcome == Outcome::Refuted; }
};

// Throws ResourceLimit when a level would need more than clause_cap ground
// instances.
RefuteResult refute(const FolClauseSet& s, const RefuteOptions& options = {});

// Every literal of s also occurs negated somewhere in s.
bool linkedness_check(const ClauseSet& s);

// Repeatedly deletes clauses holding a literal whose complement occurs
// nowhere; the residue is linked.
ClauseSet prune_unlinked(const ClauseSet& s);

}  // namespace davis
