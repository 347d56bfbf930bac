#include "davis/herbrand.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "davis/dpll.hpp"
#include "davis/error.hpp"

namespace davis {

std::vector<Term> herbrand_terms(const std::vector<std::string>& constants,
                                 const std::vector<std::pair<std::string, std::size_t>>& functions,
                                 int level) {
  std::vector<Term> terms;
  if (constants.empty())
    terms.push_back(Term::constant("c0"));
  else
    for (const auto& c : constants) terms.push_back(Term::constant(c));

  auto sort_unique = [](std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), term_less);
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  };
  sort_unique(terms);

  for (int k = 0; k < level; ++k) {
    std::vector<Term> next = terms;
    for (const auto& [symbol, arity] : functions) {
      if (arity == 0) continue;
      // Odometer over terms^arity.
      std::vector<std::size_t> idx(arity, 0);
      for (;;) {
        std::vector<Term> args;
        args.reserve(arity);
        for (std::size_t i : idx) args.push_back(terms[i]);
        next.push_back(Term::application(symbol, std::move(args)));
        std::size_t pos = arity;
        while (pos > 0 && ++idx[pos - 1] == terms.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    sort_unique(next);
    if (next.size() == terms.size()) break;  // fixpoint
    terms = std::move(next);
  }
  return terms;
}

namespace {

void collect_symbols(const Term& t, std::set<std::string>& constants,
                     std::map<std::string, std::size_t>& functions) {
  if (t.is_variable()) return;
  if (t.args().empty())
    constants.insert(t.symbol());
  else
    functions.emplace(t.symbol(), t.args().size());
  for (const Term& a : t.args()) collect_symbols(a, constants, functions);
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base)
      return std::numeric_limits<std::size_t>::max();
    out *= base;
  }
  return out;
}

}  // namespace

HerbrandSignature herbrand_signature(const FolClauseSet& s) {
  std::set<std::string> constants;
  std::map<std::string, std::size_t> functions;
  for (const FolClause& c : s)
    for (const FolLiteral& l : c)
      for (const Term& t : l.atom.args) collect_symbols(t, constants, functions);
  HerbrandSignature sig;
  sig.constants.assign(constants.begin(), constants.end());
  sig.functions.assign(functions.begin(), functions.end());
  return sig;
}

// ---------------------------------------------------------------------------

int AtomRegistry::id(const Atom& a) {
  auto [it, inserted] = ids_.emplace(a.to_string(), static_cast<int>(atoms_.size()) + 1);
  if (inserted) atoms_.push_back(a);
  return it->second;
}

int AtomRegistry::find(const Atom& a) const {
  auto it = ids_.find(a.to_string());
  return it == ids_.end() ? 0 : it->second;
}

FolClause AtomRegistry::decode(const Clause& c) const {
  FolClause out;
  for (Literal l : c) out.add(FolLiteral{l.positive(), atom(l.var())});
  return out;
}

GroundAbstraction ground_abstraction(const FolClauseSet& ground) {
  GroundAbstraction out;
  std::vector<Clause> clauses;
  clauses.reserve(ground.size());
  for (const FolClause& c : ground) {
    if (!c.is_ground()) throw Error("ground_abstraction: clause " + c.to_string() + " is not ground");
    std::vector<Literal> lits;
    for (const FolLiteral& l : c) {
      const int id = out.registry.id(l.atom);
      lits.emplace_back(l.positive ? id : -id);
    }
    clauses.emplace_back(std::move(lits));
  }
  out.clauses = ClauseSet(std::move(clauses));
  return out;
}

// ---------------------------------------------------------------------------

RefuteResult refute(const FolClauseSet& s, const RefuteOptions& options) {
  if (options.max_level < 0) throw Error("refute: max_level must be nonnegative");
  const HerbrandSignature sig = herbrand_signature(s);

  RefuteResult result;
  for (int level = 0; level <= options.max_level; ++level) {
    const std::vector<Term> universe = herbrand_terms(sig.constants, sig.functions, level);

    std::size_t needed = 0;
    for (const FolClause& c : s) {
      const std::size_t n = saturating_pow(universe.size(), c.variables().size());
      needed = n > std::numeric_limits<std::size_t>::max() - needed
                   ? std::numeric_limits<std::size_t>::max()
                   : needed + n;
    }
    if (needed > options.clause_cap)
      throw ResourceLimit("refute: level " + std::to_string(level) + " needs " +
                          std::to_string(needed) + " ground clauses, cap is " +
                          std::to_string(options.clause_cap));

    FolClauseSet ground;
    for (const FolClause& c : s) {
      const std::vector<std::string> vars = c.variables();
      std::vector<std::size_t> idx(vars.size(), 0);
      for (;;) {
        Substitution sigma;
        for (std::size_t i = 0; i < vars.size(); ++i) sigma.bind(vars[i], universe[idx[i]]);
        ground.add(sigma.apply(c));
        std::size_t pos = vars.size();
        while (pos > 0 && ++idx[pos - 1] == universe.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }

    GroundAbstraction abstraction = ground_abstraction(ground);
    result.level = level;
    if (dpll_solve(abstraction.clauses).is_unsat()) {
      result.outcome = RefuteResult::Outcome::Refuted;
      result.ground_clauses = std::move(ground);
      result.ground = std::move(abstraction.clauses);
      result.registry = std::move(abstraction.registry);
      return result;
    }
  }
  result.outcome = RefuteResult::Outcome::Unknown;
  return result;
}

bool linkedness_check(const ClauseSet& s) {
  std::set<int> present;
  for (const Clause& c : s)
    for (Literal l : c) present.insert(l.value());
  return std::all_of(present.begin(), present.end(),
                     [&](int v) { return present.contains(-v); });
}

ClauseSet prune_unlinked(const ClauseSet& s) {
  std::vector<Clause> clauses = s.clauses();
  for (;;) {
    std::set<int> present;
    for (const Clause& c : clauses)
      for (Literal l : c) present.insert(l.value());
    const std::size_t before = clauses.size();
    std::erase_if(clauses, [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(),
                         [&](Literal l) { return !present.contains(-l.value()); });
    });
    if (clauses.size() == before) return ClauseSet(std::move(clauses));
  }
}

}  // namespace davis
