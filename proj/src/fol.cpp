#include "davis/fol.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "davis/error.hpp"

namespace davis {

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.symbol_ = std::move(name);
  return t;
}

Term Term::application(std::string symbol, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Application;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

bool Term::is_ground() const {
  if (is_variable()) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::contains_variable(const std::string& name) const {
  if (is_variable()) return symbol_ == name;
  return std::any_of(args_.begin(), args_.end(),
                     [&](const Term& a) { return a.contains_variable(name); });
}

int Term::depth() const {
  int d = 0;
  for (const Term& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (is_variable()) {
    if (std::find(out.begin(), out.end(), symbol_) == out.end()) out.push_back(symbol_);
    return;
  }
  for (const Term& a : args_) a.collect_variables(out);
}

namespace {

void write_args(std::ostream& os, const std::vector<Term>& args) {
  if (args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << ',';
    os << args[i];
  }
  os << ')';
}

// Printed form with variables marked, so keys distinguish a variable from a
// constant of the same name.
void write_key(std::ostream& os, const Term& t) {
  if (t.is_variable()) {
    os << '?' << t.symbol();
    return;
  }
  os << t.symbol();
  if (t.args().empty()) return;
  os << '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) os << ',';
    write_key(os, t.args()[i]);
  }
  os << ')';
}

std::string clause_key(const FolClause& c) {
  std::vector<std::string> lits;
  for (const FolLiteral& l : c) {
    std::ostringstream os;
    os << (l.positive ? '+' : '-') << l.atom.predicate << '(';
    for (const Term& t : l.atom.args) {
      write_key(os, t);
      os << ',';
    }
    os << ')';
    lits.push_back(os.str());
  }
  std::sort(lits.begin(), lits.end());
  std::string key;
  for (const auto& s : lits) key += s + '|';
  return key;
}

}  // namespace

std::string Term::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  os << t.symbol();
  write_args(os, t.args());
  return os;
}

bool term_less(const Term& a, const Term& b) {
  const int da = a.depth(), db = b.depth();
  if (da != db) return da < db;
  return a.to_string() < b.to_string();
}

// ---------------------------------------------------------------------------

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

void Atom::collect_variables(std::vector<std::string>& out) const {
  for (const Term& a : args) a.collect_variables(out);
}

std::string Atom::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  os << a.predicate;
  write_args(os, a.args);
  return os;
}

std::string FolLiteral::to_string() const { return (positive ? "" : "~") + atom.to_string(); }

// ---------------------------------------------------------------------------

FolClause::FolClause(std::initializer_list<FolLiteral> literals) {
  for (const FolLiteral& l : literals) add(l);
}

bool FolClause::add(FolLiteral l) {
  if (std::find(literals_.begin(), literals_.end(), l) != literals_.end()) return false;
  literals_.push_back(std::move(l));
  return true;
}

bool FolClause::is_ground() const {
  return std::all_of(literals_.begin(), literals_.end(),
                     [](const FolLiteral& l) { return l.atom.is_ground(); });
}

bool FolClause::is_tautology() const {
  for (const FolLiteral& l : literals_)
    if (l.positive && std::find(literals_.begin(), literals_.end(), FolLiteral{false, l.atom}) !=
                          literals_.end())
      return true;
  return false;
}

std::vector<std::string> FolClause::variables() const {
  std::vector<std::string> out;
  for (const FolLiteral& l : literals_) l.atom.collect_variables(out);
  return out;
}

std::string FolClause::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool FolClause::same_literals(const FolClause& other) const {
  if (size() != other.size()) return false;
  return std::all_of(literals_.begin(), literals_.end(), [&](const FolLiteral& l) {
    return std::find(other.begin(), other.end(), l) != other.end();
  });
}

std::ostream& operator<<(std::ostream& os, const FolClause& c) {
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c.literals()[i].to_string();
  }
  return os << '}';
}

FolClauseSet::FolClauseSet(std::initializer_list<FolClause> clauses) {
  for (const FolClause& c : clauses) add(c);
}

bool FolClauseSet::add(FolClause c) {
  if (!keys_.insert(clause_key(c)).second) return false;
  clauses_.push_back(std::move(c));
  return true;
}

void FolClauseSet::add_all(const FolClauseSet& other) {
  for (const FolClause& c : other) add(c);
}

std::string FolClauseSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FolClauseSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << s.clauses()[i];
  }
  return os << '}';
}

// ---------------------------------------------------------------------------

Substitution::Substitution(std::initializer_list<std::pair<const std::string, Term>> bindings)
    : bindings_(bindings) {}

const Term* Substitution::find(const std::string& var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_variable()) {
    const Term* bound = find(t.symbol());
    return bound ? *bound : t;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(a));
  return Term::application(t.symbol(), std::move(args));
}

Atom Substitution::apply(const Atom& a) const {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(t));
  return out;
}

FolLiteral Substitution::apply(const FolLiteral& l) const { return {l.positive, apply(l.atom)}; }

FolClause Substitution::apply(const FolClause& c) const {
  FolClause out;
  for (const FolLiteral& l : c) out.add(apply(l));
  return out;
}

Substitution Substitution::then(const Substitution& next) const {
  Substitution out;
  for (const auto& [var, t] : bindings_) {
    Term image = next.apply(t);
    if (!(image.is_variable() && image.symbol() == var)) out.bindings_.emplace(var, std::move(image));
  }
  for (const auto& [var, t] : next.bindings_)
    if (!bindings_.contains(var)) out.bindings_.emplace(var, t);
  return out;
}

bool Substitution::is_idempotent() const {
  for (const auto& [var, t] : bindings_)
    for (const auto& [other, _] : bindings_)
      if (t.contains_variable(other)) return false;
  return true;
}

std::string Substitution::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Substitution& s) {
  os << '{';
  bool first = true;
  for (const auto& [var, t] : s.bindings()) {
    if (!first) os << ", ";
    os << var << " -> " << t;
    first = false;
  }
  return os << '}';
}

// ---------------------------------------------------------------------------

namespace {

// Robinson-style unification over a worklist. The substitution is kept in
// solved form: no bound variable occurs in any binding's term.
bool unify_pairs(std::vector<std::pair<Term, Term>> work, Substitution& sigma) {
  while (!work.empty()) {
    auto [s, t] = std::move(work.back());
    work.pop_back();
    s = sigma.apply(s);
    t = sigma.apply(t);
    if (s == t) continue;
    if (!s.is_variable() && t.is_variable()) std::swap(s, t);
    if (s.is_variable()) {
      if (t.contains_variable(s.symbol())) return false;
      const Substitution single{{s.symbol(), t}};
      sigma = sigma.then(single);
      continue;
    }
    if (s.symbol() != t.symbol() || s.args().size() != t.args().size()) return false;
    for (std::size_t i = s.args().size(); i-- > 0;) work.emplace_back(s.args()[i], t.args()[i]);
  }
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution sigma;
  if (!unify_pairs({{a, b}}, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size()) return std::nullopt;
  std::vector<std::pair<Term, Term>> work;
  for (std::size_t i = a.args.size(); i-- > 0;) work.emplace_back(a.args[i], b.args[i]);
  Substitution sigma;
  if (!unify_pairs(std::move(work), sigma)) return std::nullopt;
  return sigma;
}

FolClauseSet standardize_apart(const FolClauseSet& s) {
  FolClauseSet out;
  std::size_t index = 0;
  for (const FolClause& c : s) {
    Substitution rename;
    for (const std::string& v : c.variables())
      rename.bind(v, Term::variable(v + "_" + std::to_string(index)));
    out.add(rename.apply(c));
    ++index;
  }
  return out;
}

}  // namespace davis
