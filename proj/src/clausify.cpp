#include "davis/clausify.hpp"

#include <algorithm>
#include <sstream>

#include "davis/error.hpp"

namespace davis {

Formula Formula::make_atom(Atom a) {
  Formula f;
  f.kind = Kind::Atom;
  f.atom = std::move(a);
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(g));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(fs);
  return f;
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  Formula f;
  f.kind = Kind::Or;
  f.children = std::move(fs);
  return f;
}

Formula Formula::implies(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Implies;
  f.children.push_back(std::move(a));
  f.children.push_back(std::move(b));
  return f;
}

Formula Formula::iff(Formula a, Formula b) {
  Formula f = implies(std::move(a), std::move(b));
  f.kind = Kind::Iff;
  return f;
}

Formula Formula::forall(std::string var, Formula body) {
  Formula f;
  f.kind = Kind::Forall;
  f.var = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

Formula Formula::exists(std::string var, Formula body) {
  Formula f = forall(std::move(var), std::move(body));
  f.kind = Kind::Exists;
  return f;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::vector<std::string> vars;
      f.atom.collect_variables(vars);
      for (const auto& v : vars)
        if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
            std::find(out.begin(), out.end(), v) == out.end())
          out.push_back(v);
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.var);
      collect_free(f.children.front(), bound, out);
      bound.pop_back();
      return;
    default:
      for (const Formula& c : f.children) collect_free(c, bound, out);
  }
}

void write_term(std::ostream& os, const Term& t) {
  if (t.args().empty()) {
    os << t.symbol();
    return;
  }
  os << '(' << t.symbol();
  for (const Term& a : t.args()) {
    os << ' ';
    write_term(os, a);
  }
  os << ')';
}

void write_formula(std::ostream& os, const Formula& f) {
  auto connective = [&](const char* name) {
    os << '(' << name;
    for (const Formula& c : f.children) {
      os << ' ';
      write_formula(os, c);
    }
    os << ')';
  };
  switch (f.kind) {
    case Formula::Kind::Atom:
      if (f.atom.args.empty()) {
        os << f.atom.predicate;
        return;
      }
      os << '(' << f.atom.predicate;
      for (const Term& t : f.atom.args) {
        os << ' ';
        write_term(os, t);
      }
      os << ')';
      return;
    case Formula::Kind::Not: return connective("not");
    case Formula::Kind::And: return connective("and");
    case Formula::Kind::Or: return connective("or");
    case Formula::Kind::Implies: return connective("imp");
    case Formula::Kind::Iff: return connective("iff");
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << '(' << (f.kind == Formula::Kind::Forall ? "forall " : "exists ") << f.var << ' ';
      write_formula(os, f.children.front());
      os << ')';
      return;
  }
}

}  // namespace

std::vector<std::string> Formula::free_variables() const {
  std::vector<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::string Formula::to_string() const {
  std::ostringstream os;
  write_formula(os, *this);
  return os.str();
}

// ---------------------------------------------------------------------------

void Signature::declare_function(const std::string& symbol, std::size_t arity) {
  auto [it, inserted] = functions_.emplace(symbol, arity);
  if (!inserted && it->second != arity)
    throw Error("arity clash on function symbol " + symbol + ": " + std::to_string(it->second) +
                " vs " + std::to_string(arity));
}

void Signature::declare_predicate(const std::string& symbol, std::size_t arity) {
  auto [it, inserted] = predicates_.emplace(symbol, arity);
  if (!inserted && it->second != arity)
    throw Error("arity clash on predicate " + symbol + ": " + std::to_string(it->second) + " vs " +
                std::to_string(arity));
}

void Signature::add(const Term& t) {
  if (t.is_variable()) return;
  declare_function(t.symbol(), t.args().size());
  for (const Term& a : t.args()) add(a);
}

void Signature::add(const Atom& a) {
  declare_predicate(a.predicate, a.args.size());
  for (const Term& t : a.args) add(t);
}

void Signature::add(const Formula& f) {
  if (f.kind == Formula::Kind::Atom) {
    add(f.atom);
    return;
  }
  for (const Formula& c : f.children) add(c);
}

std::set<std::string> Signature::symbols() const {
  std::set<std::string> out;
  for (const auto& [s, _] : functions_) out.insert(s);
  for (const auto& [s, _] : predicates_) out.insert(s);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Formula nnf(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return negated ? Formula::negation(f) : f;
    case K::Not: return nnf(f.children.front(), !negated);
    case K::And:
    case K::Or: {
      std::vector<Formula> parts;
      for (const Formula& c : f.children) parts.push_back(nnf(c, negated));
      const bool conj = (f.kind == K::And) != negated;
      return conj ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    case K::Implies: {
      const Formula& a = f.children[0];
      const Formula& b = f.children[1];
      if (negated) return Formula::conjunction({nnf(a, false), nnf(b, true)});
      return Formula::disjunction({nnf(a, true), nnf(b, false)});
    }
    case K::Iff: {
      const Formula& a = f.children[0];
      const Formula& b = f.children[1];
      if (negated)
        return Formula::disjunction({Formula::conjunction({nnf(a, false), nnf(b, true)}),
                                     Formula::conjunction({nnf(a, true), nnf(b, false)})});
      return Formula::conjunction({Formula::disjunction({nnf(a, true), nnf(b, false)}),
                                   Formula::disjunction({nnf(b, true), nnf(a, false)})});
    }
    case K::Forall:
    case K::Exists: {
      const bool universal = (f.kind == K::Forall) != negated;
      Formula body = nnf(f.children.front(), negated);
      return universal ? Formula::forall(f.var, std::move(body))
                       : Formula::exists(f.var, std::move(body));
    }
  }
  return f;
}

using Matrix = std::vector<FolClause>;

Matrix distribute(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return {FolClause{FolLiteral{true, f.atom}}};
    case K::Not: return {FolClause{FolLiteral{false, f.children.front().atom}}};
    case K::And: {
      Matrix out;
      for (const Formula& c : f.children) {
        Matrix part = distribute(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case K::Or: {
      Matrix acc{FolClause{}};
      for (const Formula& c : f.children) {
        const Matrix part = distribute(c);
        Matrix next;
        for (const FolClause& left : acc)
          for (const FolClause& right : part) {
            FolClause merged = left;
            for (const FolLiteral& l : right) merged.add(l);
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
    default: throw std::logic_error("clausify: unexpected connective after normalization");
  }
}

}  // namespace

std::string Clausifier::fresh_skolem() {
  for (;;) {
    std::string name = "sk" + std::to_string(next_skolem_++);
    if (!reserved_.contains(name)) return name;
  }
}

FolClauseSet Clausifier::clausify(const Formula& f, bool negate) {
  if (auto free = f.free_variables(); !free.empty())
    throw Error("formula is not closed: free variable " + free.front());

  const Formula normal = nnf(f, negate);

  // Rename bound variables apart and replace existentials by Skolem terms
  // over the universals governing them, outermost first.
  std::set<std::string> used;
  auto skolemize = [&](auto&& self, const Formula& g, Substitution env,
                       std::vector<Term> universals) -> Formula {
    using K = Formula::Kind;
    switch (g.kind) {
      case K::Atom: return Formula::make_atom(env.apply(g.atom));
      case K::Not: return Formula::negation(Formula::make_atom(env.apply(g.children.front().atom)));
      case K::And:
      case K::Or: {
        Formula out = g;
        for (Formula& c : out.children) c = self(self, c, env, universals);
        return out;
      }
      case K::Forall: {
        std::string name = g.var;
        for (int k = 1; used.contains(name); ++k) name = g.var + "_" + std::to_string(k);
        used.insert(name);
        env.bind(g.var, Term::variable(name));
        universals.push_back(Term::variable(name));
        return self(self, g.children.front(), std::move(env), std::move(universals));
      }
      case K::Exists: {
        env.bind(g.var, Term::application(fresh_skolem(), universals));
        return self(self, g.children.front(), std::move(env), std::move(universals));
      }
      default: throw std::logic_error("clausify: unexpected connective after normalization");
    }
  };
  const Formula matrix = skolemize(skolemize, normal, Substitution{}, {});

  FolClauseSet out;
  for (FolClause& c : distribute(matrix))
    if (!c.is_tautology()) out.add(std::move(c));
  return out;
}

FolClauseSet clausify(const Formula& f, bool negate) {
  Signature sig;
  sig.add(f);
  return Clausifier(sig.symbols()).clausify(f, negate);
}

}  // namespace davis
