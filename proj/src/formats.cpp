#include "davis/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "davis/error.hpp"
#include "davis/sexpr.hpp"

namespace davis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

bool parse_int(std::string_view word, long long& out) {
  if (!word.empty() && word.front() == '+') word.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

}  // namespace

// ---------------------------------------------------------------------------

DimacsFile parse_dimacs(std::string_view text) {
  DimacsFile file;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == 'c') continue;
    if (line.front() == '%') break;  // SATLIB end marker
    if (line.front() == 'p') {
      if (have_header) throw ParseError("duplicate header", line_no);
      const auto words = split_words(line);
      long long nv = 0, nc = 0;
      if (words.size() != 4 || words[0] != "p" || words[1] != "cnf" || !parse_int(words[2], nv) ||
          !parse_int(words[3], nc) || nv < 0 || nc < 0)
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", line_no);
      if (nv > 1'000'000'000) throw ParseError("variable count out of range", line_no);
      file.declared_vars = static_cast<int>(nv);
      declared_clauses = nc;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before 'p cnf' header", line_no);
    for (std::string_view word : split_words(line)) {
      long long v = 0;
      if (!parse_int(word, v)) throw ParseError("bad literal '" + std::string(word) + "'", line_no);
      if (v == 0) {
        clauses.emplace_back(std::move(current));
        current.clear();
        continue;
      }
      if (v > file.declared_vars || -v > file.declared_vars)
        throw ParseError("literal " + std::to_string(v) + " exceeds declared variable count " +
                             std::to_string(file.declared_vars),
                         line_no);
      current.emplace_back(static_cast<int>(v));
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header", 0);
  if (!current.empty()) {
    file.warnings.push_back("last clause not terminated by 0");
    clauses.emplace_back(std::move(current));
  }
  if (static_cast<long long>(clauses.size()) != declared_clauses)
    file.warnings.push_back("header declares " + std::to_string(declared_clauses) +
                            " clauses, found " + std::to_string(clauses.size()));
  file.clauses = ClauseSet(std::move(clauses));
  return file;
}

std::string render_dimacs(const ClauseSet& s) {
  const auto vars = s.variables();
  std::ostringstream os;
  os << "p cnf " << (vars.empty() ? 0 : vars.back()) << ' ' << s.size() << '\n';
  for (const Clause& c : s) {
    for (Literal l : c) os << l.value() << ' ';
    os << "0\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

class FormulaReader {
 public:
  explicit FormulaReader(int line) : line_(line) {}

  Formula formula(const SExpr& e) {
    if (e.is_atom()) return Formula::make_atom(Atom{symbol(e.atom), {}});
    if (e.items.empty()) fail("empty list");
    const SExpr& head = e.items.front();
    if (!head.is_atom()) fail("expected a connective or predicate, got " + head.to_string());
    const std::string& op = head.atom;
    const std::size_t n = e.items.size() - 1;

    if (op == "not") {
      arity(op, n, 1);
      return Formula::negation(formula(e.items[1]));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(formula(e.items[i]));
      return op == "and" ? Formula::conjunction(std::move(parts))
                         : Formula::disjunction(std::move(parts));
    }
    if (op == "imp" || op == "iff") {
      arity(op, n, 2);
      Formula a = formula(e.items[1]);
      Formula b = formula(e.items[2]);
      return op == "imp" ? Formula::implies(std::move(a), std::move(b))
                         : Formula::iff(std::move(a), std::move(b));
    }
    if (op == "forall" || op == "exists") {
      arity(op, n, 2);
      std::vector<std::string> vars;
      const SExpr& binder = e.items[1];
      if (binder.is_atom())
        vars.push_back(symbol(binder.atom));
      else
        for (const SExpr& v : binder.items) {
          if (!v.is_atom()) fail("quantified variable must be a name");
          vars.push_back(symbol(v.atom));
        }
      if (vars.empty()) fail(op + " binds no variables");
      for (const auto& v : vars) bound_.push_back(v);
      Formula body = formula(e.items[2]);
      for (std::size_t i = 0; i < vars.size(); ++i) bound_.pop_back();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = op == "forall" ? Formula::forall(*it, std::move(body))
                              : Formula::exists(*it, std::move(body));
      return body;
    }
    Atom atom{symbol(op), {}};
    for (std::size_t i = 1; i < e.items.size(); ++i) atom.args.push_back(term(e.items[i]));
    return Formula::make_atom(std::move(atom));
  }

 private:
  Term term(const SExpr& e) {
    if (e.is_atom()) {
      const std::string name = symbol(e.atom);
      if (std::find(bound_.begin(), bound_.end(), name) != bound_.end())
        return Term::variable(name);
      return Term::constant(name);
    }
    if (e.items.size() < 2 || !e.items.front().is_atom())
      fail("expected a function application, got " + e.to_string());
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    return Term::application(symbol(e.items.front().atom), std::move(args));
  }

  std::string symbol(const std::string& s) {
    if (!is_identifier(s)) fail("bad symbol '" + s + "'");
    return s;
  }

  void arity(const std::string& op, std::size_t got, std::size_t want) {
    if (got != want)
      fail(op + " takes " + std::to_string(want) + " arguments, got " + std::to_string(got));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  int line_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, int line) {
  return FormulaReader(line).formula(parse_sexpr(text, line));
}

FolProblem parse_fol(std::string_view text) {
  FolProblem problem;
  int conjectures = 0;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'axiom:' or 'conjecture:'", line_no);
    const std::string_view role = trim(line.substr(0, colon));
    Formula f = parse_formula(line.substr(colon + 1), line_no);
    try {
      problem.signature.add(f);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (role == "axiom") {
      problem.axioms.push_back(std::move(f));
    } else if (role == "conjecture") {
      if (++conjectures > 1) throw ParseError("multiple conjectures", line_no);
      problem.conjecture = std::move(f);
    } else {
      throw ParseError("unknown role '" + std::string(role) + "'", line_no);
    }
  }
  if (conjectures == 0) throw ParseError("no conjecture", 0);
  return problem;
}

FolClauseSet problem_clauses(const FolProblem& problem) {
  Clausifier clausifier(problem.signature.symbols());
  FolClauseSet out;
  for (const Formula& axiom : problem.axioms) out.add_all(clausifier.clausify(axiom, false));
  out.add_all(clausifier.clausify(problem.conjecture, true));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

IntExpr int_expr(const SExpr& e, int line) {
  if (e.is_atom()) {
    const std::string& s = e.atom;
    const std::size_t digits = !s.empty() && s.front() == '-' ? 1 : 0;
    const bool numeric = s.size() > digits &&
                         std::all_of(s.begin() + digits, s.end(), [](char c) {
                           return std::isdigit(static_cast<unsigned char>(c));
                         });
    if (numeric) return IntExpr(BigInt(s));
    if (!is_identifier(s) || std::isdigit(static_cast<unsigned char>(s.front())))
      throw ParseError("bad name '" + s + "'", line);
    return IntExpr::var(s);
  }
  if (e.items.empty() || !e.items.front().is_atom())
    throw ParseError("expected an operator in " + e.to_string(), line);
  const std::string& op = e.items.front().atom;
  std::vector<IntExpr> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(int_expr(e.items[i], line));
  if (op == "-" && args.size() == 1) return -args[0];
  if ((op == "-" || op == "^") && args.size() != 2)
    throw ParseError("'" + op + "' takes two operands", line);
  if ((op == "+" || op == "*") && args.size() < 2)
    throw ParseError("'" + op + "' takes at least two operands", line);
  if (op == "^") return pow(args[0], args[1]);
  if (op == "-") return args[0] - args[1];
  if (op != "+" && op != "*") throw ParseError("unknown operator '" + op + "'", line);
  IntExpr acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = op == "+" ? acc + args[i] : acc * args[i];
  return acc;
}

std::vector<std::string> names(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view w : split_words(s)) {
    std::string n(w);
    if (!n.empty() && n.back() == ',') n.pop_back();
    if (!n.empty()) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

IntExpr parse_int_expr(std::string_view text, int line) {
  return int_expr(parse_sexpr(text, line), line);
}

DioMachine parse_machine(std::string_view text) {
  std::optional<std::vector<std::string>> params, unknowns, bounded;
  std::optional<IntExpr> expr;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line_no);
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = line.substr(colon + 1);
    auto once = [&](auto& slot) {
      if (slot) throw ParseError("duplicate '" + std::string(key) + "'", line_no);
    };
    if (key == "params") {
      once(params);
      params = names(value);
    } else if (key == "unknowns") {
      once(unknowns);
      unknowns = names(value);
    } else if (key == "bounded") {
      once(bounded);
      bounded = names(value);
      if (bounded->size() != 2) throw ParseError("'bounded' names exactly y and z", line_no);
    } else if (key == "expr") {
      once(expr);
      expr = parse_int_expr(value, line_no);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  if (!params || !unknowns || !expr) throw ParseError("machine needs params, unknowns and expr", 0);
  std::optional<std::pair<std::string, std::string>> yz;
  if (bounded) yz = std::pair{(*bounded)[0], (*bounded)[1]};
  try {
    return DioMachine(*expr, *params, *unknowns, yz);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

// ---------------------------------------------------------------------------

ClauseSet gen_pigeonhole(int n) {
  if (n < 1) throw Error("pigeonhole needs at least one hole");
  auto p = [n](int pigeon, int hole) { return (pigeon - 1) * n + hole; };
  std::vector<Clause> clauses;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<Literal> lits;
    for (int j = 1; j <= n; ++j) lits.emplace_back(p(i, j));
    clauses.emplace_back(std::move(lits));
  }
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n + 1; ++i)
      for (int k = i + 1; k <= n + 1; ++k) clauses.push_back(Clause{-p(i, j), -p(k, j)});
  return ClauseSet(std::move(clauses));
}

ClauseSet random_cnf(std::mt19937_64& rng, const RandomCnfShape& shape) {
  std::uniform_int_distribution<int> nvars(1, shape.max_vars);
  std::uniform_int_distribution<int> nclauses(0, shape.max_clauses);
  std::uniform_int_distribution<int> width(1, shape.max_width);
  std::bernoulli_distribution sign(0.5);
  const int vars = nvars(rng);
  const int count = nclauses(rng);
  std::uniform_int_distribution<int> var(1, vars);
  std::vector<Clause> clauses;
  for (int c = 0; c < count; ++c) {
    const int w = width(rng);
    std::vector<Literal> lits;
    for (int k = 0; k < w; ++k) {
      const int v = var(rng);
      lits.emplace_back(sign(rng) ? v : -v);
    }
    clauses.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(clauses));
}

}  // namespace davis
