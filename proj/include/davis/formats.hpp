#pragma once

// Text formats (DIMACS CNF, first-order problem files, machine files) and
// instance generators.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "davis/clausify.hpp"
#include "davis/clause.hpp"
#include "davis/dioph.hpp"

namespace davis {

struct DimacsFile {
  ClauseSet clauses;
  int declared_vars = 0;
  std::vector<std::string> warnings;
};

// Throws ParseError on a malformed header, a clause before the header, or
// a literal exceeding the declared variable count. A clause-count mismatch
// is only a warning.
DimacsFile parse_dimacs(std::string_view text);

// "p cnf <max var> <clauses>" followed by one 0-terminated line per clause.
std::string render_dimacs(const ClauseSet& s);

struct FolProblem {
  std::vector<Formula> axioms;
  Formula conjecture;
  Signature signature;
};

// One sentence per line, tagged "axiom:" or "conjecture:"; blank lines and
// lines starting with '#' or ';' are skipped. Symbols bound by an enclosing
// quantifier are variables, every other symbol is a constant or function.
FolProblem parse_fol(std::string_view text);

Formula parse_formula(std::string_view text, int line = 0);

// Clauses of the axioms together with the negated conjecture, Skolemized
// with one shared counter.
FolClauseSet problem_clauses(const FolProblem& problem);

// Prefix syntax: (+ a b ...), (- a b), (- a), (* a b ...), (^ b e),
// integer literals and names.
IntExpr parse_int_expr(std::string_view text, int line = 0);

// Header lines "params: ...", "unknowns: ...", optional "bounded: y z",
// then "expr: (...)".
DioMachine parse_machine(std::string_view text);

// n+1 pigeons in n holes; pigeon i in hole j is variable (i-1)*n + j.
// Throws Error for n < 1.
ClauseSet gen_pigeonhole(int n);

struct RandomCnfShape {
  int max_vars = 6;
  int max_clauses = 20;
  int max_width = 3;
};

ClauseSet random_cnf(std::mt19937_64& rng, const RandomCnfShape& shape = {});

}  // namespace davis
