#pragma once

// Non-deterministic Diophantine machines at desk scale: exact expression
// evaluation, bounded guessing of unknowns, enumeration of accepted
// parameter tuples, and bounded search for Davis normal forms
//   a in M  <=>  exists z, forall y <= z, exists x: Q(a, x, y, z) = 0.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace davis {

using BigInt = boost::multiprecision::cpp_int;

// Immutable integer expression tree over +, -, * and ^.
class IntExpr {
 public:
  enum class Op { Const, Var, Add, Sub, Mul, Pow, Neg };

  IntExpr() : IntExpr(BigInt(0)) {}
  IntExpr(BigInt value);  // NOLINT(google-explicit-constructor)
  IntExpr(int value) : IntExpr(BigInt(value)) {}  // NOLINT(google-explicit-constructor)

  static IntExpr var(std::string name);

  Op op() const { return node_->op; }
  const BigInt& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  const IntExpr& lhs() const { return node_->args[0]; }
  const IntExpr& rhs() const { return node_->args[1]; }

  std::set<std::string> variables() const;
  // True when every exponent is a nonnegative constant.
  bool is_polynomial() const;
  IntExpr substitute(const std::string& name, const BigInt& value) const;
  std::string to_string() const;

  friend IntExpr operator+(const IntExpr& a, const IntExpr& b);
  friend IntExpr operator-(const IntExpr& a, const IntExpr& b);
  friend IntExpr operator*(const IntExpr& a, const IntExpr& b);
  friend IntExpr operator-(const IntExpr& a);
  friend IntExpr pow(const IntExpr& base, const IntExpr& exponent);

 private:
  struct Node {
    Op op = Op::Const;
    BigInt value;
    std::string name;
    std::vector<IntExpr> args;
  };

  explicit IntExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static IntExpr make(Op op, std::vector<IntExpr> args);

  std::shared_ptr<const Node> node_;
};

using Env = std::map<std::string, BigInt>;

// Exact evaluation. Throws UnboundVariable, or Error on a negative exponent,
// or ResourceLimit on an exponent too large to materialize.
BigInt eval_expr(const IntExpr& e, const Env& env);

// A parametric equation expr = 0 with parameters a1..an and unknowns
// x1..xm ranging over the naturals. `bounded`, when present, names the
// unknowns playing y and z in a Davis normal form.
class DioMachine {
 public:
  // Throws Error unless every variable of expr is declared exactly once.
  DioMachine(IntExpr expr, std::vector<std::string> params, std::vector<std::string> unknowns,
             std::optional<std::pair<std::string, std::string>> bounded = std::nullopt);

  const IntExpr& expr() const { return expr_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& unknowns() const { return unknowns_; }
  const std::optional<std::pair<std::string, std::string>>& bounded() const { return bounded_; }

 private:
  IntExpr expr_;
  std::vector<std::string> params_;
  std::vector<std::string> unknowns_;
  std::optional<std::pair<std::string, std::string>> bounded_;
};

// Each unknown ranges over {0..max}.
struct SearchBound {
  std::uint64_t max = 0;
};

using Tuple = std::vector<std::uint64_t>;

struct NddmOutcome {
  bool accepted = false;
  Tuple witness;  // values of the unknowns, in declaration order
};

// Guesses unknown tuples in lexicographic order and accepts on the first
// zero. A miss means "not within bound", never "rejected".
NddmOutcome nddm_run(const DioMachine& m, std::span<const BigInt> input, SearchBound bound);
NddmOutcome nddm_run(const DioMachine& m, const Tuple& input, SearchBound bound);

// Parameter tuples in {0..range}^n accepted at `bound`, lexicographic.
std::vector<Tuple> nddm_enumerate(const DioMachine& m, std::uint64_t range, SearchBound bound);

struct Discrepancy {
  enum class Kind { Fatal, Inconclusive };
  Tuple tuple;
  Kind kind;
};

struct RepresentationReport {
  std::size_t agreements = 0;
  std::vector<Discrepancy> discrepancies;

  std::size_t fatal_count() const;
  std::size_t inconclusive_count() const;
};

using TuplePredicate = std::function<bool(const Tuple&)>;

// Compares enumeration against a decidable reference. Accepted tuples the
// reference rejects are Fatal; reference members not accepted at this bound
// are Inconclusive.
RepresentationReport check_representation(const DioMachine& m, const TuplePredicate& reference,
                                          std::uint64_t range, SearchBound bound);

struct DavisOutcome {
  bool holds = false;
  std::uint64_t z = 0;
  std::vector<Tuple> witnesses;  // x-tuple for each y = 0..z
};

// Searches z = 0..z_max for one where every y <= z has an x-tuple in
// {0..x_bound}^m zeroing the machine. The machine must declare `bounded`.
DavisOutcome davis_nf_search(const DioMachine& q, const Tuple& input, std::uint64_t z_max,
                             std::uint64_t x_bound);

// Library machines over a single parameter `a`: "squares" (a - x^2),
// "composites" (a - (x+2)(y+2)) and "pow2" (a - 2^x).
DioMachine library_machine(const std::string& name);
TuplePredicate library_predicate(const std::string& name);
std::vector<std::string> library_names();

}  // namespace davis
