#include "davis/dioph.hpp"

#include <algorithm>
#include <sstream>

#include "davis/error.hpp"

namespace davis {

IntExpr::IntExpr(BigInt value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = std::move(value);
  node_ = std::move(n);
}

IntExpr IntExpr::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->name = std::move(name);
  return IntExpr(std::shared_ptr<const Node>(std::move(n)));
}

IntExpr IntExpr::make(Op op, std::vector<IntExpr> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return IntExpr(std::shared_ptr<const Node>(std::move(n)));
}

IntExpr operator+(const IntExpr& a, const IntExpr& b) { return IntExpr::make(IntExpr::Op::Add, {a, b}); }
IntExpr operator-(const IntExpr& a, const IntExpr& b) { return IntExpr::make(IntExpr::Op::Sub, {a, b}); }
IntExpr operator*(const IntExpr& a, const IntExpr& b) { return IntExpr::make(IntExpr::Op::Mul, {a, b}); }
IntExpr operator-(const IntExpr& a) { return IntExpr::make(IntExpr::Op::Neg, {a}); }
IntExpr pow(const IntExpr& base, const IntExpr& exponent) {
  return IntExpr::make(IntExpr::Op::Pow, {base, exponent});
}

std::set<std::string> IntExpr::variables() const {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const IntExpr& e) -> void {
    if (e.op() == Op::Var) out.insert(e.name());
    for (const IntExpr& a : e.node_->args) self(self, a);
  };
  walk(walk, *this);
  return out;
}

bool IntExpr::is_polynomial() const {
  if (op() == Op::Pow)
    return lhs().is_polynomial() && rhs().op() == Op::Const && rhs().value() >= 0;
  return std::all_of(node_->args.begin(), node_->args.end(),
                     [](const IntExpr& a) { return a.is_polynomial(); });
}

IntExpr IntExpr::substitute(const std::string& name, const BigInt& value) const {
  if (op() == Op::Var) return name == this->name() ? IntExpr(value) : *this;
  if (node_->args.empty()) return *this;
  std::vector<IntExpr> args;
  for (const IntExpr& a : node_->args) args.push_back(a.substitute(name, value));
  return make(op(), std::move(args));
}

std::string IntExpr::to_string() const {
  switch (op()) {
    case Op::Const: return value().str();
    case Op::Var: return name();
    case Op::Neg: return "(- " + lhs().to_string() + ")";
    default: break;
  }
  const char* sym = op() == Op::Add ? "+" : op() == Op::Sub ? "-" : op() == Op::Mul ? "*" : "^";
  return std::string("(") + sym + " " + lhs().to_string() + " " + rhs().to_string() + ")";
}

// ---------------------------------------------------------------------------

namespace {

// Exponents beyond this are refused unless the base is -1, 0 or 1.
constexpr unsigned kMaxExponent = 1u << 20;

BigInt checked_pow(const BigInt& base, const BigInt& exponent) {
  if (exponent < 0) throw Error("negative exponent " + exponent.str());
  if (base == 0) return exponent == 0 ? BigInt(1) : BigInt(0);
  if (base == 1) return 1;
  if (base == -1) return (exponent % 2 == 0) ? 1 : -1;
  if (exponent > kMaxExponent) throw ResourceLimit("exponent " + exponent.str() + " too large");
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

// Postfix program with variables resolved to slots, for repeated
// evaluation inside the guessing loops.
class Program {
 public:
  Program(const IntExpr& e, const std::vector<std::string>& slots) { compile(e, slots); }

  const BigInt& run(std::span<const BigInt> values) {
    stack_.resize(code_.size());
    std::size_t top = 0;
    for (const Instr& in : code_) {
      switch (in.op) {
        case IntExpr::Op::Const: stack_[top++] = in.constant; break;
        case IntExpr::Op::Var: stack_[top++] = values[in.slot]; break;
        case IntExpr::Op::Neg: stack_[top - 1] = -stack_[top - 1]; break;
        case IntExpr::Op::Add: --top; stack_[top - 1] += stack_[top]; break;
        case IntExpr::Op::Sub: --top; stack_[top - 1] -= stack_[top]; break;
        case IntExpr::Op::Mul: --top; stack_[top - 1] *= stack_[top]; break;
        case IntExpr::Op::Pow:
          --top;
          stack_[top - 1] = checked_pow(stack_[top - 1], stack_[top]);
          break;
      }
    }
    return stack_[0];
  }

 private:
  struct Instr {
    IntExpr::Op op;
    std::size_t slot = 0;
    BigInt constant;
  };

  void compile(const IntExpr& e, const std::vector<std::string>& slots) {
    switch (e.op()) {
      case IntExpr::Op::Const: code_.push_back({e.op(), 0, e.value()}); return;
      case IntExpr::Op::Var: {
        auto it = std::find(slots.begin(), slots.end(), e.name());
        if (it == slots.end()) throw UnboundVariable("variable " + e.name() + " is unbound");
        code_.push_back({e.op(), static_cast<std::size_t>(it - slots.begin()), {}});
        return;
      }
      case IntExpr::Op::Neg:
        compile(e.lhs(), slots);
        break;
      default:
        compile(e.lhs(), slots);
        compile(e.rhs(), slots);
    }
    code_.push_back({e.op(), 0, {}});
  }

  std::vector<Instr> code_;
  std::vector<BigInt> stack_;
};

// Visits {0..bound}^width in lexicographic order until `visit` returns true.
template <typename F>
bool for_each_tuple(std::size_t width, std::uint64_t bound, F&& visit) {
  Tuple t(width, 0);
  for (;;) {
    if (visit(t)) return true;
    std::size_t pos = width;
    while (pos > 0 && t[pos - 1] == bound) t[--pos] = 0;
    if (pos == 0) return false;
    ++t[pos - 1];
  }
}

void require_arity(const DioMachine& m, std::size_t n) {
  if (n != m.params().size())
    throw Error("machine takes " + std::to_string(m.params().size()) + " parameters, got " +
                std::to_string(n));
}

}  // namespace

BigInt eval_expr(const IntExpr& e, const Env& env) {
  switch (e.op()) {
    case IntExpr::Op::Const: return e.value();
    case IntExpr::Op::Var: {
      auto it = env.find(e.name());
      if (it == env.end()) throw UnboundVariable("variable " + e.name() + " is unbound");
      return it->second;
    }
    case IntExpr::Op::Neg: return -eval_expr(e.lhs(), env);
    case IntExpr::Op::Add: return eval_expr(e.lhs(), env) + eval_expr(e.rhs(), env);
    case IntExpr::Op::Sub: return eval_expr(e.lhs(), env) - eval_expr(e.rhs(), env);
    case IntExpr::Op::Mul: return eval_expr(e.lhs(), env) * eval_expr(e.rhs(), env);
    case IntExpr::Op::Pow: return checked_pow(eval_expr(e.lhs(), env), eval_expr(e.rhs(), env));
  }
  return 0;
}

// ---------------------------------------------------------------------------

DioMachine::DioMachine(IntExpr expr, std::vector<std::string> params,
                       std::vector<std::string> unknowns,
                       std::optional<std::pair<std::string, std::string>> bounded)
    : expr_(std::move(expr)),
      params_(std::move(params)),
      unknowns_(std::move(unknowns)),
      bounded_(std::move(bounded)) {
  if (params_.empty()) throw Error("machine needs at least one parameter");
  if (unknowns_.empty()) throw Error("machine needs at least one unknown");
  std::set<std::string> declared;
  for (const auto* names : {&params_, &unknowns_})
    for (const std::string& n : *names)
      if (!declared.insert(n).second) throw Error("variable " + n + " declared twice");
  for (const std::string& v : expr_.variables())
    if (!declared.contains(v)) throw Error("variable " + v + " is not declared");
  if (bounded_) {
    const auto& [y, z] = *bounded_;
    if (y == z) throw Error("bounded variables must be distinct");
    for (const std::string* n : {&y, &z})
      if (std::find(unknowns_.begin(), unknowns_.end(), *n) == unknowns_.end())
        throw Error("bounded variable " + *n + " must be declared as an unknown");
    if (unknowns_.size() < 3) throw Error("a normal-form machine needs an unknown besides y and z");
  }
}

NddmOutcome nddm_run(const DioMachine& m, std::span<const BigInt> input, SearchBound bound) {
  require_arity(m, input.size());
  for (const BigInt& a : input)
    if (a < 0) throw Error("machine inputs must be natural numbers");
  std::vector<std::string> slots = m.params();
  slots.insert(slots.end(), m.unknowns().begin(), m.unknowns().end());
  Program program(m.expr(), slots);

  std::vector<BigInt> values(input.begin(), input.end());
  values.resize(slots.size());
  const std::size_t n = input.size();
  NddmOutcome out;
  out.accepted = for_each_tuple(m.unknowns().size(), bound.max, [&](const Tuple& x) {
    for (std::size_t i = 0; i < x.size(); ++i) values[n + i] = x[i];
    if (program.run(values) != 0) return false;
    out.witness = x;
    return true;
  });
  return out;
}

NddmOutcome nddm_run(const DioMachine& m, const Tuple& input, SearchBound bound) {
  std::vector<BigInt> values(input.begin(), input.end());
  return nddm_run(m, std::span<const BigInt>(values), bound);
}

std::vector<Tuple> nddm_enumerate(const DioMachine& m, std::uint64_t range, SearchBound bound) {
  std::vector<Tuple> accepted;
  for_each_tuple(m.params().size(), range, [&](const Tuple& a) {
    if (nddm_run(m, a, bound).accepted) accepted.push_back(a);
    return false;
  });
  return accepted;
}

std::size_t RepresentationReport::fatal_count() const {
  return static_cast<std::size_t>(
      std::count_if(discrepancies.begin(), discrepancies.end(),
                    [](const Discrepancy& d) { return d.kind == Discrepancy::Kind::Fatal; }));
}

std::size_t RepresentationReport::inconclusive_count() const {
  return discrepancies.size() - fatal_count();
}

RepresentationReport check_representation(const DioMachine& m, const TuplePredicate& reference,
                                          std::uint64_t range, SearchBound bound) {
  const std::vector<Tuple> accepted = nddm_enumerate(m, range, bound);
  RepresentationReport report;
  for_each_tuple(m.params().size(), range, [&](const Tuple& a) {
    const bool in_machine = std::binary_search(accepted.begin(), accepted.end(), a);
    const bool in_reference = reference(a);
    if (in_machine == in_reference)
      ++report.agreements;
    else
      report.discrepancies.push_back(
          {a, in_machine ? Discrepancy::Kind::Fatal : Discrepancy::Kind::Inconclusive});
    return false;
  });
  return report;
}

DavisOutcome davis_nf_search(const DioMachine& q, const Tuple& input, std::uint64_t z_max,
                             std::uint64_t x_bound) {
  if (!q.bounded()) throw Error("machine does not declare bounded variables y and z");
  require_arity(q, input.size());
  const auto& [y_name, z_name] = *q.bounded();

  std::vector<std::string> xs;
  for (const std::string& u : q.unknowns())
    if (u != y_name && u != z_name) xs.push_back(u);

  std::vector<std::string> slots = q.params();
  slots.insert(slots.end(), xs.begin(), xs.end());
  slots.push_back(y_name);
  slots.push_back(z_name);
  Program program(q.expr(), slots);

  std::vector<BigInt> values(slots.size());
  for (std::size_t i = 0; i < input.size(); ++i) values[i] = input[i];
  const std::size_t x0 = input.size();
  const std::size_t y_slot = slots.size() - 2, z_slot = slots.size() - 1;

  DavisOutcome out;
  for (std::uint64_t z = 0; z <= z_max; ++z) {
    values[z_slot] = z;
    std::vector<Tuple> witnesses;
    bool all = true;
    for (std::uint64_t y = 0; y <= z && all; ++y) {
      values[y_slot] = y;
      all = for_each_tuple(xs.size(), x_bound, [&](const Tuple& x) {
        for (std::size_t i = 0; i < x.size(); ++i) values[x0 + i] = x[i];
        if (program.run(values) != 0) return false;
        witnesses.push_back(x);
        return true;
      });
    }
    if (all) {
      out.holds = true;
      out.z = z;
      out.witnesses = std::move(witnesses);
      return out;
    }
    if (z == z_max) break;  // guard against wrap at UINT64_MAX
  }
  return out;
}

// ---------------------------------------------------------------------------

DioMachine library_machine(const std::string& name) {
  const IntExpr a = IntExpr::var("a"), x = IntExpr::var("x"), y = IntExpr::var("y");
  if (name == "squares") return DioMachine(a - pow(x, 2), {"a"}, {"x"});
  if (name == "composites") return DioMachine(a - (x + 2) * (y + 2), {"a"}, {"x", "y"});
  if (name == "pow2") return DioMachine(a - pow(IntExpr(2), x), {"a"}, {"x"});
  throw Error("unknown library machine " + name);
}

TuplePredicate library_predicate(const std::string& name) {
  if (name == "squares")
    return [](const Tuple& t) {
      const std::uint64_t a = t.at(0);
      std::uint64_t r = 0;
      while ((r + 1) * (r + 1) <= a) ++r;
      return r * r == a;
    };
  if (name == "composites")
    return [](const Tuple& t) {
      const std::uint64_t a = t.at(0);
      if (a < 4) return false;
      for (std::uint64_t d = 2; d * d <= a; ++d)
        if (a % d == 0) return true;
      return false;
    };
  if (name == "pow2")
    return [](const Tuple& t) {
      const std::uint64_t a = t.at(0);
      return a != 0 && (a & (a - 1)) == 0;
    };
  throw Error("unknown library predicate " + name);
}

std::vector<std::string> library_names() { return {"squares", "composites", "pow2"}; }

}  // namespace davis
