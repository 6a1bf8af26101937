#pragma once

#include <initializer_list>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dwsynth {

enum class FormulaKind {
  Action,  // a(x)
  Eq,      // x = y
  Lt,      // x < y
  Succ,    // x = y+1  (x is the successor of y)
  Sim,     // x ~ y
  Proc,    // ProcS(x) / ProcE(x) / ProcM(x)
  True,
  False,
  Not,
  And,
  Or,
  Exists,
  Forall,
};

enum class ProcClass { Sys, Env, Mixed };

// First-order formula over the data-word signature. Immutable tree with
// value semantics; subtrees are shared, equality is structural.
class Formula {
 public:
  Formula() : Formula(truth()) {}

  static Formula action(std::string name, std::string var);
  static Formula eq(std::string lhs, std::string rhs);
  static Formula lt(std::string lhs, std::string rhs);
  static Formula succ(std::string lhs, std::string rhs);  // lhs = rhs+1
  static Formula sim(std::string lhs, std::string rhs);
  static Formula proc(ProcClass cls, std::string var);
  static Formula truth();
  static Formula falsity();
  static Formula negation(Formula f);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  // Left folds; empty input yields the neutral element (true resp. false).
  static Formula conj_all(std::span<const Formula> fs);
  static Formula disj_all(std::span<const Formula> fs);
  static Formula conj_all(std::initializer_list<Formula> fs);
  static Formula disj_all(std::initializer_list<Formula> fs);

  FormulaKind kind() const;

  // Atom accessors (valid for the corresponding kinds only).
  const std::string& action_name() const;  // Action
  ProcClass proc_class() const;            // Proc
  const std::string& var1() const;         // Action/Proc arg, binary lhs
  const std::string& var2() const;         // binary atoms: right argument

  // Connective / quantifier accessors. Cheap: shares the subtree.
  Formula child() const;   // Not: operand; Exists/Forall: body
  Formula left() const;    // And/Or
  Formula right() const;   // And/Or
  const std::string& binder() const;  // Exists/Forall: bound variable

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // All variable names occurring in the formula (as binders or in atoms).
  std::set<std::string> variable_names() const;
  // Variables with a free occurrence.
  std::set<std::string> free_variables() const;

  std::size_t node_count() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit Formula(NodePtr node) : node_(std::move(node)) {}
  static Formula binary_atom(FormulaKind kind, std::string lhs,
                             std::string rhs);
  NodePtr node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula lhs, Formula rhs) {
  return Formula::conj(std::move(lhs), std::move(rhs));
}
inline Formula operator||(Formula lhs, Formula rhs) {
  return Formula::disj(std::move(lhs), std::move(rhs));
}
// p -> q, encoded as !p | q (the syntax has no implication connective).
inline Formula implies(Formula lhs, Formula rhs) {
  return Formula::disj(Formula::negation(std::move(lhs)), std::move(rhs));
}

}  // namespace dwsynth
