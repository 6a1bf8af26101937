#include "dwsynth/formula.hpp"

#include <cassert>

namespace dwsynth {

struct Formula::Node {
  FormulaKind kind;
  std::string name;    // action name, or bound variable for quantifiers
  std::string v1, v2;  // atom arguments
  ProcClass pclass = ProcClass::Sys;
  NodePtr a, b;        // a: operand/body/left, b: right
};

Formula Formula::action(std::string name, std::string var) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Action;
  n->name = std::move(name);
  n->v1 = std::move(var);
  return Formula(std::move(n));
}

Formula Formula::binary_atom(FormulaKind kind, std::string lhs,
                             std::string rhs) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->v1 = std::move(lhs);
  n->v2 = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::eq(std::string lhs, std::string rhs) {
  return binary_atom(FormulaKind::Eq, std::move(lhs), std::move(rhs));
}
Formula Formula::lt(std::string lhs, std::string rhs) {
  return binary_atom(FormulaKind::Lt, std::move(lhs), std::move(rhs));
}
Formula Formula::succ(std::string lhs, std::string rhs) {
  return binary_atom(FormulaKind::Succ, std::move(lhs), std::move(rhs));
}
Formula Formula::sim(std::string lhs, std::string rhs) {
  return binary_atom(FormulaKind::Sim, std::move(lhs), std::move(rhs));
}

Formula Formula::proc(ProcClass cls, std::string var) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Proc;
  n->pclass = cls;
  n->v1 = std::move(var);
  return Formula(std::move(n));
}

Formula Formula::truth() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::True;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::falsity() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::False;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->a = std::move(f.node_);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::And;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Or;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Exists;
  n->name = std::move(var);
  n->a = std::move(body.node_);
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Forall;
  n->name = std::move(var);
  n->a = std::move(body.node_);
  return Formula(std::move(n));
}

Formula Formula::conj_all(std::span<const Formula> fs) {
  if (fs.empty()) return truth();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula Formula::disj_all(std::span<const Formula> fs) {
  if (fs.empty()) return falsity();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

Formula Formula::conj_all(std::initializer_list<Formula> fs) {
  return conj_all(std::span<const Formula>(fs.begin(), fs.size()));
}

Formula Formula::disj_all(std::initializer_list<Formula> fs) {
  return disj_all(std::span<const Formula>(fs.begin(), fs.size()));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::action_name() const {
  assert(node_->kind == FormulaKind::Action);
  return node_->name;
}

ProcClass Formula::proc_class() const {
  assert(node_->kind == FormulaKind::Proc);
  return node_->pclass;
}

const std::string& Formula::var1() const { return node_->v1; }
const std::string& Formula::var2() const { return node_->v2; }

Formula Formula::child() const {
  assert(node_->kind == FormulaKind::Not ||
         node_->kind == FormulaKind::Exists ||
         node_->kind == FormulaKind::Forall);
  return Formula(node_->a);
}

Formula Formula::left() const {
  assert(node_->kind == FormulaKind::And || node_->kind == FormulaKind::Or);
  return Formula(node_->a);
}

Formula Formula::right() const {
  assert(node_->kind == FormulaKind::And || node_->kind == FormulaKind::Or);
  return Formula(node_->b);
}

const std::string& Formula::binder() const {
  assert(node_->kind == FormulaKind::Exists ||
         node_->kind == FormulaKind::Forall);
  return node_->name;
}

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Action:
      return x->name == y->name && x->v1 == y->v1;
    case FormulaKind::Proc:
      return x->pclass == y->pclass && x->v1 == y->v1;
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Succ:
    case FormulaKind::Sim:
      return x->v1 == y->v1 && x->v2 == y->v2;
    case FormulaKind::Not:
      return Formula(x->a) == Formula(y->a);
    case FormulaKind::And:
    case FormulaKind::Or:
      return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return x->name == y->name && Formula(x->a) == Formula(y->a);
  }
  return false;
}

namespace {

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Action:
    case FormulaKind::Proc:
      out.insert(f.var1());
      return;
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Succ:
    case FormulaKind::Sim:
      out.insert(f.var1());
      out.insert(f.var2());
      return;
    case FormulaKind::Not:
      collect_names(f.child(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_names(f.left(), out);
      collect_names(f.right(), out);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out.insert(f.binder());
      collect_names(f.child(), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Action:
    case FormulaKind::Proc:
      if (!bound.count(f.var1())) out.insert(f.var1());
      return;
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Succ:
    case FormulaKind::Sim:
      if (!bound.count(f.var1())) out.insert(f.var1());
      if (!bound.count(f.var2())) out.insert(f.var2());
      return;
    case FormulaKind::Not:
      collect_free(f.child(), bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool was_bound = bound.count(f.binder()) > 0;
      bound.insert(f.binder());
      collect_free(f.child(), bound, out);
      if (!was_bound) bound.erase(f.binder());
      return;
    }
  }
}

std::size_t count_nodes(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Not:
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 1 + count_nodes(f.child());
    case FormulaKind::And:
    case FormulaKind::Or:
      return 1 + count_nodes(f.left()) + count_nodes(f.right());
    default:
      return 1;
  }
}

}  // namespace

std::set<std::string> Formula::variable_names() const {
  std::set<std::string> out;
  collect_names(*this, out);
  return out;
}

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::size_t Formula::node_count() const { return count_nodes(*this); }

}  // namespace dwsynth
