#include "dwsynth/evaluate.hpp"

#include <cstdint>

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

using Element = WordStructure::Element;

Element lookup(const Assignment& env, const std::string& var) {
  // Scopes shadow: the innermost binding was pushed last.
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == var) return it->second;
  throw InputError("unbound variable '" + var + "'");
}

bool atom_truth(const Formula& f, const WordStructure& s,
                const Assignment& env) {
  switch (f.kind()) {
    case FormulaKind::Action:
      return s.atom_action(f.action_name(), lookup(env, f.var1()));
    case FormulaKind::Proc:
      return s.atom_proc(f.proc_class(), lookup(env, f.var1()));
    case FormulaKind::Eq:
      return s.atom_eq(lookup(env, f.var1()), lookup(env, f.var2()));
    case FormulaKind::Lt:
      return s.atom_lt(lookup(env, f.var1()), lookup(env, f.var2()));
    case FormulaKind::Succ:
      return s.atom_succ(lookup(env, f.var1()), lookup(env, f.var2()));
    case FormulaKind::Sim:
      return s.atom_sim(lookup(env, f.var1()), lookup(env, f.var2()));
    default:
      throw Error("atom_truth: not an atom");
  }
}

bool eval_rec(const Formula& f, const WordStructure& s, Assignment& env) {
  switch (f.kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
    case FormulaKind::Not:
      return !eval_rec(f.child(), s, env);
    case FormulaKind::And:
      return eval_rec(f.left(), s, env) && eval_rec(f.right(), s, env);
    case FormulaKind::Or:
      return eval_rec(f.left(), s, env) || eval_rec(f.right(), s, env);
    case FormulaKind::Exists: {
      const Formula body = f.child();
      env.emplace_back(f.binder(), 0);
      for (Element e = 0; e < s.size(); ++e) {
        env.back().second = e;
        if (eval_rec(body, s, env)) {
          env.pop_back();
          return true;
        }
      }
      env.pop_back();
      return false;
    }
    case FormulaKind::Forall: {
      const Formula body = f.child();
      env.emplace_back(f.binder(), 0);
      for (Element e = 0; e < s.size(); ++e) {
        env.back().second = e;
        if (!eval_rec(body, s, env)) {
          env.pop_back();
          return false;
        }
      }
      env.pop_back();
      return true;
    }
    default:
      return atom_truth(f, s, env);
  }
}

// Ground Boolean tree, stored flat. Children of node i are a contiguous
// range in `child_index`.
struct GroundTree {
  struct Node {
    enum class Kind : std::uint8_t { Leaf, Not, And, Or } kind;
    bool leaf_value = false;
    std::uint32_t child_begin = 0;
    std::uint32_t child_count = 0;
  };
  std::vector<Node> nodes;
  std::vector<std::uint32_t> child_index;

  std::uint32_t add_leaf(bool value) {
    nodes.push_back({Node::Kind::Leaf, value, 0, 0});
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
  std::uint32_t add(Node::Kind kind, const std::vector<std::uint32_t>& kids) {
    Node n{kind, false, static_cast<std::uint32_t>(child_index.size()),
           static_cast<std::uint32_t>(kids.size())};
    child_index.insert(child_index.end(), kids.begin(), kids.end());
    nodes.push_back(n);
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
};

std::uint32_t ground_rec(const Formula& f, const WordStructure& s,
                         Assignment& env, GroundTree& tree) {
  switch (f.kind()) {
    case FormulaKind::True:
      return tree.add_leaf(true);
    case FormulaKind::False:
      return tree.add_leaf(false);
    case FormulaKind::Not:
      return tree.add(GroundTree::Node::Kind::Not,
                      {ground_rec(f.child(), s, env, tree)});
    case FormulaKind::And:
      return tree.add(GroundTree::Node::Kind::And,
                      {ground_rec(f.left(), s, env, tree),
                       ground_rec(f.right(), s, env, tree)});
    case FormulaKind::Or:
      return tree.add(GroundTree::Node::Kind::Or,
                      {ground_rec(f.left(), s, env, tree),
                       ground_rec(f.right(), s, env, tree)});
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const Formula body = f.child();
      std::vector<std::uint32_t> kids;
      kids.reserve(s.size());
      env.emplace_back(f.binder(), 0);
      for (Element e = 0; e < s.size(); ++e) {
        env.back().second = e;
        kids.push_back(ground_rec(body, s, env, tree));
      }
      env.pop_back();
      return tree.add(f.kind() == FormulaKind::Exists
                          ? GroundTree::Node::Kind::Or
                          : GroundTree::Node::Kind::And,
                      kids);
    }
    default:
      return tree.add_leaf(atom_truth(f, s, env));
  }
}

}  // namespace

bool evaluate(const Formula& f, const WordStructure& s,
              const Assignment& env) {
  Assignment scratch = env;
  return eval_rec(f, s, scratch);
}

bool evaluate_grounded(const Formula& f, const WordStructure& s,
                       const Assignment& env) {
  GroundTree tree;
  Assignment scratch = env;
  const std::uint32_t root = ground_rec(f, s, scratch, tree);
  // Bottom-up fold: children always precede their parent in `nodes`.
  std::vector<char> value(tree.nodes.size(), 0);
  for (std::uint32_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    switch (n.kind) {
      case GroundTree::Node::Kind::Leaf:
        value[i] = n.leaf_value;
        break;
      case GroundTree::Node::Kind::Not:
        value[i] = !value[tree.child_index[n.child_begin]];
        break;
      case GroundTree::Node::Kind::And: {
        bool v = true;
        for (std::uint32_t k = 0; k < n.child_count; ++k)
          v = v && value[tree.child_index[n.child_begin + k]];
        value[i] = v;
        break;
      }
      case GroundTree::Node::Kind::Or: {
        bool v = false;
        for (std::uint32_t k = 0; k < n.child_count; ++k)
          v = v || value[tree.child_index[n.child_begin + k]];
        value[i] = v;
        break;
      }
    }
  }
  return value[root] != 0;
}

}  // namespace dwsynth
