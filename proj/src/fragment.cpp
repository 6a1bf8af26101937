#include "dwsynth/fragment.hpp"

#include "dwsynth/errors.hpp"

namespace dwsynth {

namespace {

void scan(const Formula& f, FragmentProfile& p) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Action:
    case FormulaKind::Proc:
      p.variable_names.insert(f.var1());
      return;
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Succ:
    case FormulaKind::Sim:
      p.variable_names.insert(f.var1());
      p.variable_names.insert(f.var2());
      if (f.kind() == FormulaKind::Eq) p.uses_equality = true;
      if (f.kind() == FormulaKind::Lt) p.uses_order = true;
      if (f.kind() == FormulaKind::Succ) p.uses_successor = true;
      if (f.kind() == FormulaKind::Sim) p.uses_equivalence = true;
      return;
    case FormulaKind::Not:
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      if (f.kind() != FormulaKind::Not) p.variable_names.insert(f.binder());
      scan(f.child(), p);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      scan(f.left(), p);
      scan(f.right(), p);
      return;
  }
}

}  // namespace

std::string FragmentProfile::label() const {
  std::string out = "FO";
  if (variable_names.size() <= 2)
    out += "2";
  else
    out += std::to_string(variable_names.size());
  out += "[";
  bool first = true;
  auto add = [&](const char* s) {
    if (!first) out += ",";
    out += s;
    first = false;
  };
  if (uses_equivalence) add("~");
  if (uses_order) add("<");
  if (uses_successor) add("+1");
  out += "]";
  return out;
}

FragmentProfile classify_fragment(const Formula& f) {
  FragmentProfile p;
  scan(f, p);
  return p;
}

Formula build_split_counting_formula(const std::string& action, int k,
                                     const std::string& free_var) {
  if (k != 1 && k != 2)
    throw InputError(
        "letter counting with two variables reaches at most 2; got k=" +
        std::to_string(k));
  const std::string other = free_var == "y" ? "x" : "y";
  // E other. other ~ free & a(other)
  Formula at_least_one = Formula::exists(
      other,
      Formula::sim(other, free_var) && Formula::action(action, other));
  if (k == 1) return at_least_one;
  // E o. o ~ v & a(o) & E v. v ~ o & !(v = o) & a(v)
  Formula inner = Formula::exists(
      free_var, Formula::sim(free_var, other) &&
                    !Formula::eq(free_var, other) &&
                    Formula::action(action, free_var));
  return Formula::exists(other, Formula::sim(other, free_var) &&
                                    Formula::action(action, other) &&
                                    std::move(inner));
}

}  // namespace dwsynth
