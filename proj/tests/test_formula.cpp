#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwsynth/errors.hpp"
#include "dwsynth/formula.hpp"
#include "dwsynth/formula_text.hpp"
#include "dwsynth/fragment.hpp"
#include "generators.hpp"

using namespace dwsynth;

namespace {
const Signature kSig({"a", "b"}, {"c"});
}

TEST_CASE("parse: quantified atom") {
  Formula f = parse_formula("E x. a(x)", kSig);
  CHECK(f == Formula::exists("x", Formula::action("a", "x")));
}

TEST_CASE("parse: the two-variable counting formula matches the builder") {
  Formula parsed = parse_formula(
      "E y. y ~ x & a(y) & E x. x ~ y & !(x = y) & a(x)", kSig);
  CHECK(parsed == build_split_counting_formula("a", 2, "x"));
}

TEST_CASE("parse: syntax error carries position") {
  try {
    parse_formula("E x. x <", kSig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 8);
  }
}

TEST_CASE("parse: unknown action and unknown predicate") {
  CHECK_THROWS_AS(parse_formula("E x. d(x)", kSig), ParseError);
  CHECK_THROWS_AS(parse_formula("E x. ProcX(x)", kSig), ParseError);
  // Every atom position is checked, not just the first.
  CHECK_THROWS_AS(parse_formula("E x. a(x) & d(x)", kSig), ParseError);
  CHECK_THROWS_AS(parse_formula("E x. a(x) | (b(x) & d(x))", kSig),
                  ParseError);
}

TEST_CASE("parse: reserved words cannot be variables") {
  CHECK_THROWS_AS(parse_formula("E true. a(true)", kSig), ParseError);
  CHECK_THROWS_AS(parse_formula("E E. a(E)", kSig), ParseError);
}

TEST_CASE("parse: successor orientation and precedence") {
  Formula f = parse_formula("x = y+1", kSig);
  CHECK(f.kind() == FormulaKind::Succ);
  CHECK(f.var1() == "x");
  CHECK(f.var2() == "y");
  // ! binds tighter than &, which binds tighter than |.
  Formula g = parse_formula("!a(x) & b(x) | c(x)", kSig);
  CHECK(g.kind() == FormulaKind::Or);
  CHECK(g.left().kind() == FormulaKind::And);
  CHECK(g.left().left().kind() == FormulaKind::Not);
  // Quantifier scope extends maximally right.
  Formula h = parse_formula("E x. a(x) | b(x)", kSig);
  CHECK(h.kind() == FormulaKind::Exists);
}

TEST_CASE("render: basic forms") {
  CHECK(render_formula(Formula::exists("x", Formula::action("a", "x"))) ==
        "E x. a(x)");
  CHECK(render_formula(!!Formula::truth()) == "!!true");
  Formula mixed = Formula::disj(
      Formula::exists("x", Formula::action("a", "x")),
      Formula::conj(Formula::action("b", "y"), Formula::falsity()));
  CHECK(render_formula(mixed) == "(E x. a(x)) | b(y) & false");
  CHECK(parse_formula(render_formula(mixed), kSig) == mixed);
}

TEST_CASE("round-trip: 1000 random ASTs of depth <= 6") {
  testgen::Rng rng(20260809);
  for (int i = 0; i < 1000; ++i) {
    Formula f = testgen::random_formula(rng, 6, kSig, {"x"});
    Formula back = parse_formula(render_formula(f), kSig);
    REQUIRE(back == f);
  }
}

TEST_CASE("classify: counting formula lands in FO2[~]") {
  FragmentProfile p =
      classify_fragment(build_split_counting_formula("a", 2, "x"));
  CHECK(p.variable_names == std::set<std::string>{"x", "y"});
  CHECK(p.uses_equivalence);
  CHECK_FALSE(p.uses_order);
  CHECK_FALSE(p.uses_successor);
  CHECK(p.label() == "FO2[~]");
}

TEST_CASE("classify: three variables") {
  Formula f = parse_formula(
      "E x. E y. E z. x < y & y < z", kSig);
  FragmentProfile p = classify_fragment(f);
  CHECK(p.variable_names.size() == 3);
  CHECK(p.label() == "FO3[<]");
}

TEST_CASE("classify: quantified-but-unused variables still count") {
  Formula f = parse_formula("E x. E y. true", kSig);
  CHECK(classify_fragment(f).variable_names.size() == 2);
}

TEST_CASE("split counting: k = 1, k out of range, letter-splitting pairs") {
  Formula one = build_split_counting_formula("a", 1, "x");
  CHECK(one == Formula::exists("y", Formula::sim("y", "x") &&
                                        Formula::action("a", "y")));
  CHECK_THROWS_AS(build_split_counting_formula("a", 0, "x"), InputError);
  CHECK_THROWS_AS(build_split_counting_formula("a", 3, "x"), InputError);

  // Counting to four via two letters in the same role.
  const Signature split_sig({"a1", "a2"}, {"c"});
  Formula four = build_split_counting_formula("a1", 2, "x") &&
                 build_split_counting_formula("a2", 2, "x");
  FragmentProfile p = classify_fragment(four);
  CHECK(p.variable_names.size() == 2);
  CHECK_FALSE(p.uses_order);
  CHECK_FALSE(p.uses_successor);
  CHECK(parse_formula(render_formula(four), split_sig) == four);
}

TEST_CASE("split counting: free variable is the requested one") {
  Formula f = build_split_counting_formula("a", 2, "x");
  CHECK(f.free_variables() == std::set<std::string>{"x"});
  Formula g = build_split_counting_formula("a", 2, "y");
  CHECK(g.free_variables() == std::set<std::string>{"y"});
}

TEST_CASE("signature: validation") {
  CHECK_THROWS_AS(Signature({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Signature({"a"}, {"a"}), InputError);
  CHECK_THROWS_AS(Signature({}, {}), InputError);
  CHECK_THROWS_AS(Signature({"true"}, {"c"}), InputError);
  CHECK_THROWS_AS(Signature({"E"}, {"c"}), InputError);
  CHECK_THROWS_AS(Signature({"9a"}, {"c"}), InputError);
}

TEST_CASE("signature spec: parse and render") {
  Signature sig = parse_signature_spec("S={a,b} E={c}");
  CHECK(sig == kSig);
  CHECK(render_signature_spec(sig) == "S={a,b} E={c}");
  Signature empty_env = parse_signature_spec("S={a} E={}");
  CHECK(empty_env.env_actions().empty());
  CHECK_THROWS_AS(parse_signature_spec("X={a}"), InputError);
}

TEST_CASE("formula file: header, fallback, and failure") {
  auto with_header = parse_formula_file_text(
      "# comment\nsig S={a} E={c}\nE x. a(x)\n");
  CHECK(with_header.signature_from_file);
  CHECK(with_header.formula ==
        Formula::exists("x", Formula::action("a", "x")));
  auto with_fallback = parse_formula_file_text("E x. a(x)", kSig);
  CHECK_FALSE(with_fallback.signature_from_file);
  CHECK_THROWS_AS(parse_formula_file_text("E x. a(x)"), InputError);
}
