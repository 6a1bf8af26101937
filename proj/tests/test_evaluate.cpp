#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dwsynth/errors.hpp"
#include "dwsynth/evaluate.hpp"
#include "dwsynth/formula_text.hpp"
#include "dwsynth/fragment.hpp"
#include "dwsynth/structure.hpp"
#include "generators.hpp"

using namespace dwsynth;

namespace {

const Signature kSig({"a", "b"}, {"c"});

WordStructure::Element process_element(const WordStructure& s,
                                       const std::string& process) {
  for (WordStructure::Element e =
           static_cast<WordStructure::Element>(s.num_positions());
       e < s.size(); ++e)
    if (s.process_of(e) == process) return e;
  throw Error("no such process element");
}

}  // namespace

TEST_CASE("empty domain: existentials are false, universals true") {
  WordStructure empty = to_structure({}, ProcessPools({}, {}), kSig);
  CHECK(empty.size() == 0);
  CHECK_FALSE(evaluate(parse_formula("E x. true", kSig), empty));
  CHECK(evaluate(parse_formula("A x. a(x)", kSig), empty));
  CHECK_FALSE(evaluate_grounded(parse_formula("E x. true", kSig), empty));
  CHECK(evaluate_grounded(parse_formula("A x. a(x)", kSig), empty));
}

TEST_CASE("idle processes are part of the domain") {
  WordStructure s = to_structure({}, ProcessPools({}, {}, {"p"}), kSig);
  CHECK(evaluate(parse_formula("E x. ProcM(x)", kSig), s));
  CHECK_FALSE(evaluate(parse_formula("E x. ProcS(x)", kSig), s));
}

TEST_CASE("counting formula on one- and two-process words") {
  Formula at_least_two = build_split_counting_formula("a", 2, "x");
  ProcessPools pools({"p", "q"}, {"e"});
  WordStructure two_on_p =
      to_structure({{"a", "p"}, {"a", "p"}}, pools, kSig);
  WordStructure split =
      to_structure({{"a", "p"}, {"a", "q"}}, pools, kSig);
  Assignment on_p = {{"x", process_element(two_on_p, "p")}};
  Assignment on_p_split = {{"x", process_element(split, "p")}};
  CHECK(evaluate(at_least_two, two_on_p, on_p));
  CHECK_FALSE(evaluate(at_least_two, split, on_p_split));
  CHECK(evaluate_grounded(at_least_two, two_on_p, on_p));
  CHECK_FALSE(evaluate_grounded(at_least_two, split, on_p_split));
  // Exactly one: at least one and not at least two.
  Formula exactly_one = build_split_counting_formula("a", 1, "x") &&
                        !build_split_counting_formula("a", 2, "x");
  CHECK(evaluate(exactly_one, split, on_p_split));
  CHECK_FALSE(evaluate(exactly_one, two_on_p, on_p));
}

TEST_CASE("unbound variables are rejected") {
  WordStructure s = to_structure({{"a", "p"}}, ProcessPools({"p"}, {}), kSig);
  CHECK_THROWS_AS(evaluate(parse_formula("a(x)", kSig), s), InputError);
  CHECK_THROWS_AS(evaluate_grounded(parse_formula("x ~ y", kSig), s),
                  InputError);
}

TEST_CASE("shadowing: inner binder wins") {
  // E x. a(x) & E x. b(x) — the inner x ranges independently.
  WordStructure s = to_structure({{"a", "p"}, {"b", "p"}},
                                 ProcessPools({"p"}, {}), kSig);
  Formula f = parse_formula("E x. a(x) & (E x. b(x))", kSig);
  CHECK(evaluate(f, s));
  CHECK(evaluate_grounded(f, s));
}

TEST_CASE("last-position test on the halting-run fixture") {
  auto [word, pools] = load_word_file("tests/fixtures/paper_word.dw");
  Signature mm_sig({"inc0", "dec0", "inc1", "dec1", "noop", "oks", "kos", "i",
                    "q1", "q2", "h", "t0", "t1", "t2", "t3"},
                   {"oke", "koe"});
  WordStructure s = to_structure(word, pools, mm_sig);
  Formula h_last = parse_formula(
      "E x. h(x) & !(E y. x < y & (y < y | !(y < y)))", mm_sig);
  CHECK(evaluate(h_last, s));
  CHECK(evaluate_grounded(h_last, s));
  DataWord chopped(word.begin(), word.end() - 1);
  WordStructure s2 = to_structure(chopped, pools, mm_sig);
  CHECK_FALSE(evaluate(h_last, s2));
}

TEST_CASE("cross-oracle: direct evaluator vs grounded expansion") {
  testgen::Rng rng(123456);
  std::size_t trues = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    Formula f = testgen::random_formula(rng, 5, kSig);
    auto rw = testgen::random_word(rng, kSig, 6);
    WordStructure s = to_structure(rw.word, rw.pools, kSig);
    const bool direct = evaluate(f, s);
    const bool grounded = evaluate_grounded(f, s);
    REQUIRE(direct == grounded);
    trues += direct;
  }
  // The sample must exercise both outcomes to mean anything.
  CHECK(trues > 100);
  CHECK(trues < 900);
}
