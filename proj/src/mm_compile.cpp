#include "dwsynth/mm_compile.hpp"

#include <vector>

namespace dwsynth {

namespace {

// Everything below uses only the variables x and y, swapping roles on
// inner rebinds, so the output provably stays in the two-variable
// fragment.
class SpecBuilder {
 public:
  SpecBuilder(const MinskyMachine& m, const CompileOptions& opts)
      : m_(m), literal_(opts.literal_transcription) {}

  CompiledSpec build() const {
    CompiledSpec out;
    out.signature = signature();

    const Formula prefix_e = env_prefix_violation();
    const Formula prefix_s = sys_prefix_violation();
    const Formula stalled_e = at_last(act("oks", "x"), "x");
    const Formula stalled_s = sys_stalled();
    const Formula after_ko_e = moved_after_ko(is_env("x"));
    const Formula after_ko_s = moved_after_ko(is_sys("x"));
    const Formula kos_just = kos_justified();
    const Formula koe_just = koe_justified();

    out.env_prefix_violation = prefix_e;
    out.sys_prefix_violation = prefix_s;
    out.env_stalled = stalled_e;
    out.sys_stalled = stalled_s;
    out.env_moved_after_ko = after_ko_e;
    out.sys_moved_after_ko = after_ko_s;
    out.kos_justified = kos_just;
    out.koe_justified = koe_just;

    out.bad_sequence = anchored(bad_sequence("x"));
    out.bad_target_state = anchored(bad_target_state("x"));
    out.bad_source_state = anchored(bad_source_state("x"));
    out.bad_counter_upkeep = anchored(bad_counter_upkeep("x"));
    out.bad_zero_test = anchored(bad_zero_test("x"));

    // Environment misplayed, or System played a flawless run ending in the
    // halting state.
    out.win_condition =
        prefix_e || stalled_e || after_ko_e ||
        Formula::exists("x", act("kos", "x") && kos_just) ||
        (!prefix_s && !stalled_s && !after_ko_s &&
         !Formula::exists("x", act("koe", "x") && koe_just) &&
         at_last(act(m_.halting_state(), "x"), "x"));
    return out;
  }

 private:
  static std::string other(const std::string& v) {
    return v == "x" ? "y" : "x";
  }
  static Formula act(const std::string& a, const std::string& v) {
    return Formula::action(a, v);
  }

  Signature signature() const {
    std::vector<std::string> sys = {"inc0", "dec0", "inc1", "dec1",
                                    "noop", "oks",  "kos"};
    for (const auto& q : m_.states()) sys.push_back(q);
    for (const auto& t : m_.transitions()) sys.push_back(t.name);
    return Signature(std::move(sys), {"oke", "koe"});
  }

  // --- letter groups ---------------------------------------------------

  Formula is_state(const std::string& v) const {
    std::vector<Formula> fs;
    for (const auto& q : m_.states()) fs.push_back(act(q, v));
    return Formula::disj_all(fs);
  }

  Formula is_trans(const std::string& v) const {
    std::vector<Formula> fs;
    for (const auto& t : m_.transitions()) fs.push_back(act(t.name, v));
    return Formula::disj_all(fs);
  }

  Formula is_trans_of(TransitionKind kind, int counter,
                      const std::string& v) const {
    std::vector<Formula> fs;
    for (const auto& t : m_.transitions())
      if (t.kind == kind && t.counter == counter) fs.push_back(act(t.name, v));
    return Formula::disj_all(fs);
  }

  Formula is_upkeep(const std::string& v) const {
    return Formula::disj_all({act("noop", v), act("inc0", v), act("dec0", v),
                              act("inc1", v), act("dec1", v)});
  }

  Formula is_sys(const std::string& v) const {
    std::vector<Formula> fs = {act("inc0", v), act("dec0", v), act("inc1", v),
                               act("dec1", v), act("noop", v), act("oks", v),
                               act("kos", v)};
    for (const auto& q : m_.states()) fs.push_back(act(q, v));
    for (const auto& t : m_.transitions()) fs.push_back(act(t.name, v));
    return Formula::disj_all(fs);
  }

  Formula is_env(const std::string& v) const {
    return act("oke", v) || act("koe", v);
  }

  // --- positional helpers (all two-variable) ---------------------------

  // E v. (no w before v) & pred
  Formula at_first(Formula pred, const std::string& v) const {
    const std::string w = other(v);
    return Formula::exists(
        v, !Formula::exists(w, Formula::lt(w, v)) && std::move(pred));
  }

  // E v. (some first w before v) & (every w before v is first) & pred
  Formula at_second(Formula pred, const std::string& v) const {
    const std::string w = other(v);
    Formula w_is_first = !Formula::exists(v, Formula::lt(v, w));
    Formula has_first_before =
        Formula::exists(w, Formula::lt(w, v) && w_is_first);
    Formula no_nonfirst_before = !Formula::exists(
        w, Formula::lt(w, v) && Formula::exists(v, Formula::lt(v, w)));
    return Formula::exists(v, std::move(has_first_before) &&
                                  std::move(no_nonfirst_before) &&
                                  std::move(pred));
  }

  // E v. (no w after v) & pred
  Formula at_last(Formula pred, const std::string& v) const {
    const std::string w = other(v);
    return Formula::exists(
        v, !Formula::exists(w, Formula::lt(v, w)) && std::move(pred));
  }

  // E w. v < w & body
  static Formula exists_after(const std::string& v, const std::string& w,
                              Formula body) {
    return Formula::exists(w, Formula::lt(v, w) && std::move(body));
  }

  // --- protocol-frame formulas ------------------------------------------

  Formula env_prefix_violation() const {
    return at_first(is_env("x"), "x") ||
           at_second(is_env("x") && !act("oke", "x"), "x");
  }

  Formula sys_prefix_violation() const {
    return at_first(is_sys("x") && !act("oks", "x"), "x") ||
           at_second(is_sys("x"), "x");
  }

  Formula sys_stalled() const {
    return Formula::disj_all(
        {!Formula::exists("x", Formula::truth()),
         at_last(act("koe", "x"), "x"),
         at_last(is_state("x") && !act(m_.halting_state(), "x"), "x"),
         at_last(is_trans("x"), "x"), at_last(is_upkeep("x"), "x")});
  }

  Formula moved_after_ko(Formula mover_pred) const {
    // E x. last(x) & pred(x) & E y. y != x & (koe(y) | kos(y))
    Formula other_ko = Formula::exists(
        "y", !Formula::eq("y", "x") && (act("koe", "y") || act("kos", "y")));
    return Formula::exists("x",
                           !Formula::exists("y", Formula::lt("x", "y")) &&
                               std::move(mover_pred) && std::move(other_ko));
  }

  // --- ko justifications -------------------------------------------------

  Formula kos_justified() const {
    // Anchor x: the last oks. Environment misplayed iff an oke after x is
    // followed by yet another oke (several okes since System's last oks).
    Formula later_oke =
        literal_ ? Formula::exists("x", Formula::lt("y", "x") &&
                                            act("oke", "y"))
                 : Formula::exists("x", Formula::lt("y", "x") &&
                                            act("oke", "x"));
    Formula no_oks_after =
        !Formula::exists("y", Formula::lt("x", "y") && act("oks", "y"));
    return Formula::exists(
        "x",
        act("oks", "x") &&
            Formula::forall("y", implies(Formula::lt("x", "y"),
                                         !act("oks", "y"))) &&
            exists_after("x", "y",
                         act("oke", "y") &&
                             (std::move(later_oke) || std::move(no_oks_after))));
  }

  Formula anchored(Formula detector_with_free_x) const {
    // E x. oke(x) & (no later oke) & detector(x)
    return Formula::exists(
        "x", act("oke", "x") &&
                 Formula::forall("y", implies(Formula::lt("x", "y"),
                                              !act("oke", "y"))) &&
                 std::move(detector_with_free_x));
  }

  Formula koe_justified() const {
    return anchored(Formula::disj_all(
        {bad_sequence("x"), bad_target_state("x"), bad_source_state("x"),
         bad_counter_upkeep("x"), bad_zero_test("x")}));
  }

  // --- cheat detectors (free variable: the last-oke anchor) --------------

  Formula bad_sequence(const std::string& x) const {
    const std::string y = other(x);
    Formula bracket = Formula::disj_all(
        {is_state(y) && exists_after(y, x, is_state(x)),
         is_trans(y) && exists_after(y, x, is_state(x) || is_trans(x)),
         is_upkeep(y) && exists_after(y, x, Formula::disj_all(
                                                {is_state(x), is_trans(x),
                                                 is_upkeep(x)})),
         act("oks", y) && exists_after(y, x, is_sys(x))});
    return Formula::disj_all(
        {exists_after(x, y, std::move(bracket)),
         exists_after(x, y, is_sys(y)) && !exists_after(x, y, is_state(y)),
         exists_after(x, y, is_upkeep(y) || act("oks", y)) &&
             !exists_after(x, y, is_trans(y)),
         exists_after(x, y, act("oks", y)) &&
             !exists_after(x, y, is_upkeep(y))});
  }

  Formula bad_target_state(const std::string& x) const {
    const std::string y = other(x);
    // A state was played since the last oke but no transition yet; the
    // globally last transition must end in that state.
    std::vector<Formula> per_state;
    for (const auto& q : m_.states()) {
      std::vector<Formula> wrong;
      for (const auto& t : m_.transitions())
        if (t.target != q) wrong.push_back(act(t.name, x));
      Formula no_trans_after = Formula::forall(
          y, implies(Formula::lt(x, y), !is_trans(y)));
      Formula witness =
          literal_
              // Literal scoping: the witness quantifier closes before the
              // disjunction, whose variable stays the anchor.
              ? Formula::exists(x, std::move(no_trans_after)) &&
                    Formula::disj_all(wrong)
              : Formula::exists(x, std::move(no_trans_after) &&
                                       Formula::disj_all(wrong));
      per_state.push_back(exists_after(x, y, act(q, y)) &&
                          std::move(witness));
    }
    std::vector<Formula> nonstart;
    for (const auto& q : m_.states())
      if (q != m_.initial_state())
        nonstart.push_back(Formula::exists(y, act(q, y)));
    return (!exists_after(x, y, is_trans(y)) &&
            Formula::disj_all(per_state)) ||
           (!Formula::exists(y, is_trans(y)) && Formula::disj_all(nonstart));
  }

  Formula bad_source_state(const std::string& x) const {
    const std::string y = other(x);
    std::vector<Formula> cases;
    for (const auto& q : m_.states()) {
      for (const auto& t : m_.transitions()) {
        if (t.source == q) continue;
        cases.push_back(exists_after(x, y, act(q, y)) &&
                        exists_after(x, y, act(t.name, y)));
      }
    }
    return Formula::disj_all(cases);
  }

  Formula bad_counter_upkeep(const std::string& x) const {
    const std::string y = other(x);
    std::vector<Formula> cases;
    for (int i = 0; i < 2; ++i) {
      const std::string inc = "inc" + std::to_string(i);
      const std::string dec = "dec" + std::to_string(i);
      Formula earlier_inc_same_proc = Formula::exists(
          x, Formula::lt(x, y) && Formula::sim(x, y) && act(inc, x));
      Formula earlier_dec_same_proc = Formula::exists(
          x, Formula::lt(x, y) && Formula::sim(x, y) && act(dec, x));
      cases.push_back(Formula::disj_all(
          {exists_after(x, y, is_trans_of(TransitionKind::Inc, i, y)) &&
               exists_after(x, y, is_upkeep(y) && !act(inc, y)),
           exists_after(x, y, is_trans_of(TransitionKind::Dec, i, y)) &&
               exists_after(x, y, is_upkeep(y) && !act(dec, y)),
           exists_after(x, y, is_trans_of(TransitionKind::Zero, i, y)) &&
               exists_after(x, y, is_upkeep(y) && !act("noop", y)),
           exists_after(x, y, act(inc, y) && earlier_inc_same_proc),
           exists_after(x, y, act(dec, y) && earlier_dec_same_proc),
           exists_after(x, y, act(dec, y) && !earlier_inc_same_proc)}));
    }
    return Formula::disj_all(cases);
  }

  Formula bad_zero_test(const std::string& x) const {
    const std::string y = other(x);
    std::vector<Formula> cases;
    for (int i = 0; i < 2; ++i) {
      const std::string inc = "inc" + std::to_string(i);
      const std::string dec = "dec" + std::to_string(i);
      // A process with an inc and no dec witnesses a nonzero counter.
      Formula no_dec_same_proc = !Formula::exists(
          y, Formula::sim(y, x) && act(dec, literal_ ? x : y));
      Formula nonzero_witness = Formula::exists(
          x, act(inc, x) && std::move(no_dec_same_proc));
      cases.push_back(
          exists_after(x, y, is_trans_of(TransitionKind::Zero, i, y)) &&
          std::move(nonzero_witness));
    }
    return Formula::disj_all(cases);
  }

  const MinskyMachine& m_;
  bool literal_;
};

}  // namespace

CompiledSpec compile_to_fo2_ord(const MinskyMachine& m,
                                const CompileOptions& opts) {
  return SpecBuilder(m, opts).build();
}

}  // namespace dwsynth
