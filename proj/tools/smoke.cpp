// Temporary end-to-end smoke check while bringing the toolkit up.
#include <iostream>

#include "dwsynth/arena.hpp"
#include "dwsynth/evaluate.hpp"
#include "dwsynth/formula_text.hpp"
#include "dwsynth/fragment.hpp"
#include "dwsynth/minsky.hpp"
#include "dwsynth/mm_compile.hpp"
#include "dwsynth/mm_strategy.hpp"
#include "dwsynth/structure.hpp"
#include "dwsynth/vg_solver.hpp"

using namespace dwsynth;

int main() {
  const std::string fx = "tests/fixtures/";
  MinskyMachine m = load_machine_file(fx + "paper_machine.mm");
  Run r = run_machine(m, {"t0", "t0", "t1", "t2", "t3"});
  std::cout << "halting=" << r.halting << " final=(" << r.configs.back().state
            << "," << r.configs.back().v0 << "," << r.configs.back().v1
            << ")\n";

  CompiledSpec spec = compile_to_fo2_ord(m);
  FragmentProfile prof = classify_fragment(spec.win_condition);
  std::cout << "fragment=" << prof.label() << " vars=";
  for (const auto& v : prof.variable_names) std::cout << v << " ";
  std::cout << "succ=" << prof.uses_successor
            << " nodes=" << spec.win_condition.node_count() << "\n";

  auto [word, pools] = load_word_file(fx + "paper_word.dw");
  WordStructure s = to_structure(word, pools, spec.signature);
  std::cout << "elements=" << s.size() << "\n";
  std::cout << "phi on paper word: " << evaluate(spec.win_condition, s)
            << "\n";
  DataWord chopped(word.begin(), word.end() - 1);
  std::cout << "phi without final h: "
            << evaluate(spec.win_condition,
                        to_structure(chopped, pools, spec.signature))
            << "\n";

  // Honest strategy vs compliant environment reproduces the word.
  SystemStrategy strat = strategy_from_run(m, r);
  SimResult sim = simulate(spec.signature, pools, strat,
                           compliant_env_policy(spec));
  std::cout << "sim stop=" << static_cast<int>(sim.stop)
            << " len=" << sim.word.size()
            << " equal=" << (sim.word == word) << "\n";
  std::cout << "sim word satisfies phi: "
            << evaluate(spec.win_condition,
                        to_structure(sim.word, pools, spec.signature))
            << "\n";

  // Round trip of the compiled formula.
  std::string text = render_formula(spec.win_condition);
  Formula back = parse_formula(text, spec.signature);
  std::cout << "round-trip equal=" << (back == spec.win_condition)
            << " text-bytes=" << text.size() << "\n";

  // Vector game fixtures.
  GameSpec all_default = load_game_file(fx + "all_default.vg");
  std::cout << "all-default winner(1,1): "
            << (solve_winner(all_default, 1, 1) == Winner::System ? "S" : "E")
            << "\n";
  GameSpec b0 = load_game_file(fx + "b0_one_env.vg");
  for (int ne = 0; ne <= 1; ++ne)
    for (int ns = 0; ns <= 1; ++ns)
      std::cout << "b0 winner(ns=" << ns << ",ne=" << ne << "): "
                << (solve_winner(b0, ns, ne) == Winner::System ? "S" : "E")
                << "\n";
  return 0;
}
