// Command-line front end: model checking, vector-game solving, counter
// machine tooling. Exit codes: 0 success, 1 negative verdict, 2 input
// error, 3 budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwsynth/arena.hpp"
#include "dwsynth/errors.hpp"
#include "dwsynth/evaluate.hpp"
#include "dwsynth/formula_text.hpp"
#include "dwsynth/fragment.hpp"
#include "dwsynth/minsky.hpp"
#include "dwsynth/mm_compile.hpp"
#include "dwsynth/mm_strategy.hpp"
#include "dwsynth/structure.hpp"
#include "dwsynth/vg_solver.hpp"

namespace {

using namespace dwsynth;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

const char* winner_name(Winner w) {
  return w == Winner::System ? "System" : "Environment";
}

std::optional<Signature> parse_sig_option(const std::string& sig_spec) {
  if (sig_spec.empty()) return std::nullopt;
  return parse_signature_spec(sig_spec);
}

int cmd_check(const std::string& path, const std::string& sig_spec) {
  auto contents = load_formula_file(path, parse_sig_option(sig_spec));
  FragmentProfile p = classify_fragment(contents.formula);
  std::cout << "fragment: " << p.label() << "\n";
  std::cout << "variables:";
  if (p.variable_names.empty()) std::cout << " none";
  for (const auto& v : p.variable_names) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "order: " << (p.uses_order ? "yes" : "no") << "\n";
  std::cout << "successor: " << (p.uses_successor ? "yes" : "no") << "\n";
  std::cout << "process-equivalence: " << (p.uses_equivalence ? "yes" : "no")
            << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& formula_path, const std::string& word_path,
             const std::string& sig_spec) {
  auto contents = load_formula_file(formula_path, parse_sig_option(sig_spec));
  if (!contents.formula.free_variables().empty())
    throw InputError("formula has free variables; eval needs a closed one");
  auto [word, pools] = load_word_file(word_path);
  const bool verdict = evaluate(
      contents.formula, to_structure(word, pools, contents.signature));
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

SolveOptions solve_options(std::size_t max_states) {
  SolveOptions opts;
  if (max_states) opts.max_states = max_states;
  return opts;
}

int cmd_solve(const std::string& path, int ns, int ne,
              std::size_t max_states) {
  GameSpec spec = load_game_file(path);
  SolvedGame game(spec, ns, ne, solve_options(max_states));
  std::cout << "winner: " << winner_name(game.winner()) << "\n";
  std::cout << "explored-states: " << game.explored_states() << "\n";
  return kExitOk;
}

void print_grid(const GridResult& grid) {
  const std::size_t cols = grid.cut + 1;
  std::vector<std::string> headers;
  for (std::size_t ns = 0; ns < cols; ++ns)
    headers.push_back("nS=" + std::to_string(ns));
  auto cell_text = [](const GridCell& c) -> std::string {
    if (!c.winner) return "?";
    return winner_name(*c.winner);
  };
  std::vector<std::size_t> width(cols);
  for (std::size_t ns = 0; ns < cols; ++ns) {
    width[ns] = headers[ns].size();
    for (const auto& row : grid.cells)
      width[ns] = std::max(width[ns], cell_text(row[ns]).size());
  }
  std::size_t label_width = std::string("nE=").size() +
                            std::to_string(grid.cells.size() - 1).size();
  std::cout << std::string(label_width, ' ');
  for (std::size_t ns = 0; ns < cols; ++ns) {
    std::string h = headers[ns];
    h.resize(width[ns], ' ');
    std::cout << "  " << h;
  }
  std::cout << "\n";
  for (std::size_t ne = 0; ne < grid.cells.size(); ++ne) {
    std::string label = "nE=" + std::to_string(ne);
    label.resize(label_width, ' ');
    std::cout << label;
    for (std::size_t ns = 0; ns < cols; ++ns) {
      std::string c = cell_text(grid.cells[ne][ns]);
      c.resize(width[ns], ' ');
      std::cout << "  " << c;
    }
    std::cout << "\n";
  }
  std::cout << "system-wins-somewhere: "
            << (grid.system_wins_somewhere ? "yes" : "no") << "\n";
  if (grid.budget_exceeded_cells)
    std::cout << "budget-exceeded-cells: " << grid.budget_exceeded_cells
              << "\n";
  std::cout << "tsv:\n";
  std::cout << "nE\tnS\twinner\n";
  for (std::size_t ne = 0; ne < grid.cells.size(); ++ne)
    for (std::size_t ns = 0; ns < cols; ++ns)
      std::cout << ne << "\t" << ns << "\t" << cell_text(grid.cells[ne][ns])
                << "\n";
}

int cmd_grid(const std::string& path, std::size_t cut, std::int64_t minind,
             std::size_t jobs, std::size_t max_states) {
  GameSpec spec = load_game_file(path);
  std::optional<std::uint64_t> override_minind;
  if (minind >= 0) override_minind = static_cast<std::uint64_t>(minind);
  GridResult grid =
      decide_grid(spec, cut, override_minind, solve_options(max_states), jobs);
  print_grid(grid);
  return grid.system_wins_somewhere ? kExitOk : kExitNegative;
}

int cmd_bounds(const std::string& path, std::size_t probe_window) {
  GameSpec spec = load_game_file(path);
  std::cout << "K: " << spec.max_constant() << "\n";
  std::cout << "d: " << spec.env_letters.size() << "\n";
  std::cout << "B: " << spec.bound << "\n";
  std::cout << "minind: " << compute_minind(spec) << "\n";
  if (probe_window) {
    ProbeResult probe = probe_cut(spec, probe_window);
    std::cout << "probe-cut: " << probe.cut
              << " (heuristic; not the exact theoretical cutoff)\n";
  }
  return kExitOk;
}

int cmd_mm_run(const std::string& path, const std::string& trans_csv) {
  MinskyMachine m = load_machine_file(path);
  std::vector<std::string> names;
  std::istringstream in(trans_csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) names.push_back(part);
  }
  Run r = run_machine(m, names);
  std::cout << "(" << r.configs[0].state << "," << r.configs[0].v0 << ","
            << r.configs[0].v1 << ")\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& c = r.configs[i + 1];
    std::cout << names[i] << " -> (" << c.state << "," << c.v0 << "," << c.v1
              << ")\n";
  }
  const auto& last = r.configs.back();
  if (r.halting) {
    std::cout << "HALTED (" << last.state << "," << last.v0 << "," << last.v1
              << ")\n";
    return kExitOk;
  }
  std::cout << "STOPPED (" << last.state << "," << last.v0 << "," << last.v1
            << ")\n";
  return kExitNegative;
}

int cmd_mm_compile(const std::string& path, const std::string& out_path,
                   bool literal) {
  MinskyMachine m = load_machine_file(path);
  CompileOptions opts;
  opts.literal_transcription = literal;
  CompiledSpec spec = compile_to_fo2_ord(m, opts);
  const std::string text =
      render_formula_file(spec.win_condition, spec.signature);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOk;
}

EnvironmentPolicy manual_policy() {
  auto fn = [](const DataWord& history, const ProcessPools& pools) -> Move {
    std::cerr << "history:";
    for (const auto& p : history)
      std::cerr << " " << p.action << "@" << p.process;
    std::cerr << "\nenv> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) return std::nullopt;
    if (line.empty() || line == "pass" || line == "stop") return std::nullopt;
    std::string action = line, process;
    std::size_t at = line.find('@');
    if (at != std::string::npos) {
      action = line.substr(0, at);
      process = line.substr(at + 1);
    }
    if (process.empty()) {
      if (pools.env().empty()) return std::nullopt;
      process = pools.env()[0];
    }
    return Position{action, process};
  };
  return EnvironmentPolicy("manual", std::move(fn));
}

EnvironmentPolicy make_policy(const std::string& name,
                              const CompiledSpec& spec,
                              std::uint64_t default_seed) {
  if (name == "compliant") return compliant_env_policy(spec);
  if (name == "blocker") return blocker_policy();
  if (name == "manual") return manual_policy();
  if (name.rfind("script:", 0) == 0)
    return scripted_policy(parse_script(name.substr(7)));
  if (name.rfind("random", 0) == 0) {
    std::uint64_t seed = default_seed;
    if (name.rfind("random:", 0) == 0) {
      try {
        seed = std::stoull(name.substr(7));
      } catch (const std::exception&) {
        throw InputError("bad seed in '" + name + "'");
      }
    } else if (name != "random") {
      throw InputError("unknown policy '" + name + "'");
    }
    return random_policy(seed);
  }
  throw InputError("unknown policy '" + name +
                   "' (compliant|blocker|script:...|random:SEED|manual)");
}

int cmd_mm_play(const std::string& path, const std::string& env_name,
                std::size_t max_steps, std::size_t ns_override,
                std::size_t max_rounds, std::size_t fairness_window,
                bool literal, std::uint64_t seed,
                const std::string& trace_path) {
  MinskyMachine m = load_machine_file(path);
  CompileOptions copts;
  copts.literal_transcription = literal;
  CompiledSpec spec = compile_to_fo2_ord(m, copts);

  std::optional<Run> run = bounded_halting_search(m, max_steps);
  if (!run)
    throw InputError("no halting run within " + std::to_string(max_steps) +
                     " steps; raise --max-steps");
  SystemStrategy strat = strategy_from_run(m, *run);

  std::size_t ns = required_processes(*run);
  if (ns_override) ns = ns_override;
  std::vector<std::string> sys_procs;
  for (std::size_t i = 0; i < ns; ++i)
    sys_procs.push_back("p" + std::to_string(i));
  ProcessPools pools(sys_procs, {"e"});

  ScheduleConfig sched;
  sched.max_rounds =
      max_rounds ? max_rounds : 10 * run->transitions.size() + 64;
  if (fairness_window) sched.fairness_window = fairness_window;

  EnvironmentPolicy policy = make_policy(env_name, spec, seed);
  SimResult sim = simulate(spec.signature, pools, strat, policy, sched);
  const bool verdict = evaluate(
      spec.win_condition, to_structure(sim.word, pools, spec.signature));

  const std::string trace =
      render_trace(sim, pools, "policy: " + policy.name());
  std::cout << trace;
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw InputError("cannot write '" + trace_path + "'");
    out << trace;
  }
  std::cout << "formula: " << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

int cmd_lift_check(const std::string& path, int ns, int ne,
                   std::size_t max_states) {
  GameSpec spec = load_game_file(path);
  const std::uint64_t minind = compute_minind(spec);
  std::cout << "minind: " << minind << "\n";
  if (ne < 0 || static_cast<std::uint64_t>(ne) < minind)
    throw InputError("lift-check needs --ne >= minind");
  auto base =
      std::make_shared<SolvedGame>(spec, ns, ne, solve_options(max_states));
  const Winner base_winner = base->winner();
  std::cout << "base: (nS=" << ns << ", nE=" << ne << ")\n";
  std::cout << "base-winner: " << winner_name(base_winner) << "\n";
  if (base_winner == Winner::System) {
    std::cout << "lift-verified: vacuous (System wins the base game)\n";
    return kExitOk;
  }
  LiftedEnvStrategy lifted =
      lift_env_strategy(spec, ns, ne, table_strategy(base, Player::Environment));
  auto bigger = std::make_shared<SolvedGame>(spec, ns, ne + 1,
                                             solve_options(max_states));
  PlayRecord rec = play_lifted(spec, ns, lifted,
                               table_strategy(bigger, Player::System));
  const bool vs_optimal = rec.winner == Winner::Environment;
  std::cout << "lift-vs-optimal-system: " << (vs_optimal ? "won" : "LOST")
            << " (" << rec.non_pass_moves << " non-pass moves)\n";
  const bool universal =
      env_strategy_wins_all(spec, ns, lifted, solve_options(max_states));
  std::cout << "lift-vs-all-system-play: " << (universal ? "won" : "LOST")
            << "\n";
  std::cout << "lift-verified: " << (vs_optimal && universal ? "yes" : "NO")
            << "\n";
  return vs_optimal && universal ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dwsynth: first-order model checking on data words, parametrised "
      "vector games, and counter-machine reductions"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "default seed for randomized policies");

  std::string f_path, w_path, sig_spec;
  auto* check = app.add_subcommand("check", "classify a formula's fragment");
  check->add_option("formula", f_path, "formula file")->required();
  check->add_option("--sig", sig_spec, "signature, e.g. 'S={a} E={b}'");

  std::string e_formula, e_word, e_sig;
  auto* eval = app.add_subcommand("eval", "evaluate a formula on a word");
  eval->add_option("formula", e_formula, "formula file")->required();
  eval->add_option("word", e_word, "data word file")->required();
  eval->add_option("--sig", e_sig, "signature, e.g. 'S={a} E={b}'");

  std::string g_path;
  int ns = 0, ne = 0;
  std::size_t max_states = 0;
  auto* solve = app.add_subcommand("solve", "solve a vector game exactly");
  solve->add_option("game", g_path, "game file")->required();
  solve->add_option("--ns", ns, "System pebbles")->required();
  solve->add_option("--ne", ne, "Environment pebbles")->required();
  solve->add_option("--max-states", max_states, "memo budget override");

  std::string grid_path;
  std::size_t cut = 0, jobs = 1, grid_max_states = 0;
  std::int64_t minind_override = -1;
  auto* grid =
      app.add_subcommand("grid", "winner table over [0,cut] x [0,minind]");
  grid->add_option("game", grid_path, "game file")->required();
  grid->add_option("--cut", cut, "largest nS to explore")->required();
  grid->add_option("--minind", minind_override,
                   "override the computed minind row bound");
  grid->add_option("--jobs", jobs, "solve cells concurrently");
  grid->add_option("--max-states", grid_max_states, "memo budget override");

  std::string bounds_path;
  std::size_t probe_window = 0;
  auto* bounds =
      app.add_subcommand("bounds", "print K, d, B and minind for a game");
  bounds->add_option("game", bounds_path, "game file")->required();
  bounds->add_option("--probe-cut-window", probe_window,
                     "also probe a heuristic nS plateau of this width");

  std::string run_path, trans_csv;
  auto* mm_run = app.add_subcommand("mm-run", "replay a transition sequence");
  mm_run->add_option("machine", run_path, "machine file")->required();
  mm_run->add_option("--trans", trans_csv, "comma-separated transition names")
      ->required();

  std::string compile_path, compile_out;
  bool literal = false;
  auto* mm_compile =
      app.add_subcommand("mm-compile", "compile a machine to a formula");
  mm_compile->add_option("machine", compile_path, "machine file")->required();
  mm_compile->add_option("-o,--output", compile_out, "output formula file");
  mm_compile->add_flag(
      "--literal-paper", literal,
      "emit literal variants of the ambiguous cheat-detection subformulas");

  std::string play_path, env_name = "compliant", trace_path;
  std::size_t play_max_steps = 1024, play_ns = 0, play_rounds = 0,
              play_window = 0;
  bool play_literal = false;
  auto* mm_play = app.add_subcommand(
      "mm-play", "simulate the run strategy against a policy and model-check");
  mm_play->add_option("machine", play_path, "machine file")->required();
  mm_play->add_option("--env", env_name,
                      "compliant|blocker|script:...|random:SEED|manual");
  mm_play->add_option("--max-steps", play_max_steps,
                      "halting search step bound");
  mm_play->add_option("--ns", play_ns, "override System process count");
  mm_play->add_option("--max-rounds", play_rounds, "round cap override");
  mm_play->add_option("--fairness-window", play_window,
                      "scheduler fairness window");
  mm_play->add_flag("--literal-paper", play_literal,
                    "compile the literal formula variants");
  mm_play->add_option("--trace", trace_path, "also write the trace here");

  std::string lift_path;
  int lift_ns = 0, lift_ne = 0;
  std::size_t lift_max_states = 0;
  auto* lift = app.add_subcommand(
      "lift-check", "verify the extra-pebble lift at (ns, ne) -> (ns, ne+1)");
  lift->add_option("game", lift_path, "game file")->required();
  lift->add_option("--ns", lift_ns, "System pebbles")->required();
  lift->add_option("--ne", lift_ne, "Environment pebbles (>= minind)")
      ->required();
  lift->add_option("--max-states", lift_max_states, "memo budget override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(f_path, sig_spec);
    if (eval->parsed()) return cmd_eval(e_formula, e_word, e_sig);
    if (solve->parsed()) return cmd_solve(g_path, ns, ne, max_states);
    if (grid->parsed())
      return cmd_grid(grid_path, cut, minind_override, jobs, grid_max_states);
    if (bounds->parsed()) return cmd_bounds(bounds_path, probe_window);
    if (mm_run->parsed()) return cmd_mm_run(run_path, trans_csv);
    if (mm_compile->parsed())
      return cmd_mm_compile(compile_path, compile_out, literal);
    if (mm_play->parsed())
      return cmd_mm_play(play_path, env_name, play_max_steps, play_ns,
                         play_rounds, play_window, play_literal, seed,
                         trace_path);
    if (lift->parsed())
      return cmd_lift_check(lift_path, lift_ns, lift_ne, lift_max_states);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
