#pragma once

#include "dwsynth/formula.hpp"
#include "dwsynth/minsky.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

struct CompileOptions {
  // Two spots of the cheat-detection formulas admit a second, literal
  // transcription (a stale variable inside the "later oke" witness and
  // the dec atom of the zero-test detector, plus an alternative scoping
  // of the bad-target disjunction). The default emits the evident intent;
  // this flag emits the literal variants for comparison.
  bool literal_transcription = false;
};

// The machine encoded as a two-variable order specification over the
// signature E={oke,koe}, S={inc0,dec0,inc1,dec1,noop,oks,kos} + states +
// transitions. `win_condition` holds on a finished play exactly when
// Environment misplayed, or System played a flawless halting run.
struct CompiledSpec {
  Signature signature;
  Formula win_condition;

  // Named pieces for targeted checks and for the compliant Environment:
  Formula kos_justified;          // Environment broke the ack protocol
  Formula koe_justified;          // System cheated since the last oke
  Formula env_prefix_violation;
  Formula sys_prefix_violation;
  Formula env_stalled;            // play ends on System's unacknowledged oks
  Formula sys_stalled;            // play ends mid-pattern (or never started)
  Formula env_moved_after_ko;
  Formula sys_moved_after_ko;

  // Cheat detectors anchored at the last oke (closed formulas):
  Formula bad_sequence;        // pattern letters out of order or duplicated
  Formula bad_target_state;    // state does not follow the last transition
  Formula bad_source_state;    // transition does not start in its state
  Formula bad_counter_upkeep;  // inc/dec/noop letter inconsistent
  Formula bad_zero_test;       // zero test while the counter is nonzero
};

CompiledSpec compile_to_fo2_ord(const MinskyMachine& m,
                                const CompileOptions& opts = {});

}  // namespace dwsynth
