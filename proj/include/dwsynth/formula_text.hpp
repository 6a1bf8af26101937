#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dwsynth/formula.hpp"
#include "dwsynth/signature.hpp"

namespace dwsynth {

// Concrete syntax:
//   E x. a(x) & (x ~ y | !ProcM(y))
// Quantifiers `E x.` / `A x.` scope maximally to the right; precedence
// ! > & > |; atoms are a(x), x=y, x<y, x=y+1, x~y, ProcS/ProcE/ProcM(x),
// true, false. `x = y+1` reads "x is the successor of y". `#` starts a
// line comment. Action atoms are checked against the signature.
Formula parse_formula(std::string_view text, const Signature& sig);

// Non-normalizing printer; parse_formula(render_formula(f)) == f.
std::string render_formula(const Formula& f);

// Signature spec of the form `S={a,b} E={c}` (spacing flexible, either
// side may be empty as `S={}`).
Signature parse_signature_spec(std::string_view text);
std::string render_signature_spec(const Signature& sig);

// Formula file: optional `sig S={..} E={..}` header line, then one
// formula (may span lines). Uses the header signature when present,
// otherwise `fallback`; errors if neither is available.
struct FormulaFileContents {
  Formula formula;
  Signature signature;
  bool signature_from_file = false;
};
FormulaFileContents load_formula_file(
    const std::string& path,
    const std::optional<Signature>& fallback = std::nullopt);

FormulaFileContents parse_formula_file_text(
    std::string_view text,
    const std::optional<Signature>& fallback = std::nullopt);

std::string render_formula_file(const Formula& f, const Signature& sig);

}  // namespace dwsynth
