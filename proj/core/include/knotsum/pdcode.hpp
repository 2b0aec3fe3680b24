#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <knotsum/gamma.hpp>

namespace knotsum {

// One crossing: signed edge labels counterclockwise from the incoming
// under-edge.  Incoming edges are positive, outgoing negative.
using Quad = std::array<int, 4>;

// A knot diagram in signed planar-diagram notation.  A valid code with n
// crossings uses labels 1..2n, each once with either sign; the empty code
// is the crossingless unknot diagram.
struct PdCode {
  std::vector<Quad> quads;

  int crossings() const { return static_cast<int>(quads.size()); }
  int edge_count() const { return 2 * crossings(); }
  bool empty() const { return quads.empty(); }

  friend bool operator==(const PdCode&, const PdCode&) = default;
  friend bool operator<(const PdCode& a, const PdCode& b) {
    return a.quads < b.quads;
  }
};

struct PdViolation {
  std::string message;
  int quad = -1;  // offending quadruple index, -1 for global violations
};

// Syntax only; throws ParseError with a byte offset on malformed text.
// Grammar: code := '[' quad (',' quad)* ']' | '[]';
//          quad := '[' int ',' int ',' int ',' int ']';
//          int  := '-'? [1-9][0-9]*;  whitespace ignored between tokens.
PdCode parse_pdcode_raw(std::string_view text);

// Syntax plus structural validation; throws ParseError or Error.
PdCode parse_pdcode(std::string_view text);

// No whitespace, signs only on negative labels; parse round-trips.
std::string serialize(const PdCode& code);

// Checks every structural invariant; reports the first violation found.
std::optional<PdViolation> validate(const PdCode& code);

// The action of Gamma on diagrams.  Mirror switches every crossing on the
// same shadow (each quadruple restarts at the old incoming over-edge);
// reverse flips orientation (sign flip, relabel k -> 2n+1-k, quadruple
// restarts at the old outgoing under-edge).  Composites apply mirror first.
// Throws Error on an invalid input code.
PdCode apply_gamma(GammaElement g, const PdCode& code);

// Connected sum along the edges labeled 1: shift d1's labels up by d2's
// edge count except the label -1, splice -1 -> -(n2+1) into d2's quadruple
// containing +n2, then concatenate.  Inputs must be valid and nonempty.
PdCode connected_sum(const PdCode& d1, const PdCode& d2);

// Left fold of connected_sum; the list must be nonempty.
PdCode connected_sum_list(const std::vector<PdCode>& codes);

// Lexicographically least code over all 2n cyclic relabelings, quadruples
// sorted by first entry.  Idempotent; throws Error on invalid input.
PdCode canonical_form(const PdCode& code);

// Equality of canonical forms.
bool diagram_equal(const PdCode& a, const PdCode& b);

}  // namespace knotsum
