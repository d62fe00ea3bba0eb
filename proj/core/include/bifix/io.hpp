#pragma once

#include <iosfwd>
#include <string>

#include "bifix/dfa.hpp"

namespace bifix {

/// Line-oriented DFA text format. `#` starts a comment; tokens are
/// whitespace-separated:
///
///   dfa v1
///   states <n>
///   symbols <k> <name1> ... <namek>
///   initial <q>
///   finals <m> <f1> ... <fm>
///   delta
///   <k targets of state 0>
///   ...
///   <k targets of state n-1>
///   end
///
/// parse_dfa throws parse_error (with the offending line) on malformed
/// input; serialize_dfa(parse_dfa(text)) reproduces `text` up to comments
/// and whitespace, and parse_dfa(serialize_dfa(d)) == d field for field.
Dfa parse_dfa(std::istream& in);
Dfa parse_dfa(const std::string& text);
std::string serialize_dfa(const Dfa& d);

/// Deterministic Graphviz rendering. Parallel edges to the same target are
/// collapsed into one comma-separated label; a dead (empty) state is drawn
/// dashed with an "empty" annotation.
std::string export_dot(const Dfa& d);

} // namespace bifix
