#pragma once

#include <string>
#include <string_view>

#include "fltm/machine.hpp"

namespace fltm {

// Text format (.tm):
//   tm v1
//   start <label>
//   accept <label>
//   reject <label>
//   <label> <sym> -> <sym'> <move> <label'>    one line per transition
// with <sym> in {0, 1, _} and <move> in {L, R}. Lines starting with '#'
// and blank lines are ignored. Serialized transitions come in (state id,
// symbol 0/1/_) order, so the output is byte-deterministic.
std::string serialize_machine(const Machine& m);

// Parses the format above. State ids: start, accept, reject take 0, 1, 2;
// the rest are numbered in order of first appearance as a transition
// source (labels that only ever appear as targets come last). That makes
// parse(serialize(m)) == m for every machine this toolchain produces.
// Throws ParseError with line numbers on malformed input; the result is
// not validated beyond well-formedness, run validate() for that.
Machine parse_machine(std::string_view text);

// Graphviz export: one node per state (accept doublecircle, reject box,
// start bold), one edge per transition labeled "read/write,move". Node
// and edge order follow state ids, so the output is byte-deterministic.
std::string to_dot(const Machine& m);

}  // namespace fltm
