#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fltm/machine.hpp"

namespace fltm {

// Run snapshot. The tape is two-way infinite with Blank default; only
// non-Blank cells are stored, so memory stays proportional to what is
// actually written rather than to any step limit.
struct Configuration {
  StateId state = 0;
  std::map<std::int64_t, Symbol> tape;
  std::int64_t head = 0;
  std::uint64_t steps = 0;

  Symbol read() const {
    auto it = tape.find(head);
    return it == tape.end() ? Symbol::Blank : it->second;
  }

  bool operator==(const Configuration&) const = default;
};

enum class Verdict { Accept, Reject, StepLimitExceeded };

const char* to_string(Verdict v);

struct RunOutcome {
  Verdict verdict = Verdict::Reject;
  std::uint64_t steps = 0;
  std::optional<std::vector<Configuration>> trace;
};

// Input symbols go to cells 0..|input|-1 (first symbol at cell 0), head at
// cell 0, steps 0. The empty input leaves the tape all Blank.
// Throws Error if `input` contains anything but '0'/'1'.
Configuration initial_configuration(const Machine& m, std::string_view input);

// One application of delta: read, write, move, switch state, steps + 1.
// Throws Error on a halting state or an undefined transition (both signal
// a machine that validate() would have rejected).
Configuration step(const Machine& m, const Configuration& c);

// Iterates step() from initial_configuration(m, input) until a halting
// state is entered or step_limit is reached. Entering accept/reject counts
// as a step; nothing runs after halting. With want_trace the outcome
// carries every configuration from the initial one to the last.
RunOutcome run(const Machine& m, std::string_view input, std::uint64_t step_limit,
               bool want_trace = false);

}  // namespace fltm
