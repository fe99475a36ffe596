#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fltm {

// Tape alphabet. Zero and One are the input symbols, Blank is tape-only.
// The numeric order 0, 1, _ is also the canonical symbol order used by
// serialization and DOT export.
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };

inline constexpr std::array<Symbol, 3> kAllSymbols = {Symbol::Zero, Symbol::One,
                                                      Symbol::Blank};

enum class Direction : std::int8_t { Left = -1, Right = +1 };

char to_char(Symbol s);
std::optional<Symbol> symbol_from_char(char c);

// Dense index into Machine::labels.
using StateId = std::uint32_t;

struct Transition {
  StateId next = 0;
  Symbol write = Symbol::Blank;
  Direction move = Direction::Right;

  bool operator==(const Transition&) const = default;
};

// Base error type for everything this library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File/text parse failure; message carries line number and content.
struct ParseError : Error {
  using Error::Error;
};

// Refusal to do something expensive without an explicit force flag.
struct GuardError : Error {
  using Error::Error;
};

// Immutable deterministic single-tape machine. State ids are contiguous
// from 0 and index into `labels`; `delta[s][symbol]` is the outgoing
// transition, absent for halting states (and for invalid machines, which
// validate() reports).
struct Machine {
  std::vector<std::string> labels;
  StateId start = 0;
  StateId accept = 0;
  StateId reject = 0;
  std::vector<std::array<std::optional<Transition>, 3>> delta;

  std::size_t state_count() const { return labels.size(); }
  std::size_t transition_count() const;

  bool is_halting(StateId s) const { return s == accept || s == reject; }

  const std::optional<Transition>& transition(StateId s, Symbol g) const {
    return delta[s][static_cast<std::size_t>(g)];
  }

  void set_transition(StateId s, Symbol g, Transition t) {
    delta[s][static_cast<std::size_t>(g)] = t;
  }

  bool operator==(const Machine&) const = default;
};

// Returns a description per violated invariant, empty when the machine is
// well formed. Violations name the offending state or (state, symbol) pair.
std::vector<std::string> validate(const Machine& m);

}  // namespace fltm
