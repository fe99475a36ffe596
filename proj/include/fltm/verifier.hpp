#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fltm/compiler.hpp"
#include "fltm/language.hpp"
#include "fltm/machine.hpp"

namespace fltm {

struct Counterexample {
  std::string word;  // "" is the empty word
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string property;
  std::uint64_t words_tested = 0;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

// Enumerates every word of length 0..max_len — 2^(max_len+1) - 1 of them —
// in (length, lexicographic) order. The callback receives each word as a
// view into a reused buffer and returns false to stop early.
template <class F>
void for_each_word(std::size_t max_len, F&& f) {
  if (!f(std::string_view{})) return;
  std::string buf;
  for (std::size_t len = 1; len <= max_len; ++len) {
    buf.assign(len, '0');
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t value = 0; value < count; ++value) {
      for (std::size_t i = 0; i < len; ++i)
        buf[i] = ((value >> (len - 1 - i)) & 1) ? '1' : '0';
      if (!f(std::string_view{buf})) return;
    }
  }
}

// Runs the machine on every word of length 0..n+extra and compares the
// verdict against set membership. Stops at the first mismatch, which is
// reported as the counterexample. Refuses n+extra > 22 without force.
VerificationReport verify_equivalence(const Machine& m, const FiniteLanguage& lang,
                                      unsigned extra = 2, bool force = false);

// Checks steps <= |w|+1 on every word of length 0..n+extra. For
// backend == Dense additionally checks steps == expected_dense_steps
// exactly. Same guard as verify_equivalence.
VerificationReport verify_step_bound(const Machine& m, const FiniteLanguage& lang,
                                     unsigned extra, Backend backend,
                                     bool force = false);

// For machines compiled from the same language: equal verdicts everywhere,
// trie steps <= dense steps everywhere, equal steps on accepted words.
VerificationReport cross_check(const Machine& dense, const Machine& trie,
                               std::size_t n, unsigned extra = 2, bool force = false);

// Deterministic in (n, size, seed) across runs and platforms (mt19937_64
// with modulo sampling). Returns `size` distinct words of length <= n,
// including at least one of length exactly n when size >= 1, so the
// result's max_len equals n. Throws Error when size > 2^(n+1) - 1.
FiniteLanguage random_language(std::size_t n, std::size_t size, std::uint64_t seed);

// Swaps the accept/reject target of the (s, Blank) transition. Compiled
// machines send every blank read to a halting state, so this turns one
// membership answer wrong — the mutation used to show the verifier has
// teeth. Throws Error if s has no blank transition into accept or reject.
void flip_blank_transition(Machine& m, StateId s);

}  // namespace fltm
