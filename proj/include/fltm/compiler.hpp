#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fltm/language.hpp"
#include "fltm/machine.hpp"

namespace fltm {

enum class Backend { Dense, Trie };

const char* to_string(Backend b);

struct CompileOptions {
  Backend backend = Backend::Dense;
  // Dense compilation with max_len > max_n_guard is refused unless force
  // is set (2^(n+1)+1 states add up quickly).
  unsigned max_n_guard = 20;
  bool force = false;
};

// Sentinel encoding of a binary prefix p = p_0 p_1 ... p_{m-1} (p_0 read
// first): index(p) = 2^m + sum p_i * 2^i. The first symbol read is the
// least significant bit, so a word sits on the tape with its low bit
// first. The sentinel bit keeps prefixes with leading zeros apart:
// "0" -> 2, "1" -> 3, "00" -> 4, "10" -> 5, "01" -> 6, "11" -> 7.
// Requires 1 <= |p| <= 63.
std::uint64_t prefix_state_index(std::string_view prefix);

// Inverse of prefix_state_index: the length is bit_width(index)-1 and the
// bits are the low ones, least significant first. Requires index >= 2.
std::string prefix_from_index(std::uint64_t index);

// The paper-shaped backend: one state per binary prefix of every length
// 1..n, whether or not it can still lead to a word of L. State ids are
// 0 = q_start, 1 = q_accept, 2 = q_reject, then prefix_state_index(p) + 1
// for each prefix p, giving exactly 2^(n+1)+1 states for n >= 1 and 3 for
// n = 0. Every transition writes Blank and moves Right; reading the
// (n+1)-th input symbol goes straight to reject. Throws GuardError when
// n exceeds opts.max_n_guard without force.
Machine compile_dense(const FiniteLanguage& lang, const CompileOptions& opts = {});

// Keeps only the prefixes that can still be extended to a word of L and
// rejects eagerly on the first symbol that cannot. Verdict-equivalent to
// the dense machine on every input; never takes more steps, and takes
// exactly as many on accepted inputs. 3 + |distinct nonempty prefixes of
// members of L| states.
Machine compile_trie(const FiniteLanguage& lang,
                     const CompileOptions& opts = {.backend = Backend::Trie});

// Dispatch on opts.backend.
Machine compile(const FiniteLanguage& lang, const CompileOptions& opts);

// Closed-form step count of a dense machine with parameter n on an input
// of the given length: length+1 up to n, n+1 beyond (the overflow reject
// fires on the (n+1)-th read).
std::uint64_t expected_dense_steps(std::size_t n, std::size_t input_length);

}  // namespace fltm
