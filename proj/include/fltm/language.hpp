#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fltm/machine.hpp"

namespace fltm {

// Finite set of binary words. Words are raw bit strings, so leading zeros
// matter: "01" and "1" are different words. `words` is kept sorted by
// (length, lexicographic) with no duplicates; `max_len` is recomputed on
// construction (0 for the empty set and for {lambda}).
struct FiniteLanguage {
  std::vector<std::string> words;
  std::size_t max_len = 0;

  // Sorts, deduplicates and recomputes max_len. Throws Error if any word
  // contains a character other than '0'/'1'.
  static FiniteLanguage from_words(std::vector<std::string> ws);

  std::size_t size() const { return words.size(); }
  bool empty() const { return words.empty(); }
};

// Comparison used for the canonical word order: length first, then
// lexicographic.
bool word_less(std::string_view a, std::string_view b);

// Set membership of the raw bit string `w`.
bool contains(const FiniteLanguage& lang, std::string_view w);

// n = max |w| over the language, 0 for the empty set.
std::size_t max_word_length(const FiniteLanguage& lang);

// Language file format (.lang): newline-delimited; blank lines and lines
// starting with '#' are ignored; "eps" is the empty word; anything else
// must be a string over {0,1} of length <= 64. Trailing whitespace is
// stripped. Duplicate words are dropped with a warning appended to
// *warnings (when given). Throws ParseError for malformed lines, naming
// line number and content.
FiniteLanguage parse_language(std::string_view text,
                              std::vector<std::string>* warnings = nullptr);

// One word per line in (length, lexicographic) order, the empty word as
// "eps". parse_language(serialize_language(L)) == L.
std::string serialize_language(const FiniteLanguage& lang);

}  // namespace fltm
