#include "fltm/language.hpp"

#include <algorithm>
#include <unordered_set>

namespace fltm {

namespace {

constexpr std::size_t kMaxFileWordLength = 64;

bool is_binary(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace

bool word_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

FiniteLanguage FiniteLanguage::from_words(std::vector<std::string> ws) {
  for (const auto& w : ws)
    if (!is_binary(w))
      throw Error("word \"" + w + "\" is not a binary string");
  std::sort(ws.begin(), ws.end(),
            [](const std::string& a, const std::string& b) { return word_less(a, b); });
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

  FiniteLanguage lang;
  lang.words = std::move(ws);
  lang.max_len = lang.words.empty() ? 0 : lang.words.back().size();
  return lang;
}

bool contains(const FiniteLanguage& lang, std::string_view w) {
  return std::binary_search(lang.words.begin(), lang.words.end(), w,
                            [](std::string_view a, std::string_view b) {
                              return word_less(a, b);
                            });
}

std::size_t max_word_length(const FiniteLanguage& lang) { return lang.max_len; }

FiniteLanguage parse_language(std::string_view text,
                              std::vector<std::string>* warnings) {
  std::vector<std::string> words;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      if (pos == text.size()) break;
      eol = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;

    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                             line.back() == '\r'))
      line.remove_suffix(1);

    if (line.empty() || line.front() == '#') continue;

    std::string word;
    if (line == "eps") {
      word = "";
    } else if (is_binary(line)) {
      if (line.size() > kMaxFileWordLength)
        throw ParseError("line " + std::to_string(line_no) + ": word longer than " +
                         std::to_string(kMaxFileWordLength) + " symbols: \"" +
                         std::string(line) + "\"");
      word = std::string(line);
    } else {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a string over {0,1}, \"eps\", a comment or a "
                       "blank line, got \"" +
                       std::string(line) + "\"");
    }

    if (!seen.insert(word).second) {
      if (warnings)
        warnings->push_back("line " + std::to_string(line_no) + ": duplicate word \"" +
                            (word.empty() ? std::string("eps") : word) + "\" ignored");
      continue;
    }
    words.push_back(std::move(word));
  }
  return FiniteLanguage::from_words(std::move(words));
}

std::string serialize_language(const FiniteLanguage& lang) {
  std::string out;
  for (const auto& w : lang.words) {
    out += w.empty() ? "eps" : w;
    out += '\n';
  }
  return out;
}

}  // namespace fltm
