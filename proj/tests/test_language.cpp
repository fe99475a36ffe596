#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fltm/language.hpp"
#include "fltm/verifier.hpp"

using namespace fltm;

TEST_CASE("contains is raw-sequence membership") {
  const auto lang = FiniteLanguage::from_words({"1", "01", "110"});
  CHECK(contains(lang, "01"));
  CHECK(contains(lang, "1"));
  CHECK(!contains(lang, "10"));
  CHECK(!contains(lang, ""));
  CHECK(!contains(FiniteLanguage{}, ""));
}

TEST_CASE("leading zeros are significant") {
  const auto lang = FiniteLanguage::from_words({"01"});
  CHECK(contains(lang, "01"));
  CHECK(!contains(lang, "1"));
  CHECK(!contains(lang, "001"));
}

TEST_CASE("max word length") {
  CHECK(max_word_length(FiniteLanguage::from_words({"1", "01", "110"})) == 3);
  CHECK(max_word_length(FiniteLanguage::from_words({""})) == 0);
  CHECK(max_word_length(FiniteLanguage{}) == 0);
}

TEST_CASE("from_words sorts, dedups and recomputes n") {
  const auto lang = FiniteLanguage::from_words({"110", "1", "1", "01"});
  CHECK(lang.words == std::vector<std::string>{"1", "01", "110"});
  CHECK(lang.max_len == 3);

  auto longer = lang.words;
  longer.push_back("0000");
  CHECK(FiniteLanguage::from_words(longer).max_len == 4);

  CHECK_THROWS_AS(FiniteLanguage::from_words({"102"}), Error);
}

TEST_CASE("parse_language basics") {
  const auto lang = parse_language("1\n01\n110\n");
  CHECK(lang.words == std::vector<std::string>{"1", "01", "110"});
  CHECK(lang.max_len == 3);

  CHECK(parse_language("eps\n").words == std::vector<std::string>{""});
  CHECK(parse_language("eps\n").max_len == 0);
  CHECK(parse_language("").empty());
}

TEST_CASE("parse_language ignores comments, blanks and trailing whitespace") {
  const auto lang = parse_language("# header\n\n  \n1 \t\n# more\neps\r\n01\n");
  CHECK(lang.words == std::vector<std::string>{"", "1", "01"});
}

TEST_CASE("parse_language warns on duplicates instead of failing") {
  std::vector<std::string> warnings;
  const auto lang = parse_language("1\n1\n", &warnings);
  CHECK(lang.words == std::vector<std::string>{"1"});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("line 2") != std::string::npos);
  CHECK(warnings[0].find("duplicate") != std::string::npos);

  warnings.clear();
  parse_language("eps\neps\n", &warnings);
  CHECK(warnings.size() == 1);
}

TEST_CASE("parse_language rejects malformed lines with position info") {
  CHECK_THROWS_WITH_AS(parse_language("1\nabc\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_language("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_language(" 01\n"), ParseError);   // leading space
  CHECK_THROWS_AS(parse_language("epsx\n"), ParseError);
  const std::string long_word(65, '0');
  CHECK_THROWS_WITH_AS(parse_language(long_word + "\n"),
                       doctest::Contains("64"), ParseError);
  CHECK_NOTHROW(parse_language(std::string(64, '0') + "\n"));
}

TEST_CASE("serialize_language emits (length, lex) order") {
  CHECK(serialize_language(FiniteLanguage::from_words({"110", "01", "1"})) ==
        "1\n01\n110\n");
  CHECK(serialize_language(FiniteLanguage::from_words({""})) == "eps\n");
  CHECK(serialize_language(FiniteLanguage{}) == "");
  CHECK(serialize_language(FiniteLanguage::from_words({"10", "0", "", "00"})) ==
        "eps\n0\n00\n10\n");
}

TEST_CASE("language round-trip holds for random languages") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const std::size_t n = seed % 9;
    const std::uint64_t space = (std::uint64_t{2} << n) - 1;
    const auto lang = random_language(n, std::min<std::uint64_t>((seed * 3) % 40, space),
                                      seed);
    const auto back = parse_language(serialize_language(lang));
    CHECK(back.words == lang.words);
    CHECK(back.max_len == lang.max_len);
  }
}

TEST_CASE("contains agrees with a linear scan") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto lang = random_language(6, 20, seed);
    for_each_word(7, [&](std::string_view w) {
      const bool scanned = std::find(lang.words.begin(), lang.words.end(), w) !=
                           lang.words.end();
      CHECK(contains(lang, w) == scanned);
      return true;
    });
  }
}
