#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fltm/compiler.hpp"
#include "fltm/language.hpp"
#include "fltm/simulate.hpp"
#include "fltm/verifier.hpp"

using namespace fltm;

namespace {

FiniteLanguage lang_of(std::vector<std::string> words) {
  return FiniteLanguage::from_words(std::move(words));
}

}  // namespace

TEST_CASE("for_each_word enumerates each word once, ordered") {
  std::vector<std::string> words;
  for_each_word(2, [&](std::string_view w) {
    words.emplace_back(w);
    return true;
  });
  CHECK(words == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});

  std::uint64_t count = 0;
  for_each_word(10, [&](std::string_view) {
    ++count;
    return true;
  });
  CHECK(count == (std::uint64_t{1} << 11) - 1);
}

TEST_CASE("verify_equivalence passes on compiled machines") {
  const auto lang = lang_of({"1", "01", "110"});
  const auto report = verify_equivalence(compile_dense(lang), lang, 2);
  CHECK(report.pass);
  CHECK(report.words_tested == 63);
  CHECK(report.property == "equivalence");
  CHECK(!report.counterexample);

  const auto empty_report =
      verify_equivalence(compile_dense(FiniteLanguage{}), FiniteLanguage{}, 2);
  CHECK(empty_report.pass);
  CHECK(empty_report.words_tested == 7);
}

TEST_CASE("verify_equivalence catches a flipped membership answer") {
  const auto lang = lang_of({"01"});
  Machine m = compile_dense(lang);
  flip_blank_transition(m, static_cast<StateId>(prefix_state_index("01") + 1));
  REQUIRE(validate(m).empty());  // mutation keeps the machine well formed

  const auto report = verify_equivalence(m, lang, 0);
  CHECK(!report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->word == "01");
  CHECK(report.counterexample->expected == "accept");
  CHECK(report.counterexample->observed == "reject");
}

TEST_CASE("flipping the start blank transition misclassifies the empty word") {
  const auto lang = lang_of({""});
  Machine m = compile_dense(lang);
  flip_blank_transition(m, m.start);
  const auto report = verify_equivalence(m, lang, 2);
  CHECK(!report.pass);
  CHECK(report.counterexample->word == "eps");
}

TEST_CASE("flip_blank_transition rejects unusable states") {
  Machine m = compile_dense(lang_of({"1"}));
  CHECK_THROWS_AS(flip_blank_transition(m, m.accept), Error);
  CHECK_THROWS_AS(flip_blank_transition(m, 999), Error);
}

TEST_CASE("verify_step_bound checks the bound and the dense formula") {
  const auto lang = lang_of({"1", "01", "110"});
  const Machine dense = compile_dense(lang);
  const Machine trie = compile_trie(lang);

  const auto dense_report = verify_step_bound(dense, lang, 2, Backend::Dense);
  CHECK(dense_report.pass);
  CHECK(dense_report.words_tested == 63);
  CHECK(run(dense, "110", 10).steps == 4);  // 3+1, bound tight

  const auto trie_report = verify_step_bound(trie, lang, 2, Backend::Trie);
  CHECK(trie_report.pass);

  // the trie halts earlier than the dense formula on dead prefixes, which
  // the exact check must flag
  const auto mismatched = verify_step_bound(trie, lang, 2, Backend::Dense);
  CHECK(!mismatched.pass);
}

TEST_CASE("verify_step_bound flags a machine that overruns the bound") {
  // two states ping-ponging on the first cell before rejecting: the empty
  // word takes 3 steps, exceeding 0+1
  Machine m;
  m.labels = {"a", "acc", "rej", "b"};
  m.start = 0;
  m.accept = 1;
  m.reject = 2;
  m.delta.assign(4, {});
  for (Symbol g : kAllSymbols) {
    m.set_transition(0, g, {3, Symbol::Blank, Direction::Right});
    m.set_transition(3, g, {2, Symbol::Blank, Direction::Left});
  }
  m.set_transition(3, Symbol::Blank, {0, Symbol::Blank, Direction::Left});
  REQUIRE(validate(m).empty());

  const auto lang = FiniteLanguage{};
  const auto report = verify_step_bound(m, lang, 2, Backend::Trie);
  CHECK(!report.pass);
  REQUIRE(report.counterexample);
  CHECK(report.counterexample->word == "eps");
}

TEST_CASE("cross_check accepts matching backends") {
  const auto lang = lang_of({"1", "01", "110"});
  const auto report =
      cross_check(compile_dense(lang), compile_trie(lang), lang.max_len, 2);
  CHECK(report.pass);
  CHECK(report.words_tested == 63);

  const auto empty = FiniteLanguage{};
  const auto empty_report =
      cross_check(compile_dense(empty), compile_trie(empty), 0, 2);
  CHECK(empty_report.pass);
}

TEST_CASE("cross_check flags verdict disagreement") {
  const auto lang = lang_of({"1", "01", "110"});
  const Machine dense = compile_dense(lang);
  Machine trie = compile_trie(lang);
  flip_blank_transition(trie, static_cast<StateId>(3));  // first trie prefix state
  const auto report = cross_check(dense, trie, lang.max_len, 2);
  CHECK(!report.pass);
  REQUIRE(report.counterexample);
}

TEST_CASE("enumeration guard") {
  const auto lang = lang_of({std::string(21, '1')});
  const Machine trie = compile_trie(lang);
  CHECK_THROWS_AS(verify_equivalence(trie, lang, 2), GuardError);
  CHECK_THROWS_AS(verify_step_bound(trie, lang, 2, Backend::Trie), GuardError);
  CHECK_THROWS_AS(cross_check(trie, trie, lang.max_len, 2), GuardError);
  // force lifts it (n+extra = 21+0 with extra 0 stays within reach)
  CHECK_NOTHROW(verify_equivalence(trie, lang, 0));
}

TEST_CASE("random_language is deterministic and well formed") {
  const auto a = random_language(3, 7, 1234);
  const auto b = random_language(3, 7, 1234);
  CHECK(a.words == b.words);
  CHECK(a.size() == 7);
  CHECK(a.max_len == 3);

  CHECK(random_language(3, 0, 7).empty());
  CHECK(random_language(0, 1, 7).words == std::vector<std::string>{""});

  const auto full = random_language(3, 15, 42);
  CHECK(full.size() == 15);  // the whole space of length <= 3

  CHECK_THROWS_AS(random_language(3, 16, 42), Error);
  CHECK(random_language(3, 7, 1) .words != random_language(3, 7, 2).words);
}

TEST_CASE("random corpus passes all verifications") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const std::size_t n = seed % 9;
    const auto space = (std::uint64_t{2} << n) - 1;
    const auto lang =
        random_language(n, std::min<std::uint64_t>(seed * 4, space), seed * 101);
    const Machine dense = compile_dense(lang);
    const Machine trie = compile_trie(lang);
    CHECK(verify_equivalence(dense, lang, 2).pass);
    CHECK(verify_equivalence(trie, lang, 2).pass);
    CHECK(verify_step_bound(dense, lang, 2, Backend::Dense).pass);
    CHECK(verify_step_bound(trie, lang, 2, Backend::Trie).pass);
    CHECK(cross_check(dense, trie, lang.max_len, 2).pass);
  }
}

TEST_CASE("mutating any dense blank transition yields a counterexample of its length") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 10; ++round) {
    const std::size_t n = 1 + round % 4;
    const auto space = (std::uint64_t{2} << n) - 1;
    const auto lang =
        random_language(n, 1 + rng() % (space - 1), rng());
    Machine m = compile_dense(lang);

    // pick any state with a blank transition: start or a prefix state
    std::vector<StateId> candidates;
    for (StateId s = 0; s < m.state_count(); ++s)
      if (!m.is_halting(s)) candidates.push_back(s);
    const StateId victim = candidates[rng() % candidates.size()];
    flip_blank_transition(m, victim);

    const auto report = verify_equivalence(m, lang, 2);
    CHECK(!report.pass);
    REQUIRE(report.counterexample);
    const std::string expected_word =
        victim == m.start ? "" : prefix_from_index(victim - 1);
    const std::string reported = report.counterexample->word == "eps"
                                     ? ""
                                     : report.counterexample->word;
    CHECK(reported == expected_word);
    CHECK(reported.size() == expected_word.size());
  }
}
