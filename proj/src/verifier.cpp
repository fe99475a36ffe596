#include "fltm/verifier.hpp"

#include <random>
#include <set>

#include "fltm/simulate.hpp"

namespace fltm {

namespace {

constexpr unsigned kEnumerationGuard = 22;

void check_guard(std::size_t n, unsigned extra, bool force) {
  if (!force && n + extra > kEnumerationGuard)
    throw GuardError("enumeration refused: n+extra=" + std::to_string(n + extra) +
                     " exceeds the guard of " + std::to_string(kEnumerationGuard) +
                     " (force to override)");
}

}  // namespace

VerificationReport verify_equivalence(const Machine& m, const FiniteLanguage& lang,
                                      unsigned extra, bool force) {
  const std::size_t n = lang.max_len;
  check_guard(n, extra, force);
  const std::uint64_t limit = n + extra + 2;

  VerificationReport report{.property = "equivalence"};
  for_each_word(n + extra, [&](std::string_view w) {
    ++report.words_tested;
    const bool member = contains(lang, w);
    const RunOutcome out = run(m, w, limit);
    const bool accepted = out.verdict == Verdict::Accept;
    if (out.verdict == Verdict::StepLimitExceeded || accepted != member) {
      report.pass = false;
      report.counterexample = Counterexample{
          .word = word_name(w),
          .expected = member ? "accept" : "reject",
          .observed = to_string(out.verdict)};
      return false;
    }
    return true;
  });
  return report;
}

VerificationReport verify_step_bound(const Machine& m, const FiniteLanguage& lang,
                                     unsigned extra, Backend backend, bool force) {
  const std::size_t n = lang.max_len;
  check_guard(n, extra, force);
  const std::uint64_t limit = n + extra + 2;

  VerificationReport report{.property = "step-bound"};
  for_each_word(n + extra, [&](std::string_view w) {
    ++report.words_tested;
    const RunOutcome out = run(m, w, limit);
    if (out.verdict == Verdict::StepLimitExceeded || out.steps > w.size() + 1) {
      report.pass = false;
      report.counterexample =
          Counterexample{.word = word_name(w),
                         .expected = "halt within " + std::to_string(w.size() + 1) +
                                     " steps",
                         .observed = out.verdict == Verdict::StepLimitExceeded
                                         ? "no halt within " + std::to_string(limit)
                                         : std::to_string(out.steps) + " steps"};
      return false;
    }
    if (backend == Backend::Dense) {
      const std::uint64_t expected = expected_dense_steps(n, w.size());
      if (out.steps != expected) {
        report.pass = false;
        report.counterexample = Counterexample{
            .word = word_name(w),
            .expected = "exactly " + std::to_string(expected) + " steps",
            .observed = std::to_string(out.steps) + " steps"};
        return false;
      }
    }
    return true;
  });
  return report;
}

VerificationReport cross_check(const Machine& dense, const Machine& trie,
                               std::size_t n, unsigned extra, bool force) {
  check_guard(n, extra, force);
  const std::uint64_t limit = n + extra + 2;

  VerificationReport report{.property = "cross-check"};
  for_each_word(n + extra, [&](std::string_view w) {
    ++report.words_tested;
    const RunOutcome d = run(dense, w, limit);
    const RunOutcome t = run(trie, w, limit);
    const auto flag = [&](std::string expected, std::string observed) {
      report.pass = false;
      report.counterexample = Counterexample{.word = word_name(w),
                                             .expected = std::move(expected),
                                             .observed = std::move(observed)};
    };
    if (d.verdict != t.verdict) {
      flag(std::string("matching verdicts, dense=") + to_string(d.verdict),
           std::string("trie=") + to_string(t.verdict));
      return false;
    }
    if (t.steps > d.steps) {
      flag("trie steps <= dense steps (" + std::to_string(d.steps) + ")",
           std::to_string(t.steps) + " steps");
      return false;
    }
    if (d.verdict == Verdict::Accept && t.steps != d.steps) {
      flag("equal steps on accepted words (dense " + std::to_string(d.steps) + ")",
           std::to_string(t.steps) + " steps");
      return false;
    }
    return true;
  });
  return report;
}

FiniteLanguage random_language(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (n > 62)
    throw Error("random_language supports n up to 62, got " + std::to_string(n));
  const std::uint64_t total = (std::uint64_t{2} << n) - 1;  // words of length <= n
  if (size > total)
    throw Error("size " + std::to_string(size) + " exceeds the " +
                std::to_string(total) + " words of length <= " + std::to_string(n));

  std::mt19937_64 rng(seed);
  const auto word_of_value = [](std::uint64_t value, std::size_t len) {
    std::string w(len, '0');
    for (std::size_t i = 0; i < len; ++i)
      if ((value >> (len - 1 - i)) & 1) w[i] = '1';
    return w;
  };
  // Global rank over the (length, lexicographic) enumeration: ranks
  // [2^len - 1, 2^(len+1) - 1) hold the words of that length.
  const auto word_of_rank = [&](std::uint64_t rank) {
    std::size_t len = 0;
    std::uint64_t first = 0;
    while (rank >= first + (std::uint64_t{1} << len)) {
      first += std::uint64_t{1} << len;
      ++len;
    }
    return word_of_value(rank - first, len);
  };

  std::set<std::string> words;
  if (size > 0) {
    // One word of length exactly n keeps the requested n the actual max.
    words.insert(word_of_value(rng() % (std::uint64_t{1} << n), n));
    while (words.size() < size) words.insert(word_of_rank(rng() % total));
  }
  return FiniteLanguage::from_words({words.begin(), words.end()});
}

void flip_blank_transition(Machine& m, StateId s) {
  if (s >= m.state_count())
    throw Error("state id " + std::to_string(s) + " out of range");
  auto& t = m.delta[s][static_cast<std::size_t>(Symbol::Blank)];
  if (!t) throw Error("state " + m.labels[s] + " has no blank transition");
  if (t->next == m.accept)
    t->next = m.reject;
  else if (t->next == m.reject)
    t->next = m.accept;
  else
    throw Error("blank transition of " + m.labels[s] +
                " does not target a halting state");
}

}  // namespace fltm
