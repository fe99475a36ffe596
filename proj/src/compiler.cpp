#include "fltm/compiler.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace fltm {

const char* to_string(Backend b) {
  return b == Backend::Dense ? "dense" : "trie";
}

std::uint64_t prefix_state_index(std::string_view prefix) {
  if (prefix.empty())
    throw Error("prefix_state_index requires a nonempty prefix");
  if (prefix.size() > 63)
    throw Error("prefix_state_index overflows for prefixes longer than 63 symbols");
  std::uint64_t index = std::uint64_t{1} << prefix.size();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == '1')
      index += std::uint64_t{1} << i;
    else if (prefix[i] != '0')
      throw Error("prefix \"" + std::string(prefix) + "\" is not a binary string");
  }
  return index;
}

std::string prefix_from_index(std::uint64_t index) {
  if (index < 2) throw Error("prefix indices start at 2");
  const unsigned len = std::bit_width(index) - 1;
  std::string prefix(len, '0');
  for (unsigned i = 0; i < len; ++i)
    if ((index >> i) & 1) prefix[i] = '1';
  return prefix;
}

namespace {

constexpr Transition to(StateId next) {
  return Transition{next, Symbol::Blank, Direction::Right};
}

Machine three_state_skeleton() {
  Machine m;
  m.labels = {"q_start", "q_accept", "q_reject"};
  m.start = 0;
  m.accept = 1;
  m.reject = 2;
  return m;
}

}  // namespace

Machine compile_dense(const FiniteLanguage& lang, const CompileOptions& opts) {
  if (opts.backend != Backend::Dense)
    throw Error("compile_dense called with a non-dense backend option");
  const std::size_t n = lang.max_len;
  if (n > opts.max_n_guard && !opts.force)
    throw GuardError("dense compilation refused: n=" + std::to_string(n) +
                     " exceeds the guard of " + std::to_string(opts.max_n_guard) +
                     " (force to override)");
  if (n >= 31)
    throw Error("dense compilation cannot represent n=" + std::to_string(n) +
                " (state ids would overflow)");

  Machine m = three_state_skeleton();
  const std::uint64_t num_states =
      n == 0 ? 3 : (std::uint64_t{1} << (n + 1)) + 1;
  m.labels.reserve(num_states);
  m.delta.assign(num_states, {});

  const bool has_lambda = contains(lang, "");
  m.set_transition(m.start, Symbol::Blank, to(has_lambda ? m.accept : m.reject));
  if (n == 0) {
    m.set_transition(m.start, Symbol::Zero, to(m.reject));
    m.set_transition(m.start, Symbol::One, to(m.reject));
    return m;
  }

  // Prefix p lives at state id index(p) + 1; ids are contiguous because
  // every prefix of every length 1..n is materialized.
  const auto id_of = [](std::uint64_t index) {
    return static_cast<StateId>(index + 1);
  };
  m.set_transition(m.start, Symbol::Zero, to(id_of(prefix_state_index("0"))));
  m.set_transition(m.start, Symbol::One, to(id_of(prefix_state_index("1"))));

  const std::uint64_t end = std::uint64_t{1} << (n + 1);
  for (std::uint64_t index = 2; index < end; ++index) {
    const std::string prefix = prefix_from_index(index);
    const std::size_t len = prefix.size();
    const StateId s = id_of(index);
    m.labels.push_back("q_" + prefix);
    if (len < n) {
      // Appending bit x puts it at position len: index grows by (1+x)*2^len.
      m.set_transition(s, Symbol::Zero, to(id_of(index + (std::uint64_t{1} << len))));
      m.set_transition(s, Symbol::One, to(id_of(index + (std::uint64_t{2} << len))));
    } else {
      m.set_transition(s, Symbol::Zero, to(m.reject));
      m.set_transition(s, Symbol::One, to(m.reject));
    }
    m.set_transition(s, Symbol::Blank, to(contains(lang, prefix) ? m.accept : m.reject));
  }
  return m;
}

Machine compile_trie(const FiniteLanguage& lang, const CompileOptions& opts) {
  if (opts.backend != Backend::Trie)
    throw Error("compile_trie called with a non-trie backend option");

  std::vector<std::string> prefixes;
  {
    std::unordered_set<std::string> seen;
    for (const auto& w : lang.words)
      for (std::size_t len = 1; len <= w.size(); ++len) {
        std::string p = w.substr(0, len);
        if (seen.insert(p).second) prefixes.push_back(std::move(p));
      }
  }
  std::sort(prefixes.begin(), prefixes.end(),
            [](const std::string& a, const std::string& b) { return word_less(a, b); });

  Machine m = three_state_skeleton();
  m.labels.reserve(3 + prefixes.size());
  m.delta.assign(3 + prefixes.size(), {});

  std::unordered_map<std::string_view, StateId> id_of;
  id_of.reserve(prefixes.size());
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    id_of.emplace(prefixes[i], static_cast<StateId>(3 + i));
    m.labels.push_back("q_" + prefixes[i]);
  }
  const auto target = [&](const std::string& p) {
    auto it = id_of.find(p);
    return it == id_of.end() ? m.reject : it->second;
  };

  m.set_transition(m.start, Symbol::Blank, to(contains(lang, "") ? m.accept : m.reject));
  m.set_transition(m.start, Symbol::Zero, to(target("0")));
  m.set_transition(m.start, Symbol::One, to(target("1")));

  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    const StateId s = static_cast<StateId>(3 + i);
    m.set_transition(s, Symbol::Zero, to(target(prefixes[i] + "0")));
    m.set_transition(s, Symbol::One, to(target(prefixes[i] + "1")));
    m.set_transition(s, Symbol::Blank,
                     to(contains(lang, prefixes[i]) ? m.accept : m.reject));
  }
  return m;
}

Machine compile(const FiniteLanguage& lang, const CompileOptions& opts) {
  return opts.backend == Backend::Dense ? compile_dense(lang, opts)
                                        : compile_trie(lang, opts);
}

std::uint64_t expected_dense_steps(std::size_t n, std::size_t input_length) {
  return input_length <= n ? input_length + 1 : n + 1;
}

}  // namespace fltm
