#include "fltm/machine.hpp"

#include <cctype>
#include <string_view>
#include <unordered_set>

namespace fltm {

char to_char(Symbol s) {
  switch (s) {
    case Symbol::Zero: return '0';
    case Symbol::One: return '1';
    case Symbol::Blank: return '_';
  }
  return '?';
}

std::optional<Symbol> symbol_from_char(char c) {
  switch (c) {
    case '0': return Symbol::Zero;
    case '1': return Symbol::One;
    case '_': return Symbol::Blank;
    default: return std::nullopt;
  }
}

std::size_t Machine::transition_count() const {
  std::size_t count = 0;
  for (const auto& row : delta)
    for (const auto& t : row)
      if (t) ++count;
  return count;
}

static bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

static std::string pair_name(const Machine& m, StateId s, Symbol g) {
  return "(" + m.labels[s] + ", " + std::string(1, to_char(g)) + ")";
}

std::vector<std::string> validate(const Machine& m) {
  std::vector<std::string> violations;
  const std::size_t n = m.labels.size();

  if (n == 0) {
    violations.push_back("machine has no states");
    return violations;
  }
  if (m.delta.size() != n)
    violations.push_back("delta has " + std::to_string(m.delta.size()) +
                         " rows for " + std::to_string(n) + " states");

  std::unordered_set<std::string_view> seen;
  seen.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_label(m.labels[i]))
      violations.push_back("state " + std::to_string(i) + " has invalid label \"" +
                           m.labels[i] + "\"");
    if (!seen.insert(m.labels[i]).second)
      violations.push_back("duplicate label \"" + m.labels[i] + "\" (state " +
                           std::to_string(i) + ")");
  }

  for (auto [role, id] : {std::pair{"start", m.start}, {"accept", m.accept},
                          {"reject", m.reject}})
    if (id >= n)
      violations.push_back(std::string(role) + " state id " + std::to_string(id) +
                           " out of range");
  if (m.accept == m.reject)
    violations.push_back("accept and reject are the same state");

  if (m.delta.size() != n || m.accept >= n || m.reject >= n) return violations;

  for (StateId s = 0; s < n; ++s) {
    for (Symbol g : kAllSymbols) {
      const auto& t = m.transition(s, g);
      if (m.is_halting(s)) {
        if (t)
          violations.push_back("halting state " + m.labels[s] +
                               " has an outgoing transition on '" +
                               std::string(1, to_char(g)) + "'");
      } else if (!t) {
        violations.push_back("missing transition " + pair_name(m, s, g));
      }
      if (t && t->next >= n)
        violations.push_back("transition " + pair_name(m, s, g) +
                             " targets out-of-range state id " +
                             std::to_string(t->next));
    }
  }
  return violations;
}

}  // namespace fltm
