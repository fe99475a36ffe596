#include "fltm/machine_io.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace fltm {

namespace {

const char* to_string(Direction d) { return d == Direction::Right ? "R" : "L"; }

struct TransitionLine {
  std::size_t line_no;
  std::string src;
  Symbol read;
  Symbol write;
  Direction move;
  std::string dst;
};

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
  throw ParseError("line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

// Yields (line number, stripped content) for every line that is neither
// blank nor a comment.
class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : text_(text) {}

  std::optional<std::pair<std::size_t, std::string_view>> next() {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) return std::nullopt;
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string_view::npos) eol = text_.size();
      ++line_no_;
      std::string_view line = text_.substr(pos_, eol - pos_);
      pos_ = eol + 1;
      while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                               line.back() == '\r'))
        line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      return std::pair{line_no_, line};
    }
    return std::nullopt;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::string read_header_label(LineScanner& scanner, const char* keyword) {
  auto line = scanner.next();
  if (!line) throw ParseError(std::string("unexpected end of file, expected \"") +
                              keyword + " <label>\"");
  auto tokens = split_tokens(line->second);
  if (tokens.size() != 2 || tokens[0] != keyword)
    fail(line->first, std::string("expected \"") + keyword + " <label>\", got \"" +
                          std::string(line->second) + "\"");
  if (!valid_label(tokens[1]))
    fail(line->first, "invalid state label \"" + tokens[1] + "\"");
  return tokens[1];
}

}  // namespace

std::string serialize_machine(const Machine& m) {
  std::string out;
  out += "tm v1\n";
  out += "start " + m.labels[m.start] + "\n";
  out += "accept " + m.labels[m.accept] + "\n";
  out += "reject " + m.labels[m.reject] + "\n";
  for (StateId s = 0; s < m.state_count(); ++s)
    for (Symbol g : kAllSymbols)
      if (const auto& t = m.transition(s, g)) {
        out += m.labels[s];
        out += ' ';
        out += to_char(g);
        out += " -> ";
        out += to_char(t->write);
        out += ' ';
        out += to_string(t->move);
        out += ' ';
        out += m.labels[t->next];
        out += '\n';
      }
  return out;
}

Machine parse_machine(std::string_view text) {
  LineScanner scanner(text);

  auto header = scanner.next();
  if (!header) throw ParseError("empty machine file, expected \"tm v1\"");
  if (header->second != "tm v1")
    fail(header->first, "expected \"tm v1\", got \"" + std::string(header->second) + "\"");

  const std::string start_label = read_header_label(scanner, "start");
  const std::string accept_label = read_header_label(scanner, "accept");
  const std::string reject_label = read_header_label(scanner, "reject");
  if (start_label == accept_label || start_label == reject_label ||
      accept_label == reject_label)
    throw ParseError("start, accept and reject labels must be pairwise distinct");

  std::vector<TransitionLine> lines;
  while (auto line = scanner.next()) {
    auto tokens = split_tokens(line->second);
    if (tokens.size() != 6 || tokens[2] != "->")
      fail(line->first,
           "expected \"<label> <sym> -> <sym'> <move> <label'>\", got \"" +
               std::string(line->second) + "\"");
    TransitionLine t;
    t.line_no = line->first;
    t.src = tokens[0];
    t.dst = tokens[5];
    if (!valid_label(t.src)) fail(line->first, "invalid state label \"" + t.src + "\"");
    if (!valid_label(t.dst)) fail(line->first, "invalid state label \"" + t.dst + "\"");
    auto parse_symbol = [&](const std::string& tok) {
      auto sym = tok.size() == 1 ? symbol_from_char(tok[0]) : std::nullopt;
      if (!sym) fail(line->first, "invalid symbol \"" + tok + "\", expected 0, 1 or _");
      return *sym;
    };
    t.read = parse_symbol(tokens[1]);
    t.write = parse_symbol(tokens[3]);
    if (tokens[4] == "L")
      t.move = Direction::Left;
    else if (tokens[4] == "R")
      t.move = Direction::Right;
    else
      fail(line->first, "invalid move \"" + tokens[4] + "\", expected L or R");
    lines.push_back(std::move(t));
  }

  Machine m;
  m.labels = {start_label, accept_label, reject_label};
  m.start = 0;
  m.accept = 1;
  m.reject = 2;
  std::unordered_map<std::string, StateId> id_of = {
      {start_label, 0}, {accept_label, 1}, {reject_label, 2}};
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = id_of.emplace(label, static_cast<StateId>(m.labels.size()));
    if (inserted) m.labels.push_back(label);
    return it->second;
  };
  for (const auto& t : lines) intern(t.src);
  for (const auto& t : lines) intern(t.dst);

  m.delta.assign(m.labels.size(), {});
  for (const auto& t : lines) {
    const StateId s = id_of.at(t.src);
    if (m.transition(s, t.read))
      fail(t.line_no, "duplicate transition (" + t.src + ", " +
                          std::string(1, to_char(t.read)) + ")");
    m.set_transition(s, t.read, {id_of.at(t.dst), t.write, t.move});
  }
  return m;
}

std::string to_dot(const Machine& m) {
  std::string out;
  out += "digraph machine {\n";
  out += "  rankdir=LR;\n";
  for (StateId s = 0; s < m.state_count(); ++s) {
    out += "  \"" + m.labels[s] + "\" [shape=";
    if (s == m.accept)
      out += "doublecircle";
    else if (s == m.reject)
      out += "box";
    else
      out += "circle";
    if (s == m.start) out += " style=bold";
    out += "];\n";
  }
  for (StateId s = 0; s < m.state_count(); ++s)
    for (Symbol g : kAllSymbols)
      if (const auto& t = m.transition(s, g)) {
        out += "  \"" + m.labels[s] + "\" -> \"" + m.labels[t->next] + "\" [label=\"";
        out += to_char(g);
        out += '/';
        out += to_char(t->write);
        out += ',';
        out += to_string(t->move);
        out += "\"];\n";
      }
  out += "}\n";
  return out;
}

}  // namespace fltm
