#include "fltm/simulate.hpp"

namespace fltm {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::StepLimitExceeded: return "step-limit-exceeded";
  }
  return "?";
}

Configuration initial_configuration(const Machine& m, std::string_view input) {
  Configuration c;
  c.state = m.start;
  for (std::size_t i = 0; i < input.size(); ++i) {
    auto sym = symbol_from_char(input[i]);
    if (!sym || *sym == Symbol::Blank)
      throw Error("input contains non-binary character '" +
                  std::string(1, input[i]) + "' at position " + std::to_string(i));
    c.tape.emplace(static_cast<std::int64_t>(i), *sym);
  }
  return c;
}

static void apply_step(const Machine& m, Configuration& c) {
  if (m.is_halting(c.state))
    throw Error("step applied in halting state " + m.labels[c.state]);
  const Symbol g = c.read();
  const auto& t = m.transition(c.state, g);
  if (!t)
    throw Error("undefined transition (" + m.labels[c.state] + ", " +
                std::string(1, to_char(g)) + ")");
  if (t->write == Symbol::Blank)
    c.tape.erase(c.head);
  else
    c.tape[c.head] = t->write;
  c.head += t->move == Direction::Right ? 1 : -1;
  c.state = t->next;
  ++c.steps;
}

Configuration step(const Machine& m, const Configuration& c) {
  Configuration next = c;
  apply_step(m, next);
  return next;
}

RunOutcome run(const Machine& m, std::string_view input, std::uint64_t step_limit,
               bool want_trace) {
  if (step_limit == 0) throw Error("step_limit must be at least 1");

  Configuration c = initial_configuration(m, input);
  RunOutcome out;
  if (want_trace) {
    out.trace.emplace();
    out.trace->push_back(c);
  }
  while (!m.is_halting(c.state) && c.steps < step_limit) {
    apply_step(m, c);
    if (want_trace) out.trace->push_back(c);
  }
  out.steps = c.steps;
  if (c.state == m.accept)
    out.verdict = Verdict::Accept;
  else if (c.state == m.reject)
    out.verdict = Verdict::Reject;
  else
    out.verdict = Verdict::StepLimitExceeded;
  return out;
}

}  // namespace fltm
