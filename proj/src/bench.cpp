#include "fltm/bench.hpp"

#include <chrono>
#include <cstdio>

#include "fltm/simulate.hpp"
#include "fltm/verifier.hpp"

namespace fltm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

BenchRecord bench_backend(const std::string& name, const FiniteLanguage& lang,
                          Backend backend, unsigned extra) {
  if (lang.max_len + extra > 22)
    throw GuardError("bench enumeration refused for \"" + name +
                     "\": n+extra=" + std::to_string(lang.max_len + extra) +
                     " exceeds the guard of 22");
  BenchRecord r;
  r.language = name;
  r.n = lang.max_len;
  r.word_count = lang.size();
  r.backend = backend;

  const auto t0 = Clock::now();
  const Machine m = compile(lang, CompileOptions{.backend = backend});
  const auto t1 = Clock::now();
  r.compile_ms = elapsed_ms(t0, t1);
  r.states = m.state_count();
  r.transitions = m.transition_count();

  const std::uint64_t limit = lang.max_len + extra + 2;
  const auto t2 = Clock::now();
  for_each_word(lang.max_len + extra, [&](std::string_view w) {
    r.total_steps += run(m, w, limit).steps;
    return true;
  });
  r.wall_ms = elapsed_ms(t2, Clock::now());
  return r;
}

std::string csv_header() {
  return "language,n,words,backend,states,transitions,compile_ms,total_steps,wall_ms";
}

std::string csv_row(const BenchRecord& r) {
  std::string row;
  row += r.language;
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.word_count);
  row += ',';
  row += to_string(r.backend);
  row += ',' + std::to_string(r.states);
  row += ',' + std::to_string(r.transitions);
  row += ',' + format_ms(r.compile_ms);
  row += ',' + std::to_string(r.total_steps);
  row += ',' + format_ms(r.wall_ms);
  return row;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out = csv_header() + "\n";
  for (const auto& r : records) out += csv_row(r) + "\n";
  return out;
}

}  // namespace fltm
