#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fltm/compiler.hpp"
#include "fltm/language.hpp"

namespace fltm {

struct BenchRecord {
  std::string language;
  std::size_t n = 0;
  std::size_t word_count = 0;
  Backend backend = Backend::Dense;
  std::size_t states = 0;
  std::size_t transitions = 0;
  double compile_ms = 0.0;
  std::uint64_t total_steps = 0;  // summed over all words of length <= n+extra
  double wall_ms = 0.0;           // simulation sweep only
};

// Compiles `lang` with the given backend and simulates the full
// verification corpus (every word of length 0..n+extra), timing both
// phases. Guards propagate: the dense size guard and the enumeration
// guard both throw GuardError.
BenchRecord bench_backend(const std::string& name, const FiniteLanguage& lang,
                          Backend backend, unsigned extra = 2);

// Fixed header, fields in BenchRecord order.
std::string csv_header();
std::string csv_row(const BenchRecord& r);

std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace fltm
