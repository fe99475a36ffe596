#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fltm/bench.hpp"
#include "fltm/compiler.hpp"
#include "fltm/language.hpp"
#include "fltm/machine.hpp"
#include "fltm/machine_io.hpp"
#include "fltm/simulate.hpp"
#include "fltm/verifier.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fltm::Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fltm::Error("cannot write " + path.string());
  out << content;
  if (!out) throw fltm::Error("failed writing " + path.string());
}

fltm::FiniteLanguage load_language(const fs::path& path) {
  std::vector<std::string> warnings;
  auto lang = fltm::parse_language(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << path.string() << ": warning: " << w << "\n";
  return lang;
}

fltm::Machine load_machine(const fs::path& path) {
  fltm::Machine m = fltm::parse_machine(read_file(path));
  const auto violations = fltm::validate(m);
  if (!violations.empty()) {
    for (const auto& v : violations)
      std::cerr << path.string() << ": " << v << "\n";
    throw fltm::Error("machine file " + path.string() + " is not a valid machine");
  }
  return m;
}

fltm::Backend backend_from(const std::string& name) {
  return name == "dense" ? fltm::Backend::Dense : fltm::Backend::Trie;
}

std::string render_tape(const fltm::Configuration& c) {
  std::int64_t lo = c.head, hi = c.head;
  if (!c.tape.empty()) {
    lo = std::min(lo, c.tape.begin()->first);
    hi = std::max(hi, c.tape.rbegin()->first);
  }
  std::string out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    auto it = c.tape.find(i);
    const char ch = fltm::to_char(it == c.tape.end() ? fltm::Symbol::Blank : it->second);
    if (i == c.head) {
      out += '[';
      out += ch;
      out += ']';
    } else {
      out += ch;
    }
  }
  return out;
}

int cmd_compile(const fs::path& lang_path, const std::string& backend,
                const fs::path& out_path, bool force) {
  const auto lang = load_language(lang_path);
  fltm::CompileOptions opts{.backend = backend_from(backend), .force = force};
  const fltm::Machine m = fltm::compile(lang, opts);
  write_file(out_path, fltm::serialize_machine(m));
  std::cout << "states=" << m.state_count() << " transitions=" << m.transition_count()
            << "\n";
  return 0;
}

int cmd_run(const fs::path& machine_path, std::string input, bool trace,
            std::uint64_t max_steps) {
  const fltm::Machine m = load_machine(machine_path);
  if (input == "eps") input.clear();

  const fltm::RunOutcome out = fltm::run(m, input, max_steps, trace);
  if (trace)
    for (const auto& c : *out.trace)
      std::cout << "step " << c.steps << " state " << m.labels[c.state] << " head "
                << c.head << " tape " << render_tape(c) << "\n";
  if (out.verdict == fltm::Verdict::StepLimitExceeded) {
    std::cerr << "error: no halt within " << max_steps << " steps\n";
    return 2;
  }
  std::cout << to_string(out.verdict) << " " << out.steps << "\n";
  return out.verdict == fltm::Verdict::Accept ? 0 : 1;
}

void print_report(const std::string& label, const fltm::VerificationReport& report) {
  if (report.pass) {
    std::cout << label << ": pass (" << report.words_tested << " words)\n";
  } else {
    const auto& ce = *report.counterexample;
    std::cout << label << ": FAIL (word=" << (ce.word.empty() ? "eps" : ce.word)
              << " expected=" << ce.expected << " observed=" << ce.observed << ")\n";
  }
}

int cmd_verify(const fs::path& lang_path, const std::string& backend, unsigned extra,
               bool force, const fs::path& machine_override,
               bool backend_explicit) {
  const auto lang = load_language(lang_path);
  std::vector<fltm::VerificationReport> reports;

  if (!machine_override.empty()) {
    const fltm::Machine m = load_machine(machine_override);
    reports.push_back(fltm::verify_equivalence(m, lang, extra, force));
    print_report("equivalence[override]", reports.back());
    // Exact dense step counts are only claimed when the caller says the
    // file is a dense machine; otherwise check the bound alone.
    const bool dense_exact = backend_explicit && backend == "dense";
    reports.push_back(fltm::verify_step_bound(
        m, lang, extra, dense_exact ? fltm::Backend::Dense : fltm::Backend::Trie,
        force));
    print_report("step-bound[override]", reports.back());
  } else {
    const bool want_dense = backend == "dense" || backend == "both";
    const bool want_trie = backend == "trie" || backend == "both";
    fltm::CompileOptions dense_opts{.backend = fltm::Backend::Dense, .force = force};
    fltm::CompileOptions trie_opts{.backend = fltm::Backend::Trie, .force = force};

    std::optional<fltm::Machine> dense, trie;
    if (want_dense) dense = fltm::compile_dense(lang, dense_opts);
    if (want_trie) trie = fltm::compile_trie(lang, trie_opts);

    if (dense) {
      reports.push_back(fltm::verify_equivalence(*dense, lang, extra, force));
      print_report("equivalence[dense]", reports.back());
      reports.push_back(
          fltm::verify_step_bound(*dense, lang, extra, fltm::Backend::Dense, force));
      print_report("step-bound[dense]", reports.back());
    }
    if (trie) {
      reports.push_back(fltm::verify_equivalence(*trie, lang, extra, force));
      print_report("equivalence[trie]", reports.back());
      reports.push_back(
          fltm::verify_step_bound(*trie, lang, extra, fltm::Backend::Trie, force));
      print_report("step-bound[trie]", reports.back());
    }
    if (dense && trie) {
      reports.push_back(fltm::cross_check(*dense, *trie, lang.max_len, extra, force));
      print_report("cross-check", reports.back());
    }
  }

  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.pass; });
  return all_pass ? 0 : 1;
}

int cmd_bench(const fs::path& lang_dir, const fs::path& csv_path, unsigned extra) {
  std::vector<fs::path> files;
  if (fs::is_directory(lang_dir))
    for (const auto& entry : fs::directory_iterator(lang_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".lang")
        files.push_back(entry.path());
  if (files.empty())
    throw fltm::Error("no .lang files in " + lang_dir.string());
  std::sort(files.begin(), files.end());

  std::vector<fltm::BenchRecord> records;
  for (const auto& file : files) {
    const auto lang = load_language(file);
    const std::string name = file.stem().string();
    for (fltm::Backend b : {fltm::Backend::Dense, fltm::Backend::Trie})
      records.push_back(fltm::bench_backend(name, lang, b, extra));
  }
  write_file(csv_path, fltm::to_csv(records));
  std::cout << "wrote " << records.size() << " records to " << csv_path.string()
            << "\n";
  return 0;
}

int cmd_graph(const fs::path& machine_path, const fs::path& out_path) {
  const fltm::Machine m = load_machine(machine_path);
  write_file(out_path, fltm::to_dot(m));
  return 0;
}

int cmd_gen(unsigned n, std::uint64_t count, std::uint64_t seed,
            const fs::path& out_path) {
  const auto lang = fltm::random_language(n, count, seed);
  write_file(out_path, fltm::serialize_language(lang));
  std::cout << "wrote " << lang.size() << " words to " << out_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compile finite binary languages into Turing machines that halt in "
               "at most |input|+1 steps"};
  app.require_subcommand(1);
  int rc = 0;

  // compile
  std::string c_lang, c_backend, c_out;
  bool c_force = false;
  auto* compile_cmd =
      app.add_subcommand("compile", "compile a .lang file into a .tm machine file");
  compile_cmd->add_option("--lang", c_lang, "language file")->required();
  compile_cmd->add_option("--backend", c_backend, "dense or trie")
      ->required()
      ->check(CLI::IsMember({"dense", "trie"}));
  compile_cmd->add_option("-o,--output", c_out, "output machine file")->required();
  compile_cmd->add_flag("--force", c_force, "override the dense size guard");
  compile_cmd->callback([&] { rc = cmd_compile(c_lang, c_backend, c_out, c_force); });

  // run
  std::string r_machine, r_input;
  bool r_trace = false;
  std::uint64_t r_max_steps = 1'000'000;
  auto* run_cmd = app.add_subcommand("run", "run a machine on one input word");
  run_cmd->add_option("--machine", r_machine, "machine file")->required();
  run_cmd->add_option("--input", r_input, "bitstring, or eps for the empty word")
      ->required();
  run_cmd->add_flag("--trace", r_trace, "print every configuration");
  run_cmd->add_option("--max-steps", r_max_steps, "step limit (default 1000000)");
  run_cmd->callback([&] { rc = cmd_run(r_machine, r_input, r_trace, r_max_steps); });

  // verify
  std::string v_lang, v_backend = "both", v_override;
  unsigned v_extra = 2;
  bool v_force = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check a compiled machine against its language exhaustively");
  verify_cmd->add_option("--lang", v_lang, "language file")->required();
  auto* v_backend_opt =
      verify_cmd->add_option("--backend", v_backend, "dense, trie or both (default)")
          ->check(CLI::IsMember({"dense", "trie", "both"}));
  verify_cmd->add_option("--extra", v_extra,
                         "extra word length beyond n to enumerate (default 2)");
  verify_cmd->add_flag("--force", v_force, "override the enumeration guard");
  verify_cmd->add_option("--machine-override", v_override,
                         "verify this machine file instead of compiling")
      ->group("");
  verify_cmd->callback([&] {
    rc = cmd_verify(v_lang, v_backend, v_extra, v_force, v_override,
                    v_backend_opt->count() > 0);
  });

  // bench
  std::string b_dir, b_csv;
  unsigned b_extra = 2;
  auto* bench_cmd = app.add_subcommand(
      "bench", "compile and simulate every .lang file in a directory, write CSV");
  bench_cmd->add_option("--lang-dir", b_dir, "directory with .lang files")->required();
  bench_cmd->add_option("--csv", b_csv, "output CSV file")->required();
  bench_cmd->add_option("--extra", b_extra,
                        "extra word length beyond n to simulate (default 2)");
  bench_cmd->callback([&] { rc = cmd_bench(b_dir, b_csv, b_extra); });

  // graph
  std::string g_machine, g_out;
  auto* graph_cmd = app.add_subcommand("graph", "export a machine as Graphviz DOT");
  graph_cmd->add_option("--machine", g_machine, "machine file")->required();
  graph_cmd->add_option("-o,--output", g_out, "output DOT file")->required();
  graph_cmd->callback([&] { rc = cmd_graph(g_machine, g_out); });

  // gen
  unsigned gen_n = 0;
  std::uint64_t gen_count = 0, gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd =
      app.add_subcommand("gen", "generate a random language file, deterministic in "
                                "(n, count, seed)");
  gen_cmd->add_option("--n", gen_n, "maximum word length")->required();
  gen_cmd->add_option("--count", gen_count, "number of words")->required();
  gen_cmd->add_option("--seed", gen_seed, "RNG seed")->required();
  gen_cmd->add_option("-o,--output", gen_out, "output language file")->required();
  gen_cmd->callback([&] { rc = cmd_gen(gen_n, gen_count, gen_seed, gen_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fltm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
