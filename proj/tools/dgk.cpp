#include <iostream>

#include <CLI11.hpp>

#include "dgk/io.hpp"

namespace {

int emit(const dgk::CommandResult& r, const std::string& format) {
  if (format == "json")
    std::cout << r.report.dump(2) << "\n";
  else
    std::cout << dgk::render_text(r.report);
  return static_cast<int>(r.exit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension invariants of complexes and DG algebras over polynomial rings"};
  std::string command, input, format = "text", filter = "*", corpus = DGK_CORPUS_DIR;
  std::optional<std::string> pool, seq;
  dgk::CommandOptions opts;
  std::size_t limit = 0;
  bool timing = false;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(dgk::command_names()));
  app.add_option("input", input, "Input JSON document (all commands but corpus)");
  app.add_option("--seed", opts.seed, "Seed for random pools and property trials");
  app.add_option("--pool", pool, "Candidate elements for length sequences, comma-separated");
  app.add_option("--forms", opts.forms, "Seeded random linear forms added to the default pool");
  auto* limit_opt = app.add_option("--limit", limit, "Longest candidate subsequence (default: number of variables)");
  app.add_option("--seq", seq, "Sequence x for sop and verify-theorem, comma-separated");
  app.add_option("--prime", opts.primes, "Monomial prime as comma-separated variables (repeatable)");
  app.add_flag("--all-primes", opts.all_primes, "anchor: every monomial prime");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--filter", filter, "corpus: glob on entry names");
  app.add_option("--corpus", corpus, "corpus: directory of entries");
  app.add_flag("--timing", timing, "corpus: report per-entry timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(dgk::ExitCode::ParseError);
  }
  opts.pool = pool;
  opts.seq = seq;
  if (*limit_opt) opts.limit = limit;

  if (command == "corpus") return emit(dgk::run_corpus({corpus, filter, timing}), format);
  if (input.empty()) {
    std::cerr << "error: " << command << " needs an input document\n";
    return static_cast<int>(dgk::ExitCode::ParseError);
  }
  try {
    dgk::InputObject obj = dgk::parse_input(dgk::read_json_file(input));
    return emit(dgk::run_command(command, obj, opts), format);
  } catch (const dgk::InputError& e) {
    std::cerr << "error: " << input << ": " << e.what() << "\n";
    return static_cast<int>(dgk::ExitCode::ParseError);
  }
}
