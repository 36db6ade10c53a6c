#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dgk/dg_localize.hpp"
#include "dgk/dg_spec.hpp"

namespace dgk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input document. `where` is a JSON path such as
/// "data.differentials[0][1][0]".
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class ExitCode : int { Ok = 0, ParseError = 1, VerificationFailure = 2, Unsupported = 3 };

struct InputObject {
  RingPtr ring;  // the ring named in the document
  std::variant<FreeComplex, KoszulPtr, TrivialPtr, MultiplicativeSet> value;

  const char* kind() const;
};

/// Validates the document against the input schema and builds the object.
/// Complexes are checked for d^2 = 0. Throws InputError.
InputObject parse_input(const Json& doc);
Json read_json_file(const std::filesystem::path& path);

/// Comma-separated polynomials; the empty string is the empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& csv);
/// Variables of a monomial prime, comma-separated; "" or "0" is (0).
MonomialPrime parse_monomial_prime(const RingPtr& ring, const std::string& csv);

struct CommandOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> pool;  // csv; default: variables plus `forms` linear forms
  std::size_t forms = 0;
  std::optional<std::size_t> limit;  // default: number of variables
  std::optional<std::string> seq;    // csv
  std::vector<std::string> primes;   // csv each; default: the maximal ideal
  bool all_primes = false;

  /// Keys: seed, pool, forms, limit, seq (arrays of strings for pool and
  /// seq; an array of csv strings for primes), all_primes.
  static CommandOptions from_json(const Json& j);
};

struct CommandResult {
  Json report;
  ExitCode exit = ExitCode::Ok;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed input. Unsupported verdicts give exit 3,
/// failed property checks exit 2, bad options exit 1.
CommandResult run_command(const std::string& command, const InputObject& input, const CommandOptions& options);

struct CorpusOptions {
  std::filesystem::path directory;
  std::string filter = "*";
  bool timing = false;  // timings make the report run-dependent
};

/// Runs every *.json entry in the directory whose name matches the glob.
/// Entries are reported sorted by name. Exit 1 when the directory is missing
/// or an entry is malformed, 2 when a check fails.
CommandResult run_corpus(const CorpusOptions& options);

/// `expected` is a subset of `actual`: objects by key, arrays elementwise.
/// Returns the path of the first mismatch.
std::optional<std::string> json_subset_mismatch(const Json& expected, const Json& actual, const std::string& path = "");

/// key: value lines; nested arrays of objects one element per line.
std::string render_text(const Json& report);

Json to_json(const ExtInt& v);

}  // namespace dgk
