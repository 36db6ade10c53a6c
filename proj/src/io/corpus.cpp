#include <fnmatch.h>

#include <algorithm>
#include <chrono>

#include "dgk/io.hpp"

namespace dgk {

std::optional<std::string> json_subset_mismatch(const Json& expected, const Json& actual, const std::string& path) {
  if (expected.is_object()) {
    if (!actual.is_object()) return path.empty() ? "(root)" : path;
    for (const auto& [key, v] : expected.items()) {
      const std::string sub = path.empty() ? key : path + "." + key;
      auto it = actual.find(key);
      if (it == actual.end()) return sub;
      if (auto m = json_subset_mismatch(v, *it, sub)) return m;
    }
    return std::nullopt;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) return path;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (auto m = json_subset_mismatch(expected[i], actual[i], path + "[" + std::to_string(i) + "]")) return m;
    return std::nullopt;
  }
  if (expected != actual) return path;
  return std::nullopt;
}

namespace {

struct EntryOutcome {
  std::string name;
  std::string provenance;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool malformed = false;
  double ms = 0;
};

// Name of the entry, falling back to the file stem for malformed files.
std::string entry_name(const Json& entry, const std::filesystem::path& file) {
  if (entry.is_object() && entry.contains("name") && entry["name"].is_string()) return entry["name"].get<std::string>();
  return file.stem().string();
}

EntryOutcome run_entry(const Json& entry, const std::string& name) {
  EntryOutcome out;
  out.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    if (!entry.is_object() || !entry.contains("name")) throw InputError("name", "missing");
    out.provenance = entry.value("provenance", "");
    if (out.provenance != "paper-example" && out.provenance != "derived-fixture")
      throw InputError("provenance", "expected paper-example or derived-fixture");
    InputObject input = parse_input(entry.at("input"));
    const Json& checks = entry.at("checks");
    if (!checks.is_array() || checks.empty()) throw InputError("checks", "expected a nonempty array");
    for (std::size_t k = 0; k < checks.size(); ++k) {
      const Json& c = checks[k];
      const std::string command = c.at("command").get<std::string>();
      CommandOptions opts = CommandOptions::from_json(c.value("options", Json::object()));
      CommandResult r = run_command(command, input, opts);
      ++out.checks;
      const int want = c.value("exit_code", 0);
      const std::string label = command + " #" + std::to_string(k + 1);
      if (static_cast<int>(r.exit) != want) {
        std::string msg = label + ": exit " + std::to_string(static_cast<int>(r.exit)) + ", expected " +
                          std::to_string(want);
        if (r.report.contains("message")) msg += " (" + r.report["message"].get<std::string>() + ")";
        out.failures.push_back(msg);
        continue;
      }
      if (auto m = json_subset_mismatch(c.value("expected", Json::object()), r.report))
        out.failures.push_back(label + ": mismatch at " + *m);
    }
  } catch (const std::exception& e) {
    out.malformed = true;
    out.failures.push_back(std::string("malformed entry: ") + e.what());
  }
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

CommandResult run_corpus(const CorpusOptions& options) {
  CommandResult r;
  r.report = {{"command", "corpus"}};
  std::error_code ec;
  if (!std::filesystem::is_directory(options.directory, ec)) {
    r.report["error"] = "invalid-input";
    r.report["message"] = "corpus directory not found: " + options.directory.string();
    r.exit = ExitCode::ParseError;
    return r;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(options.directory))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<EntryOutcome> outcomes;
  for (const auto& f : files) {
    Json entry;
    try {
      entry = read_json_file(f);
    } catch (const InputError&) {
      entry = nullptr;
    }
    std::string name = entry_name(entry, f);
    if (fnmatch(options.filter.c_str(), name.c_str(), 0) != 0) continue;
    outcomes.push_back(run_entry(entry, name));
  }
  std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.name < b.name; });

  Json entries = Json::array();
  std::size_t passed = 0;
  bool malformed = false;
  for (const auto& o : outcomes) {
    Json j = {{"name", o.name},
              {"provenance", o.provenance},
              {"checks", o.checks},
              {"status", o.failures.empty() ? "pass" : "fail"}};
    if (!o.failures.empty()) j["failures"] = o.failures;
    if (options.timing) j["ms"] = static_cast<long long>(o.ms + 0.5);
    entries.push_back(j);
    if (o.failures.empty()) ++passed;
    malformed = malformed || o.malformed;
  }
  r.report["filter"] = options.filter;
  r.report["count"] = outcomes.size();
  r.report["passed"] = passed;
  r.report["entries"] = entries;
  if (malformed)
    r.exit = ExitCode::ParseError;
  else if (passed != outcomes.size())
    r.exit = ExitCode::VerificationFailure;
  return r;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_object()) return std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
  if (v.is_array()) return std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); });
  return true;
}

std::string inline_text(const Json& v) {
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      s += (first ? "" : "  ") + k + "=" + (x.is_structured() ? x.dump() : scalar_text(x));
      first = false;
    }
    return s;
  }
  return scalar_text(v);
}

void render(const Json& obj, const std::string& indent, std::string& out) {
  for (const auto& [key, v] : obj.items()) {
    if (v.is_array() && !is_flat(v) && !v.empty()) {
      out += indent + key + ":\n";
      for (const auto& x : v) {
        if (x.is_object() && !is_flat(x)) {
          out += indent + "  -\n";
          render(x, indent + "    ", out);
        } else {
          out += indent + "  - " + inline_text(x) + "\n";
        }
      }
    } else if (v.is_object() && !is_flat(v)) {
      out += indent + key + ":\n";
      render(v, indent + "  ", out);
    } else {
      out += indent + key + ": " + inline_text(v) + "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  if (report.is_object())
    render(report, "", out);
  else
    out = report.dump() + "\n";
  return out;
}

}  // namespace dgk
