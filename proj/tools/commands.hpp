#pragma once

#include "script.hpp"

#include "json.hpp"

#include <cstdint>
#include <ostream>

namespace gi::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { text, json, csv };

struct Options {
  Format format = Format::text;
  std::uint64_t seed = kDefaultSeed;
  unsigned parallel = 1;
};

/// The aggregate document: {tool-version, seed, instances, verdicts, results}.
class Report {
 public:
  explicit Report(std::uint64_t seed);
  void add_instance(const ExtensionInstance& inst, const InvariantReport* A = nullptr,
                    const InvariantReport* B = nullptr);
  void add_verdict(const TheoremVerdict& v);
  void add_result(nlohmann::json r);
  const nlohmann::json& document() const { return doc_; }

 private:
  nlohmann::json doc_;
};

nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const HilbertSeries& h);
nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const Presentation& P);

std::string csv_header();
std::string csv_row(const std::string& name, const InvariantReport& r);

/// Runs one command against the session. Text (or CSV rows) goes to `out`
/// unless the format is JSON; structured output always goes to `report`.
void run_command(const CommandStmt& cmd, const Session& session, const Options& opt, Report& report,
                 std::ostream& out);

/// Runs the built-in suite.
void run_builtin_suite(const Options& opt, Report& report, std::ostream& out);

}  // namespace gi::cli
