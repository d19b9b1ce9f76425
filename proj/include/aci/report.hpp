#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aci/families.hpp"
#include "aci/suites.hpp"

namespace aci {

using Json = nlohmann::ordered_json;

/// Everything a run depends on. Serialized into every document so the run can
/// be replayed.
struct RunConfig {
  std::string command = "analyze";  // analyze | verify | profile
  std::string field = "gf:65521";
  std::string order = "degrevlex";
  std::uint64_t seed = 0;
  int trials = 5;
  std::string format = "table";
  /// Ambient n; the ring has n + 1 variables. 0 means "from the input".
  int n = 0;
  std::optional<std::string> hypersurface;
  std::vector<std::string> aci;
  std::optional<FamilyArgs> family;
  std::optional<std::string> alpha;
  std::optional<std::string> suite;
  std::optional<int> count;
  std::optional<int> max_degree;
  bool dump = false;
};

Json to_json(const RunConfig& c);
/// Throws std::invalid_argument on a malformed config.
RunConfig config_from_json(const Json& j);

Json to_json(const FamilyArgs& f);
Json to_json(const IntPoly& p);
Json to_json(const LefschetzProfile& p);
Json to_json(const InvariantReport& r);
Json to_json(const Prediction& p);
Json to_json(const SuiteResult& s);

/// Integer when the denominator is 1, "p/q" otherwise.
Json rational_json(const mpq_class& q);

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kHypothesisFailure = 2,
  kIdentityMismatch = 3,
};

struct CommandOutcome {
  Json document;
  std::string table;
  int exit_code = kOk;
};

/// Runs analyze, verify or profile. Parse errors, hypothesis failures and
/// identity mismatches become exit codes with an "error" entry in the
/// document; other invalid input throws std::invalid_argument.
CommandOutcome run_command(const RunConfig& config);

/// The output text for the configured format, newline-terminated.
std::string render(const CommandOutcome& outcome, const RunConfig& config);

}  // namespace aci
