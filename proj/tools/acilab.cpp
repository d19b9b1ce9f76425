#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aci/report.hpp"
#include "aci/suites.hpp"

using aci::RunConfig;

namespace {

struct Flags {
  RunConfig config;
  std::string family;
  std::vector<int> b, c;
  std::string sign = "-";
  int p = 0, q = 0, d = 0, d1 = 0, e = 2;
  bool general = false;
  std::string alpha;
  int count = -1, max_degree = -1;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--field", f.config.field, "gf:<p> or rational")->capture_default_str();
  cmd->add_option("--order", f.config.order, "monomial order (degrevlex)")->capture_default_str();
  cmd->add_option("--seed", f.config.seed, "random seed")->capture_default_str();
  cmd->add_option("--trials", f.config.trials, "generic linear forms sampled")->capture_default_str();
  cmd->add_option("--format", f.config.format, "table or json")->capture_default_str();
  cmd->add_option("--n", f.config.n, "ambient n (the ring has n + 1 variables)");
}

void add_input(CLI::App* cmd, Flags& f) {
  cmd->add_option("-f", f.config.hypersurface, "hypersurface f");
  cmd->add_option("--aci", f.config.aci, "f_0 f_1 ... f_n");
  cmd->add_option("--alpha", f.alpha, "Arnold exponent for the C2 screen, e.g. 1 or 3/4");
}

void add_family(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.family, "e1 | rkl0 | free | n1 | three-point");
  cmd->add_option("--b", f.b, "e1: b_1,..,b_n")->delimiter(',');
  cmd->add_option("--c", f.c, "e1: c_1,..,c_n")->delimiter(',');
  cmd->add_option("--sign", f.sign, "e1: + or -")->capture_default_str();
  cmd->add_option("--p", f.p, "rkl0: p");
  cmd->add_option("--q", f.q, "rkl0: q");
  cmd->add_option("--d", f.d, "rkl0, three-point: degree");
  cmd->add_option("--d1", f.d1, "n1: d_1");
  cmd->add_option("--e", f.e, "free: 2 or 3")->capture_default_str();
  cmd->add_flag("--general", f.general, "three-point: non-collinear points");
}

RunConfig finish(Flags& f) {
  RunConfig c = f.config;
  if (!f.family.empty()) {
    aci::FamilyArgs a;
    a.name = f.family;
    a.n = c.n;
    a.b = f.b;
    a.c = f.c;
    if (f.sign != "+" && f.sign != "-") throw std::invalid_argument("--sign must be + or -");
    a.plus_sign = f.sign == "+";
    a.p = f.p;
    a.q = f.q;
    a.d = f.d;
    a.d1 = f.d1;
    a.e = f.e;
    a.collinear = !f.general;
    c.family = a;
  }
  if (!f.alpha.empty()) c.alpha = f.alpha;
  if (f.count >= 0) c.count = f.count;
  if (f.max_degree >= 0) c.max_degree = f.max_degree;
  return c;
}

int run(const RunConfig& config) {
  auto outcome = aci::run_command(config);
  std::cout << aci::render(outcome, config);
  if (outcome.document.contains("error") && config.format == "json")
    std::cerr << "acilab: " << outcome.document["error"]["message"].get<std::string>() << "\n";
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acilab: Hilbert numerators, saturation and Lefschetz profiles of almost complete intersections"};
  app.require_subcommand(1);

  Flags analyze_flags, verify_flags, profile_flags;
  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  add_common(analyze, analyze_flags);
  add_input(analyze, analyze_flags);
  add_family(analyze, analyze_flags);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string suites_help = "suite:";
  for (const auto& s : aci::suite_names()) suites_help += " " + s;
  verify->add_option("suite", suite, suites_help)->required();
  add_common(verify, verify_flags);
  add_family(verify, verify_flags);
  verify->add_option("--count", verify_flags.count, "random instances");
  verify->add_option("--max-degree", verify_flags.max_degree, "degree cap of the random ACI corpus");

  auto* profile = app.add_subcommand("profile", "Lefschetz table for n = 2 input");
  add_common(profile, profile_flags);
  add_input(profile, profile_flags);
  add_family(profile, profile_flags);
  profile->add_flag("--dump", profile_flags.config.dump, "append coefficient lists for plotting");

  auto* replay = app.add_subcommand("replay", "re-run the config embedded in a JSON document");
  std::string replay_file;
  replay->add_option("file", replay_file, "JSON document, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : aci::kParseError;
  }

  try {
    if (*analyze) {
      auto c = finish(analyze_flags);
      c.command = "analyze";
      return run(c);
    }
    if (*verify) {
      auto c = finish(verify_flags);
      c.command = "verify";
      c.suite = suite;
      return run(c);
    }
    if (*profile) {
      auto c = finish(profile_flags);
      c.command = "profile";
      return run(c);
    }
    aci::Json doc;
    if (replay_file == "-") {
      doc = aci::Json::parse(std::cin);
    } else {
      std::ifstream in(replay_file);
      if (!in) throw std::invalid_argument("cannot open " + replay_file);
      doc = aci::Json::parse(in);
    }
    return run(aci::config_from_json(doc.at("config")));
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "acilab: " << e.what() << "\n";
    return aci::kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "acilab: " << e.what() << "\n";
    return aci::kParseError;
  } catch (const std::exception& e) {
    std::cerr << "acilab: internal error: " << e.what() << "\n";
    return aci::kIdentityMismatch;
  }
}
