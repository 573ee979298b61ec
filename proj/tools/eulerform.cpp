// eulerform: run session scripts and randomized verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerform/errors.hpp"
#include "eulerform/poly_parse.hpp"
#include "eulerform/session.hpp"

using namespace eulerform;

namespace {

int env_bound() {
  if (const char* s = std::getenv("EULERFORM_BOUND")) {
    try {
      return std::max(0, std::stoi(s));
    } catch (const std::exception&) {
      return 0;
    }
  }
  return 0;
}

int run_file(const std::string& path, const std::string& format, int bound, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "eulerform: cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  SessionScript script;
  try {
    script = parse_session(buf.str());
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 1;
  }
  ExecConfig config{format, seed, bound};
  auto records = execute(script, config);
  if (format == "json")
    std::cout << records_json(records).dump(2) << "\n";
  else
    std::cout << render_table(records);
  return exit_code(records);
}

int run_verify(const VerifyOptions& o, const std::string& format) {
  VerifySummary s;
  try {
    s = verify_suite(o);
  } catch (const AlgebraError& e) {
    std::cerr << "eulerform: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    std::cout << to_json(s).dump(2) << "\n";
  } else {
    std::cout << "suite      " << s.suite << "\n"
              << "seed       " << s.seed << "\n"
              << "attempted  " << s.attempted << "\n"
              << "in-regime  " << s.in_regime << "\n"
              << "passed     " << s.passed << "\n"
              << "failed     " << s.failed << "\n";
    if (s.branches.size() > 1)
      for (const auto& [b, c] : s.branches)
        std::cout << "branch " << b << "   " << c.second << "/" << c.first << " passed\n";
    for (const auto& w : s.witnesses)
      std::cout << "witness    " << w.name << ": xi_1 = " << w.get("xi_1") << (w.passed ? "" : "  FAILED") << "\n";
    for (const auto& c : s.counterexamples) std::cout << "\ncounterexample:\n" << c.script;
    std::cout << (s.ok() ? "OK" : "NOT OK") << "\n";
  }
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eulerform: partial Euler characteristics and Euler forms over graded rings"};
  app.require_subcommand(1);

  std::string file, format = "table";
  int bound = env_bound();
  std::uint64_t seed = 7;
  auto* run = app.add_subcommand("run", "execute a session script");
  run->add_option("file", file, "session file")->required();
  run->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  run->add_option("--bound", bound, "truncation bound over quotient rings")->check(CLI::NonNegativeNumber);
  run->add_option("--seed", seed, "root seed for verify statements");

  VerifyOptions vo;
  vo.bound = bound;
  std::string vformat = "table";
  auto* ver = app.add_subcommand("verify", "run a randomized verification suite");
  ver->add_option("--suite", vo.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--trials", vo.trials, "in-regime instances to reach")->check(CLI::PositiveNumber);
  ver->add_option("--seed", vo.seed, "root seed");
  ver->add_option("--vars", vo.vars, "number of variables")->check(CLI::Range(1, 8));
  ver->add_option("--maxdeg", vo.maxdeg, "largest generator degree")->check(CLI::Range(1, 12));
  ver->add_option("--bound", vo.bound, "truncation bound over quotient rings")->check(CLI::NonNegativeNumber);
  ver->add_option("--format", vformat, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (run->parsed()) return run_file(file, format, bound, seed);
  return run_verify(vo, vformat);
}
