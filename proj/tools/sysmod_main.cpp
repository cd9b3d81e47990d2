// SPDX-License-Identifier: Apache-2.0
//
// sysmod command line: check / run / dump. Talks to the library through
// the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sysmod/sysmod.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct SessionDeleter {
  void operator()(sysmod_session* s) const { sysmod_session_free(s); }
};
using Session = std::unique_ptr<sysmod_session, SessionDeleter>;

bool readFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

std::vector<std::string> splitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int runCheck(const std::string& modelPath, bool strict) {
  std::string model;
  if (!readFile(modelPath, model)) {
    std::cerr << "error: cannot read " << modelPath << "\n";
    return kExitUsage;
  }
  Session session(sysmod_session_new(strict ? 1 : 0));
  if (sysmod_load_model(session.get(), model.c_str()) != SYSMOD_OK) {
    std::cerr << "error: " << sysmod_last_error(session.get()) << "\n";
    return kExitDiagnostics;
  }
  std::cout << sysmod_model_summary(session.get());
  std::cout << "OK\n";
  return kExitOk;
}

struct RunOutcome {
  Session session;
  sysmod_status status = SYSMOD_OK;
  int violations = 0;
};

RunOutcome loadAndRun(const std::string& modelPath, const std::string& scriptPath,
                      bool strict, int& exitCode) {
  RunOutcome outcome;
  std::string model;
  std::string script;
  if (!readFile(modelPath, model)) {
    std::cerr << "error: cannot read " << modelPath << "\n";
    exitCode = kExitUsage;
    return outcome;
  }
  if (!readFile(scriptPath, script)) {
    std::cerr << "error: cannot read " << scriptPath << "\n";
    exitCode = kExitUsage;
    return outcome;
  }
  outcome.session.reset(sysmod_session_new(strict ? 1 : 0));
  outcome.status = sysmod_load_model(outcome.session.get(), model.c_str());
  if (outcome.status != SYSMOD_OK) {
    std::cerr << "error: " << sysmod_last_error(outcome.session.get()) << "\n";
    exitCode = kExitDiagnostics;
    return outcome;
  }
  outcome.status = sysmod_run_script(outcome.session.get(), script.c_str(),
                                     &outcome.violations);
  exitCode = (outcome.status == SYSMOD_OK && outcome.violations == 0)
                 ? kExitOk
                 : kExitDiagnostics;
  return outcome;
}

int runRun(const std::string& modelPath, const std::string& scriptPath,
           bool strict, const std::string& jsonPath) {
  int exitCode = kExitUsage;
  RunOutcome outcome = loadAndRun(modelPath, scriptPath, strict, exitCode);
  if (!outcome.session) return exitCode;

  std::string transcript = sysmod_transcript(outcome.session.get());
  std::cout << transcript;
  if (outcome.status != SYSMOD_OK) {
    std::cerr << "error: " << sysmod_last_error(outcome.session.get()) << "\n";
  }

  if (!jsonPath.empty()) {
    nlohmann::json report;
    report["ok"] = outcome.status == SYSMOD_OK;
    report["violations"] = outcome.violations;
    report["transcript"] = splitLines(transcript);
    report["error"] = std::string(sysmod_last_error(outcome.session.get()));
    char* snapshot = sysmod_dump_snapshot(outcome.session.get());
    report["snapshot"] = snapshot ? std::string(snapshot) : std::string();
    sysmod_string_free(snapshot);
    std::ofstream out(jsonPath, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << jsonPath << "\n";
      return kExitUsage;
    }
    out << report.dump(2) << "\n";
  }
  return exitCode;
}

int runDump(const std::string& modelPath, const std::string& scriptPath,
            bool strict) {
  int exitCode = kExitUsage;
  RunOutcome outcome = loadAndRun(modelPath, scriptPath, strict, exitCode);
  if (!outcome.session) return exitCode;
  if (outcome.status != SYSMOD_OK) {
    std::cerr << "error: " << sysmod_last_error(outcome.session.get()) << "\n";
    return kExitDiagnostics;
  }
  char* snapshot = sysmod_dump_snapshot(outcome.session.get());
  if (!snapshot) {
    std::cerr << "error: " << sysmod_last_error(outcome.session.get()) << "\n";
    return kExitDiagnostics;
  }
  std::cout << snapshot;
  sysmod_string_free(snapshot);
  return exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sysmod: structural system model interpreter"};
  app.require_subcommand(1);

  bool strict = false;
  app.add_flag("--strict-inheritance", strict,
               "reject attribute redeclaration in subclasses");

  std::string modelPath;
  std::string scriptPath;
  std::string jsonPath;
  long seed = 0;

  CLI::App* check = app.add_subcommand("check", "parse and declare a model");
  check->add_option("model", modelPath, "model file")->required();

  CLI::App* run = app.add_subcommand("run", "run a script against a model");
  run->add_option("model", modelPath, "model file")->required();
  run->add_option("script", scriptPath, "script file")->required();
  run->add_option("--json", jsonPath, "write a JSON report to this file");
  run->add_option("--seed", seed,
                  "seed for randomized self-test commands (reserved; current "
                  "scripts define none)");

  CLI::App* dump = app.add_subcommand("dump", "run a script and print the snapshot");
  dump->add_option("model", modelPath, "model file")->required();
  dump->add_option("script", scriptPath, "script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) return runCheck(modelPath, strict);
  if (run->parsed()) return runRun(modelPath, scriptPath, strict, jsonPath);
  return runDump(modelPath, scriptPath, strict);
}
