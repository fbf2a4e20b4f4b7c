// Acceptance run: one PASS/FAIL line per criterion. Usage:
//   genref_acceptance <path to genref CLI> <golden corpus directory>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"

namespace fs = std::filesystem;

namespace {

// Sizes and thresholds. Every criterion is exact: zero failures allowed.
constexpr int kLawTrees = 500;
constexpr int kOrderTrees = 500;
constexpr int kAboveTrees = 500;
constexpr int kNameAnalysisCases = 1000;
constexpr int kExtractionAttempts = 1000;
constexpr int kMinExtractionSuccesses = 200;
constexpr int kRejectionsPerKind = 20;
constexpr int kEvaluatorSuccesses = 200;
constexpr int kRoundTripPrograms = 1000;
constexpr int kMinGoldenScenarios = 10;

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

bool report(int n, const char* title, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << detail << ")\n";
  return pass;
}

bool report(int n, const char* title, const std::vector<prop::Report>& parts, std::string extra = "",
            bool extraOk = true) {
  bool ok = extraOk;
  std::string detail;
  for (const auto& r : parts) {
    ok = ok && r.ok();
    detail += (detail.empty() ? "" : "; ") + r.summary();
  }
  if (!extra.empty()) detail += "; " + extra;
  return report(n, title, ok, detail);
}

/// Runs one golden scenario in a scratch copy of its directory. `cmd` holds
/// the arguments, one per line; expected.stdout, expected.stderr and
/// expected.exit hold the outputs; files under expected/ must match the
/// scratch directory afterwards.
bool runScenario(const fs::path& cli, const fs::path& dir, std::string& why) {
  const fs::path scratch = fs::temp_directory_path() /
                           ("genref-golden-" + std::to_string(::getpid()) + "-" + dir.parent_path().filename().string() +
                            "-" + dir.filename().string());
  fs::remove_all(scratch);
  fs::copy(dir, scratch, fs::copy_options::recursive);

  std::string command = "cd " + quote(scratch.string()) + " && " + quote(cli.string());
  std::istringstream args(readFile(dir / "cmd"));
  for (std::string a; std::getline(args, a);) {
    if (!a.empty()) command += " " + quote(a);
  }
  command += " > .stdout 2> .stderr";
  const int raw = std::system(command.c_str());
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;

  bool ok = true;
  auto fail = [&](const std::string& m) {
    if (ok) why = dir.parent_path().filename().string() + "/" + dir.filename().string() + ": " + m;
    ok = false;
  };
  const int want = std::stoi(trim(readFile(dir / "expected.exit")));
  if (code != want) fail("exit " + std::to_string(code) + ", expected " + std::to_string(want));
  if (readFile(scratch / ".stdout") != readFile(dir / "expected.stdout")) fail("stdout differs");
  if (fs::exists(dir / "expected.stderr") && readFile(scratch / ".stderr") != readFile(dir / "expected.stderr")) {
    fail("stderr differs: " + readFile(scratch / ".stderr"));
  }
  if (fs::exists(dir / "expected")) {
    for (const auto& e : fs::directory_iterator(dir / "expected")) {
      if (readFile(scratch / e.path().filename()) != readFile(e.path())) {
        fail(e.path().filename().string() + " differs after the run");
      }
    }
  }
  fs::remove_all(scratch);
  return ok;
}

bool golden(const fs::path& cli, const fs::path& root) {
  int scenarios = 0, failures = 0;
  std::string first;
  std::vector<int> perLang;
  for (const char* lang : {"joos", "minilet"}) {
    std::vector<fs::path> dirs;
    if (fs::exists(root / lang)) {
      for (const auto& e : fs::directory_iterator(root / lang)) {
        if (e.is_directory()) dirs.push_back(e.path());
      }
    }
    std::sort(dirs.begin(), dirs.end());
    perLang.push_back(static_cast<int>(dirs.size()));
    for (const auto& d : dirs) {
      ++scenarios;
      std::string why;
      if (!runScenario(cli, d, why)) {
        if (failures++ == 0) first = why;
      }
    }
  }
  const bool enough = perLang[0] >= kMinGoldenScenarios && perLang[1] >= kMinGoldenScenarios;
  std::string detail = std::to_string(perLang[0]) + " joos + " + std::to_string(perLang[1]) +
                       " minilet scenarios, " + std::to_string(failures) + " failures";
  if (!first.empty()) detail += "; first: " + first;
  return report(9, "CLI golden corpus", enough && failures == 0, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: genref_acceptance <genref CLI> <golden dir>\n";
    return 2;
  }
  bool all = true;

  all &= report(1, "combinator laws", {prop::combinatorLaws(1, kLawTrees)});
  all &= report(2, "oncetd/oncebu traversal order", {prop::traversalOrder(2, kOrderTrees)});
  all &= report(3, "aboveTP bottom-most host", {prop::aboveDeepest(3, kAboveTrees)});
  all &= report(4, "name analyses against oracle",
                {prop::joosNameAnalysis(4, kNameAnalysisCases), prop::miniletNameAnalysis(5, kNameAnalysisCases)});

  int successes = 0;
  auto extraction = prop::joosExtraction(6, kExtractionAttempts, &successes);
  all &= report(5, "JOOS extraction postconditions", {extraction},
                std::to_string(successes) + " successful extractions", successes >= kMinExtractionSuccesses);

  all &= report(6, "rejections leave input intact", {prop::joosRejections(7, kRejectionsPerKind)});
  all &= report(7, "minilet innermost host and evaluation",
                {prop::miniletNesting(), prop::miniletExtraction(8, kEvaluatorSuccesses)});
  all &= report(8, "parse/pretty round trip",
                {prop::joosRoundTrip(9, kRoundTripPrograms), prop::miniletRoundTrip(10, kRoundTripPrograms)});
  all &= golden(fs::absolute(argv[1]), fs::absolute(argv[2]));
  return all ? 0 : 1;
}
