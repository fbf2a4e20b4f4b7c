// genref command-line driver. Links only the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <system_error>

#include "genref/genref.h"

namespace {

constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProgramDeleter {
  void operator()(genref_program* p) const { genref_program_free(p); }
};
using ProgramHandle = std::unique_ptr<genref_program, ProgramDeleter>;

struct StringDeleter {
  void operator()(char* s) const { genref_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string lang;
  std::string file;
  std::string focus;
  std::string name;
  std::string declFile;
  std::string className;
  std::string output;
  bool inPlace = false;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes through a sibling temporary so readers never see a partial file.
void writeAtomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".genref-tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw UsageError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("cannot replace " + path);
  }
}

genref_span parseSpan(const std::string& text) {
  static const std::regex re(R"((\d+):(\d+)-(\d+):(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("--focus must look like L:C-L:C");
  genref_span s{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])};
  if (s.begin_line < 1 || s.begin_column < 1 || s.end_line < 1 || s.end_column < 1) {
    throw UsageError("--focus lines and columns are 1-based");
  }
  if (std::pair(s.end_line, s.end_column) < std::pair(s.begin_line, s.begin_column)) {
    throw UsageError("--focus end precedes its start");
  }
  return s;
}

genref_lang language(const std::string& lang) {
  return lang == "joos" ? GENREF_LANG_JOOS : GENREF_LANG_MINILET;
}

int reportFailure(genref_status status, const std::string& file = "") {
  std::cerr << "genref: " << (file.empty() ? "" : file + ":") << genref_last_error() << '\n';
  return static_cast<int>(status);
}

std::optional<ProgramHandle> load(const Options& o, int& exitCode) {
  const std::string source = readFile(o.file);
  genref_program* p = nullptr;
  if (auto s = genref_parse(language(o.lang), source.data(), source.size(), &p); s != GENREF_OK) {
    exitCode = reportFailure(s, o.file);
    return std::nullopt;
  }
  return ProgramHandle(p);
}

int emit(const Options& o, const genref_program* result) {
  char* text = nullptr;
  if (auto s = genref_print(result, &text); s != GENREF_OK) return reportFailure(s);
  StringHandle owned(text);
  if (o.inPlace) {
    writeAtomically(o.file, text);
  } else if (!o.output.empty()) {
    writeAtomically(o.output, text);
  } else {
    std::cout << text;
  }
  return 0;
}

int runExtract(const Options& o) {
  if (o.focus.empty()) throw UsageError("extract requires --focus");
  if (o.name.empty()) throw UsageError("extract requires --name");
  const auto span = parseSpan(o.focus);
  int code = 0;
  auto prog = load(o, code);
  if (!prog) return code;
  genref_program* out = nullptr;
  if (auto s = genref_extract(prog->get(), span, o.name.c_str(), &out); s != GENREF_OK) {
    return reportFailure(s);
  }
  return emit(o, ProgramHandle(out).get());
}

int runIntroduce(const Options& o) {
  if (o.declFile.empty()) throw UsageError("introduce requires --decl-file");
  std::optional<genref_span> host;
  if (o.lang == "joos") {
    if (o.className.empty()) throw UsageError("introduce --lang joos requires --class");
  } else {
    if (o.focus.empty()) throw UsageError("introduce --lang minilet requires --focus");
    host = parseSpan(o.focus);
  }
  const std::string decl = readFile(o.declFile);
  int code = 0;
  auto prog = load(o, code);
  if (!prog) return code;
  genref_program* out = nullptr;
  const auto s = host ? genref_introduce_minilet(prog->get(), *host, decl.data(), decl.size(), &out)
                      : genref_introduce_joos(prog->get(), o.className.c_str(), decl.data(),
                                              decl.size(), &out);
  if (s != GENREF_OK) {
    return reportFailure(s, std::string(genref_last_error_kind()) == "DeclParseError" ? o.declFile : "");
  }
  return emit(o, ProgramHandle(out).get());
}

int runCheck(const Options& o) {
  int code = 0;
  auto prog = load(o, code);
  if (!prog) return code;
  char* text = nullptr;
  std::size_t count = 0;
  if (auto s = genref_check(prog->get(), &text, &count); s != GENREF_OK) return reportFailure(s);
  StringHandle owned(text);
  std::cerr << text;
  return count == 0 ? 0 : 1;
}

int runAst(const Options& o) {
  int code = 0;
  auto prog = load(o, code);
  if (!prog) return code;
  char* text = nullptr;
  if (auto s = genref_dump(prog->get(), &text); s != GENREF_OK) return reportFailure(s);
  StringHandle owned(text);
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Language-parametric extract and introduce refactorings"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--lang", o.lang, "Source language")
        ->required()
        ->check(CLI::IsMember({"joos", "minilet"}));
    cmd->add_option("--file", o.file, "Program file")->required();
  };
  auto outputs = [&o](CLI::App* cmd) {
    auto* path = cmd->add_option("--output", o.output, "Write the result to this path");
    cmd->add_flag("--in-place", o.inPlace, "Replace the input file")->excludes(path);
  };

  auto* extract = app.add_subcommand("extract", "Extract a statement or expression");
  common(extract);
  extract->add_option("--focus", o.focus, "Span of the fragment, L:C-L:C, end exclusive");
  extract->add_option("--name", o.name, "Name of the new method or function");
  outputs(extract);

  auto* introduce = app.add_subcommand("introduce", "Add a declaration to a scope");
  common(introduce);
  introduce->add_option("--decl-file", o.declFile, "File holding one method or function");
  introduce->add_option("--class", o.className, "Target class (joos)");
  introduce->add_option("--focus", o.focus, "Span of the target let or definition list (minilet)");
  outputs(introduce);

  auto* check = app.add_subcommand("check", "Run the static checker");
  common(check);
  auto* ast = app.add_subcommand("ast", "Print the syntax tree");
  common(ast);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "genref: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*extract) return runExtract(o);
    if (*introduce) return runIntroduce(o);
    if (*check) return runCheck(o);
    return runAst(o);
  } catch (const UsageError& e) {
    std::cerr << "genref: " << e.what() << '\n';
    return kUsage;
  }
}
