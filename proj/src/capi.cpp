#include "genref/genref.h"

#include <cstring>
#include <string>
#include <variant>

#include "genref/joos/refactor.hpp"
#include "genref/joos/syntax.hpp"
#include "genref/minilet/refactor.hpp"
#include "genref/minilet/syntax.hpp"

struct genref_program {
  std::variant<genref::joos::ProgramPtr, genref::minilet::ProgramPtr> ast;
};

namespace {

using namespace genref;

thread_local std::string lastError;
thread_local std::string lastKind;
thread_local std::string lastReason;

genref_status fail(genref_status status, std::string kind, std::string message,
                   std::string reason = {}) {
  lastKind = std::move(kind);
  lastError = std::move(message);
  lastReason = std::move(reason);
  return status;
}

char* copyString(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

term::Span toSpan(const genref_span& s) {
  return {{s.begin_line, s.begin_column}, {s.end_line, s.end_column}};
}

// Runs `body`, translating exceptions into status codes. `declaration` marks
// parse errors that come from a declaration rather than the program.
template <class F>
genref_status guarded(F&& body, bool declaration = false) {
  lastError.clear();
  lastKind.clear();
  lastReason.clear();
  try {
    body();
    return GENREF_OK;
  } catch (const framework::RefactorError& e) {
    return fail(GENREF_REFACTOR_FAILED, std::string(framework::to_string(e.kind())), e.what(),
                e.kind() == framework::ErrorKind::CheckFailed ? e.detail() : std::string{});
  } catch (const ParseError& e) {
    return fail(GENREF_PARSE_ERROR, declaration ? "DeclParseError" : "ParseError", e.what());
  } catch (const joos::SpanMismatch& e) {
    return fail(GENREF_PARSE_ERROR, "SpanMismatch", e.what());
  } catch (const minilet::SpanMismatch& e) {
    return fail(GENREF_PARSE_ERROR, "SpanMismatch", e.what());
  } catch (const std::out_of_range& e) {
    return fail(GENREF_PARSE_ERROR, "UnknownHost", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GENREF_INVALID_ARGUMENT, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return fail(GENREF_INTERNAL_ERROR, "InternalError", e.what());
  } catch (...) {
    return fail(GENREF_INTERNAL_ERROR, "InternalError", "unknown exception");
  }
}

genref_status requireArgs(bool ok) {
  if (ok) return GENREF_OK;
  return fail(GENREF_INVALID_ARGUMENT, "InvalidArgument", "null argument");
}

}  // namespace

extern "C" {

const char* genref_last_error(void) { return lastError.c_str(); }
const char* genref_last_error_kind(void) { return lastKind.c_str(); }
const char* genref_last_error_reason(void) { return lastReason.c_str(); }

genref_status genref_parse(genref_lang lang, const char* source, size_t length,
                           genref_program** out) {
  if (auto s = requireArgs(source && out); s != GENREF_OK) return s;
  return guarded([&] {
    const std::string_view text(source, length);
    if (lang == GENREF_LANG_JOOS) {
      *out = new genref_program{joos::parseProgram(text)};
    } else if (lang == GENREF_LANG_MINILET) {
      *out = new genref_program{minilet::parseProgram(text)};
    } else {
      throw std::invalid_argument("unknown language");
    }
  });
}

void genref_program_free(genref_program* program) { delete program; }

genref_lang genref_program_lang(const genref_program* program) {
  return program->ast.index() == 0 ? GENREF_LANG_JOOS : GENREF_LANG_MINILET;
}

genref_status genref_print(const genref_program* program, char** out) {
  if (auto s = requireArgs(program && out); s != GENREF_OK) return s;
  return guarded([&] {
    *out = copyString(std::visit([](const auto& p) { return prettyProgram(*p); }, program->ast));
  });
}

genref_status genref_dump(const genref_program* program, char** out) {
  if (auto s = requireArgs(program && out); s != GENREF_OK) return s;
  return guarded([&] {
    *out = copyString(std::visit([](const auto& p) { return term::dump(p); }, program->ast));
  });
}

void genref_string_free(char* s) { std::free(s); }

genref_status genref_extract(const genref_program* program, genref_span focus, const char* new_name,
                             genref_program** out) {
  if (auto s = requireArgs(program && new_name && out); s != GENREF_OK) return s;
  return guarded([&] {
    const auto span = toSpan(focus);
    const bool joosLang = std::holds_alternative<joos::ProgramPtr>(program->ast);
    if (!(joosLang ? joos::isIdentifier(new_name) : minilet::isIdentifier(new_name))) {
      throw std::invalid_argument("not a valid identifier: '" + std::string(new_name) + "'");
    }
    if (const auto* j = std::get_if<joos::ProgramPtr>(&program->ast)) {
      auto focused = joos::placeFocus(*j, joos::FocusKind::Statement, span);
      *out = new genref_program{joos::extractMethod(new_name, focused)};
    } else {
      const auto& m = std::get<minilet::ProgramPtr>(program->ast);
      auto focused = minilet::placeFocus(m, minilet::FocusKind::Expression, span);
      *out = new genref_program{minilet::extractFunction(new_name, focused)};
    }
  });
}

genref_status genref_introduce_joos(const genref_program* program, const char* class_name,
                                    const char* decl, size_t decl_length, genref_program** out) {
  if (auto s = requireArgs(program && class_name && decl && out); s != GENREF_OK) return s;
  const auto* j = std::get_if<joos::ProgramPtr>(&program->ast);
  if (!j) return fail(GENREF_INVALID_ARGUMENT, "InvalidArgument", "not a JOOS program");
  std::shared_ptr<const joos::Method> method;
  if (auto s = guarded([&] { method = joos::parseMethod({decl, decl_length}); }, true);
      s != GENREF_OK) {
    return s;
  }
  return guarded([&] {
    auto focused = joos::focusClassMethods(*j, class_name);
    *out = new genref_program{joos::introduceMethod(method, focused)};
  });
}

genref_status genref_introduce_minilet(const genref_program* program, genref_span host,
                                       const char* decl, size_t decl_length, genref_program** out) {
  if (auto s = requireArgs(program && decl && out); s != GENREF_OK) return s;
  const auto* m = std::get_if<minilet::ProgramPtr>(&program->ast);
  if (!m) return fail(GENREF_INVALID_ARGUMENT, "InvalidArgument", "not a minilet program");
  std::shared_ptr<const minilet::FunDef> def;
  if (auto s = guarded([&] { def = minilet::parseFunDef({decl, decl_length}); }, true);
      s != GENREF_OK) {
    return s;
  }
  return guarded([&] {
    auto focused = minilet::placeFocus(*m, minilet::FocusKind::FunDefList, toSpan(host));
    *out = new genref_program{minilet::introduceFunction(def, focused)};
  });
}

genref_status genref_check(const genref_program* program, char** out, size_t* count) {
  if (auto s = requireArgs(program && out && count); s != GENREF_OK) return s;
  return guarded([&] {
    std::string text;
    std::size_t n = 0;
    std::visit(
        [&](const auto& p) {
          for (const auto& d : staticCheck(*p)) {
            text += d.where + ": " + d.message + "\n";
            ++n;
          }
        },
        program->ast);
    *out = copyString(text);
    *count = n;
  });
}

}  // extern "C"
