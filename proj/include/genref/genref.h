/* C interface to the refactoring engine. */
#ifndef GENREF_GENREF_H
#define GENREF_GENREF_H

#include <stddef.h>

#if defined(_WIN32)
#define GENREF_API __declspec(dllexport)
#else
#define GENREF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct genref_program genref_program;

typedef enum { GENREF_LANG_JOOS = 0, GENREF_LANG_MINILET = 1 } genref_lang;

/* Values double as CLI exit codes. */
typedef enum {
  GENREF_OK = 0,
  GENREF_REFACTOR_FAILED = 1, /* a refactoring precondition did not hold */
  GENREF_PARSE_ERROR = 2,     /* source, declaration or span did not resolve */
  GENREF_INVALID_ARGUMENT = 3,
  GENREF_INTERNAL_ERROR = 4
} genref_status;

/* 1-based lines and columns; `end` is one past the last character. */
typedef struct {
  int begin_line;
  int begin_column;
  int end_line;
  int end_column;
} genref_span;

/* Message and kind of the last failure on the calling thread. The kind is a
 * short identifier such as "ParseError", "NameClash" or "CheckFailed"; for
 * CheckFailed the reason ("HasReturn", ...) is available separately. Both
 * stay valid until the next call on the same thread. */
GENREF_API const char* genref_last_error(void);
GENREF_API const char* genref_last_error_kind(void);
GENREF_API const char* genref_last_error_reason(void);

GENREF_API genref_status genref_parse(genref_lang lang, const char* source, size_t length,
                                      genref_program** out);
GENREF_API void genref_program_free(genref_program* program);
GENREF_API genref_lang genref_program_lang(const genref_program* program);

/* Strings returned through `out` are owned by the caller; release them with
 * genref_string_free. */
GENREF_API genref_status genref_print(const genref_program* program, char** out);
GENREF_API genref_status genref_dump(const genref_program* program, char** out);
GENREF_API void genref_string_free(char* s);

/* Extracts the statement (JOOS) or expression (minilet) spanning `focus`. */
GENREF_API genref_status genref_extract(const genref_program* program, genref_span focus,
                                        const char* new_name, genref_program** out);

/* Adds the single method declaration in `decl` to class `class_name`. */
GENREF_API genref_status genref_introduce_joos(const genref_program* program, const char* class_name,
                                               const char* decl, size_t decl_length,
                                               genref_program** out);

/* Adds the single function definition in `decl` to the let, or definition
 * list, spanning `host`. */
GENREF_API genref_status genref_introduce_minilet(const genref_program* program, genref_span host,
                                                  const char* decl, size_t decl_length,
                                                  genref_program** out);

/* Runs the static checker. `out` receives one "where: message" line per
 * diagnostic, empty when the program is clean. */
GENREF_API genref_status genref_check(const genref_program* program, char** out, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* GENREF_GENREF_H */
