#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "genref/joos/ast.hpp"
#include "genref/lexer.hpp"

namespace genref::joos {

/// Parses a whole compilation unit. Node spans are recorded for focus
/// placement. Throws ParseError.
ProgramPtr parseProgram(std::string_view source);

/// Parses a single method declaration (the contents of a declaration file).
std::shared_ptr<const Method> parseMethod(std::string_view source);

/// A single identifier token that is not a keyword.
bool isIdentifier(std::string_view text);

class FocusPresent : public std::invalid_argument {
 public:
  FocusPresent() : std::invalid_argument("program still contains a focus wrapper") {}
};

/// Deterministic layout: four-space indentation, one statement per line,
/// single spaces around binary operators, minimal parentheses. Throws
/// FocusPresent if a focus wrapper is left in the tree.
std::string prettyProgram(const Program& p);
std::string prettyMethod(const Method& m);
std::string prettyStatement(const Stmt& s);
std::string prettyExpression(const Expr& e);

}  // namespace genref::joos
