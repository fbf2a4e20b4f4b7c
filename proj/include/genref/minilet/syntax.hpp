#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "genref/lexer.hpp"
#include "genref/minilet/ast.hpp"

namespace genref::minilet {

/// Throws ParseError.
ProgramPtr parseProgram(std::string_view source);
/// A single `name(formals) = body;` definition.
std::shared_ptr<const FunDef> parseFunDef(std::string_view source);

/// A single identifier token that is not a keyword.
bool isIdentifier(std::string_view text);

class FocusPresent : public std::invalid_argument {
 public:
  FocusPresent() : std::invalid_argument("program still contains a focus wrapper") {}
};

/// `let` blocks are laid out one definition per line with four-space
/// indentation; a `let` used as an operand is parenthesised.
std::string prettyProgram(const Program& p);
std::string prettyFunDef(const FunDef& f);
std::string prettyExpression(const Expr& e);

}  // namespace genref::minilet
