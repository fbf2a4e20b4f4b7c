#pragma once

// Random JOOS programs. `validProgram` output passes staticCheck; the open
// generators draw names from a small pool with no scoping discipline.

#include <random>

#include "genref/joos/ast.hpp"

namespace gen {

genref::joos::ProgramPtr validJoosProgram(std::mt19937_64& rng);

/// A method whose body may use undeclared names, redeclare names and use
/// names before their declaration.
std::shared_ptr<const genref::joos::Method> openJoosMethod(std::mt19937_64& rng);

/// Every statement node that may carry a StatementFocus (no declarations).
std::vector<genref::joos::StmtPtr> focusableStatements(const genref::term::Term& t);

}  // namespace gen
