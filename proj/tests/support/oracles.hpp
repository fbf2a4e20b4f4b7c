#pragma once

// Reference implementations written directly against the typed ASTs, with
// explicit environments, for comparison with the strategy-based analyses.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genref/joos/names.hpp"
#include "genref/minilet/names.hpp"

namespace oracle {

using Names = std::vector<std::string>;

/// Free names of any JOOS term in order of first free occurrence. A block
/// binds all of its locals over the whole block, a declaration binds its name
/// over itself, a method binds its own name and its parameters, a class its
/// fields and methods.
Names joosFreeNames(const genref::term::Term& t);
/// Variables assigned but not bound within `t`.
Names joosFreeAssigned(const genref::term::Term& t);
/// Bindings on the path from the root to the StatementFocus, outermost first,
/// and the focused statement.
std::optional<std::pair<genref::joos::Pairs, genref::term::Term>> joosEnvAtFocus(
    const genref::term::Term& prog);
bool joosContainsReturn(const genref::term::Term& t);

Names miniletFreeNames(const genref::term::Term& t);
std::optional<std::pair<genref::minilet::Pairs, genref::term::Term>> miniletEnvAtFocus(
    const genref::term::Term& prog);

/// Big-step evaluation with closures, letrec scoping per let and wrapping
/// 64-bit arithmetic. Empty on unbound names, arity errors, arithmetic on
/// functions, when `fuel` calls are exceeded or calls nest too deeply.
std::optional<std::int64_t> evalMinilet(const genref::minilet::Program& p, long fuel = 200000);

/// Lookup with the innermost binding winning.
template <class Tpe>
std::optional<Tpe> lookup(const genref::framework::Pairs<Tpe>& env, const std::string& n) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->name == n) return it->type;
  }
  return std::nullopt;
}

}  // namespace oracle
