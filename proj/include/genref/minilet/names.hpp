#pragma once

// Name analysis ingredients for minilet. Every name has the one type "val".

#include <string>

#include "genref/framework.hpp"
#include "genref/minilet/ast.hpp"

namespace genref::minilet {

using NameMinilet = std::string;

struct Val {
  friend bool operator==(const Val&, const Val&) = default;
};

using TypeMinilet = Val;
using Pair = framework::NameTypePair<TypeMinilet>;
using Pairs = framework::Pairs<TypeMinilet>;
using Environment = framework::Environment<TypeMinilet>;

inline std::string to_string(const Val&) { return "val"; }

/// A function definition declares its name and formals; a let declares the
/// names of all its definitions, which are visible in each other and in the
/// let body.
strategy::TU<Pairs> declaredMinilet();
strategy::TU<framework::Names> declaredNamesMinilet();

/// Identifier uses and called function names.
strategy::TU<framework::Names> referencedMinilet();

}  // namespace genref::minilet
