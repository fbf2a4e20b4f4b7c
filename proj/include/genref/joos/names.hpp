#pragma once

// Name analysis ingredients for the Java subset. Variables, methods and
// parameters share one name space, so a name is just identifier text; types
// separate expression types from method types.

#include <string>
#include <variant>
#include <vector>

#include "genref/framework.hpp"
#include "genref/joos/ast.hpp"

namespace genref::joos {

using NameJoos = std::string;

struct ExprType {
  Type type;
  friend bool operator==(const ExprType&, const ExprType&) = default;
};

struct MethodType {
  Type result;
  std::vector<Type> params;
  friend bool operator==(const MethodType&, const MethodType&) = default;
};

using TypeJoos = std::variant<ExprType, MethodType>;
using Pair = framework::NameTypePair<TypeJoos>;
using Pairs = framework::Pairs<TypeJoos>;
using Environment = framework::Environment<TypeJoos>;

std::string to_string(const TypeJoos& t);

/// Declaring occurrences with their types: local variables, parameters,
/// fields and method headers. A block declares its own locals, a class its
/// fields and methods.
strategy::TU<Pairs> declaredJoos();
strategy::TU<framework::Names> declaredNamesJoos();

/// Assignment targets.
strategy::TU<framework::Names> definedJoos();
/// Identifier expressions and called method names.
strategy::TU<framework::Names> usedJoos();
/// Identifier expressions only.
strategy::TU<framework::Names> variableUsesJoos();
/// choiceTU(definedJoos, usedJoos).
strategy::TU<framework::Names> referencedJoos();
/// choiceTU(definedJoos, variableUsesJoos). Used for extraction parameters.
strategy::TU<framework::Names> referencedVariablesJoos();

}  // namespace genref::joos
