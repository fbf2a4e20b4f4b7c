#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genref/framework.hpp"
#include "genref/minilet/ast.hpp"
#include "genref/minilet/names.hpp"

namespace genref::minilet {

// --- focus kinds -----------------------------------------------------------

/// Unwraps ExprFocus.
strategy::TU<Term> getExprFocus();
/// Unwraps FunDefListFocus.
strategy::TU<Term> getFunDefListFocus();
/// Accepts a let and marks its definition list.
strategy::TP setLetHost();

// --- abstraction instance --------------------------------------------------

/// Function definitions as abstractions, calls as their applications.
const framework::AbstractionSignature<TypeMinilet>& functionSignature();

// --- refactorings ----------------------------------------------------------

/// Always passes: expressions have no returns and no assignments.
framework::CheckResult checkExtractable(const Term& fragment);

framework::ExtractionParams<TypeMinilet> extractionParams();

/// Extracts the expression under ExprFocus into a new function of the
/// innermost enclosing let and calls it in place. Besides the generic
/// conditions, `newName` must not be bound at the focus nor free anywhere in
/// that let. Throws framework::RefactorError.
ProgramPtr extractFunction(const NameMinilet& newName, const Term& prog);

/// Appends `def` to the definition list under FunDefListFocus. The name must
/// not be defined there nor free in the owning let.
ProgramPtr introduceFunction(const std::shared_ptr<const FunDef>& def, const Term& prog);

// --- focus placement -------------------------------------------------------

enum class FocusKind { Expression, FunDefList };

class SpanMismatch : public std::runtime_error {
 public:
  SpanMismatch(term::Span requested, std::vector<term::Span> nearest);

  const term::Span& requested() const { return requested_; }
  const std::vector<term::Span>& nearest() const { return nearest_; }

 private:
  term::Span requested_;
  std::vector<term::Span> nearest_;
};

/// Wraps the expression, or the definition list, whose recorded span equals
/// `span`. For FunDefList the span of the owning let is accepted too.
ProgramPtr placeFocus(const ProgramPtr& prog, FocusKind kind, term::Span span);
ProgramPtr placeFocusBySpan(std::string_view source, FocusKind kind, term::Span span);

// --- static check ----------------------------------------------------------

struct Diagnostic {
  std::string where;
  std::string message;
};

/// Unbound names, duplicate definitions and formals, and the arity of calls
/// to let-bound functions. Throws FocusPresent on a focused program.
std::vector<Diagnostic> staticCheck(const Program& p);

}  // namespace genref::minilet
