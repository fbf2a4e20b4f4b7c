#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genref/framework.hpp"
#include "genref/joos/ast.hpp"
#include "genref/joos/names.hpp"

namespace genref::joos {

// --- focus kinds -----------------------------------------------------------

/// Unwraps StatementFocus.
strategy::TU<Term> getStatementFocus();
/// Unwraps MethodDeclarationFocus.
strategy::TU<Term> getMethodListFocus();
/// Wraps a plain method list in MethodDeclarationFocus.
strategy::TP setMethodListHost();

/// Throws std::invalid_argument for a local declaration.
std::shared_ptr<const StatementFocus> focusStatement(StmtPtr s);

// --- abstraction instance --------------------------------------------------

/// Method declarations as abstractions, `this.n(args);` statements as their
/// applications. Formal and actual constructors accept expression types only.
const framework::AbstractionSignature<TypeJoos>& methodSignature();

// --- refactorings ----------------------------------------------------------

/// No return anywhere in the fragment, and every variable it assigns is
/// declared inside it. Failure reasons are "HasReturn" and
/// "AssignsFreeVariable(<name>)".
framework::CheckResult checkExtractable(const Term& fragment);

framework::ExtractionParams<TypeJoos> extractionParams();

/// Extracts the statement under StatementFocus into a new void method of the
/// enclosing class and calls it in place. Throws framework::RefactorError.
ProgramPtr extractMethod(const NameJoos& newName, const Term& prog);

/// Appends `method` to the method list under MethodDeclarationFocus.
ProgramPtr introduceMethod(const std::shared_ptr<const Method>& method, const Term& prog);

// --- focus placement -------------------------------------------------------

enum class FocusKind { Statement, MethodList };

class SpanMismatch : public std::runtime_error {
 public:
  SpanMismatch(term::Span requested, std::vector<term::Span> nearest);

  const term::Span& requested() const { return requested_; }
  const std::vector<term::Span>& nearest() const { return nearest_; }

 private:
  term::Span requested_;
  std::vector<term::Span> nearest_;
};

/// Wraps the node of the requested kind whose recorded span equals `span`.
/// Throws SpanMismatch listing the closest candidate spans.
ProgramPtr placeFocus(const ProgramPtr& prog, FocusKind kind, term::Span span);
ProgramPtr placeFocusBySpan(std::string_view source, FocusKind kind, term::Span span);

/// Marks the method list of the class called `className`. Throws
/// std::out_of_range when there is no such class.
ProgramPtr focusClassMethods(const ProgramPtr& prog, std::string_view className);

// --- static check ----------------------------------------------------------

struct Diagnostic {
  std::string where;
  std::string message;
};

/// Name resolution, method uniqueness, call arity and assignment targets.
/// Not a type checker. Throws FocusPresent on a focused program.
std::vector<Diagnostic> staticCheck(const Program& p);

}  // namespace genref::joos
