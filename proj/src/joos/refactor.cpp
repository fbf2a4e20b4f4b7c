#include "genref/joos/refactor.hpp"

#include <algorithm>
#include <cstdlib>

#include "genref/joos/syntax.hpp"

namespace genref::joos {

using framework::CheckResult;
using framework::Names;
using namespace strategy;

TU<Term> getStatementFocus() {
  return monoTU<Stmt>([](const StmtPtr& s) -> std::optional<Term> {
    if (const auto* f = dynamic_cast<const StatementFocus*>(s.get())) return Term(f->focused());
    return std::nullopt;
  });
}

TU<Term> getMethodListFocus() {
  return monoTU<MethodListNode>(
      [](const std::shared_ptr<const MethodListNode>& l) -> std::optional<Term> {
        if (const auto* f = dynamic_cast<const MethodDeclarationFocus*>(l.get())) {
          return Term(f->focused());
        }
        return std::nullopt;
      });
}

TP setMethodListHost() {
  return monoTP<MethodListNode>([](const std::shared_ptr<const MethodListNode>& l)
                                    -> std::optional<std::shared_ptr<const MethodListNode>> {
    if (!term::as<MethodList>(l)) return std::nullopt;
    return std::make_shared<const MethodDeclarationFocus>(l);
  });
}

std::shared_ptr<const StatementFocus> focusStatement(StmtPtr s) {
  if (term::as<LocalDecl>(s)) {
    throw std::invalid_argument("a local variable declaration cannot be focused");
  }
  return std::make_shared<const StatementFocus>(std::move(s));
}

// --- abstraction instance --------------------------------------------------

namespace {

std::optional<Type> exprType(const TypeJoos& t) {
  if (const auto* e = std::get_if<ExprType>(&t)) return e->type;
  return std::nullopt;
}

framework::AbstractionSignature<TypeJoos> makeSignature() {
  framework::AbstractionSignature<TypeJoos> sig;
  sig.getAbsName = [](const Term& t) -> std::optional<std::string> {
    if (auto m = term::as<Method>(t)) return m->name();
    return std::nullopt;
  };
  sig.getAbsFormals = [](const Term& t) -> std::optional<Term> {
    if (auto m = term::as<Method>(t)) return Term(m->params());
    return std::nullopt;
  };
  sig.getAbsBody = [](const Term& t) -> std::optional<Term> {
    if (auto m = term::as<Method>(t)) return Term(m->body());
    return std::nullopt;
  };
  sig.mkAbstraction = [](const std::string& name, const Term& formals,
                         const Term& body) -> std::optional<Term> {
    auto params = term::as<ParamList>(formals);
    auto block = term::as<Block>(body);
    if (!params || !block) return std::nullopt;
    return Term(std::make_shared<const Method>(Type::Void, name, params, block));
  };
  sig.mkFormals = [](const Pairs& pairs) -> std::optional<Term> {
    ParamList::Items params;
    for (const auto& p : pairs) {
      auto type = exprType(p.type);
      if (!type) return std::nullopt;
      params.push_back(std::make_shared<const Param>(*type, p.name));
    }
    return Term(std::make_shared<const ParamList>(std::move(params)));
  };
  sig.getApplyName = [](const Term& t) -> std::optional<std::string> {
    if (auto c = term::as<CallStmt>(t)) return c->call()->name();
    return std::nullopt;
  };
  sig.getApplyActuals = [](const Term& t) -> std::optional<Term> {
    if (auto c = term::as<CallStmt>(t)) return Term(c->call()->args());
    return std::nullopt;
  };
  sig.mkApplication = [](const std::string& name, const Term& actuals) -> std::optional<Term> {
    auto args = term::as<ArgList>(actuals);
    if (!args) return std::nullopt;
    return Term(std::make_shared<const CallStmt>(std::make_shared<const Call>(true, name, args)));
  };
  sig.mkActuals = [](const Pairs& pairs) -> std::optional<Term> {
    ArgList::Items args;
    for (const auto& p : pairs) {
      if (!exprType(p.type)) return std::nullopt;
      args.push_back(std::make_shared<const VarRef>(p.name));
    }
    return Term(std::make_shared<const ArgList>(std::move(args)));
  };
  sig.fragmentToBody = [](const Term& fragment) -> Term {
    if (term::as<Block>(fragment)) return fragment;
    return std::make_shared<const Block>(Block::Items{term::slot<Stmt>(fragment, 0)});
  };
  return sig;
}

}  // namespace

const framework::AbstractionSignature<TypeJoos>& methodSignature() {
  static const auto sig = makeSignature();
  return sig;
}

// --- refactorings ----------------------------------------------------------

CheckResult checkExtractable(const Term& fragment) {
  auto isReturn = monoTU<Stmt>([](const StmtPtr& s) -> std::optional<Unit> {
    if (term::as<Return>(s)) return Unit{};
    return std::nullopt;
  });
  if (applyTU(oncetdTU(isReturn), fragment)) return CheckResult::fail("HasReturn");

  const Names assignedFree = framework::freeNames(declaredNamesJoos(), definedJoos(), fragment);
  if (!assignedFree.empty()) {
    return CheckResult::fail("AssignsFreeVariable(" + assignedFree.front() + ")");
  }
  return CheckResult::pass();
}

framework::ExtractionParams<TypeJoos> extractionParams() {
  return {declaredJoos(),      referencedVariablesJoos(), getStatementFocus(), setMethodListHost(),
          getMethodListFocus(), checkExtractable,         methodSignature()};
}

ProgramPtr extractMethod(const NameJoos& newName, const Term& prog) {
  return term::slot<Program>(framework::extract(extractionParams(), newName, prog), 0);
}

ProgramPtr introduceMethod(const std::shared_ptr<const Method>& method, const Term& prog) {
  return term::slot<Program>(framework::introduce(declaredJoos(), referencedJoos(),
                                                  getMethodListFocus(), methodSignature(), method,
                                                  prog),
                             0);
}

// --- focus placement -------------------------------------------------------

SpanMismatch::SpanMismatch(term::Span requested, std::vector<term::Span> nearest)
    : std::runtime_error([&] {
        std::string msg = "no node spans exactly " + term::to_string(requested);
        if (!nearest.empty()) {
          msg += "; nearest candidates:";
          for (const auto& s : nearest) msg += " " + term::to_string(s);
        }
        return msg;
      }()),
      requested_(requested),
      nearest_(std::move(nearest)) {}

namespace {

long distance(const term::Span& a, const term::Span& b) {
  auto d = [](const term::Position& x, const term::Position& y) {
    return std::labs(x.line - y.line) * 1000L + std::labs(x.column - y.column);
  };
  return d(a.begin, b.begin) + d(a.end, b.end);
}

void collectCandidates(const Term& t, FocusKind kind, std::vector<term::Span>& out) {
  const bool candidate = kind == FocusKind::Statement
                             ? term::as<Stmt>(t) && !term::as<LocalDecl>(t)
                             : static_cast<bool>(term::as<MethodList>(t));
  if (candidate && t->span().known()) out.push_back(t->span());
  for (const auto& c : t->children()) collectCandidates(c, kind, out);
}

}  // namespace

ProgramPtr placeFocus(const ProgramPtr& prog, FocusKind kind, term::Span span) {
  TP wrap = kind == FocusKind::Statement
                ? monoTP<Stmt>([span](const StmtPtr& s) -> std::optional<Term> {
                    if (s->span() != span || term::as<LocalDecl>(s) || term::as<StatementFocus>(s)) {
                      return std::nullopt;
                    }
                    return Term(focusStatement(s));
                  })
                : monoTP<MethodListNode>(
                      [span](const std::shared_ptr<const MethodListNode>& l) -> std::optional<Term> {
                        if (l->span() != span || !term::as<MethodList>(l)) return std::nullopt;
                        return Term(std::make_shared<const MethodDeclarationFocus>(l));
                      });
  if (auto r = applyTP(oncetdTP(wrap), prog)) return term::slot<Program>(*r, 0);

  std::vector<term::Span> candidates;
  collectCandidates(prog, kind, candidates);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return distance(a, span) < distance(b, span); });
  if (candidates.size() > 3) candidates.resize(3);
  throw SpanMismatch(span, std::move(candidates));
}

ProgramPtr placeFocusBySpan(std::string_view source, FocusKind kind, term::Span span) {
  return placeFocus(parseProgram(source), kind, span);
}

ProgramPtr focusClassMethods(const ProgramPtr& prog, std::string_view className) {
  TP mark = monoTP<Class>([className](const std::shared_ptr<const Class>& c) -> std::optional<Term> {
    if (c->name() != className) return std::nullopt;
    auto marked = applyTP(setMethodListHost(), c->methods());
    if (!marked) return std::nullopt;
    return term::rebuild(c, {c->fields(), *marked});
  });
  if (auto r = applyTP(oncetdTP(mark), prog)) return term::slot<Program>(*r, 0);
  throw std::out_of_range("no class named " + std::string(className));
}

}  // namespace genref::joos
