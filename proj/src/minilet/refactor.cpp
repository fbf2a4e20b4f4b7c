#include "genref/minilet/refactor.hpp"

#include <algorithm>
#include <cstdlib>

#include "genref/minilet/syntax.hpp"

namespace genref::minilet {

using framework::CheckResult;
using framework::ErrorKind;
using framework::Names;
using framework::RefactorError;
using namespace strategy;

TU<Term> getExprFocus() {
  return monoTU<Expr>([](const ExprPtr& e) -> std::optional<Term> {
    if (const auto* f = dynamic_cast<const ExprFocus*>(e.get())) return Term(f->focused());
    return std::nullopt;
  });
}

TU<Term> getFunDefListFocus() {
  return monoTU<FunDefListNode>(
      [](const std::shared_ptr<const FunDefListNode>& l) -> std::optional<Term> {
        if (const auto* f = dynamic_cast<const FunDefListFocus*>(l.get())) return Term(f->focused());
        return std::nullopt;
      });
}

TP setLetHost() {
  return monoTP<Expr>([](const ExprPtr& e) -> std::optional<Term> {
    auto l = term::as<Let>(e);
    if (!l || !term::as<FunDefList>(l->defs())) return std::nullopt;
    return term::rebuild(l, {std::make_shared<const FunDefListFocus>(l->defs()), l->body()});
  });
}

// --- abstraction instance --------------------------------------------------

namespace {

framework::AbstractionSignature<TypeMinilet> makeSignature() {
  framework::AbstractionSignature<TypeMinilet> sig;
  sig.getAbsName = [](const Term& t) -> std::optional<std::string> {
    if (auto f = term::as<FunDef>(t)) return f->name();
    return std::nullopt;
  };
  sig.getAbsFormals = [](const Term& t) -> std::optional<Term> {
    if (auto f = term::as<FunDef>(t)) return Term(f->formals());
    return std::nullopt;
  };
  sig.getAbsBody = [](const Term& t) -> std::optional<Term> {
    if (auto f = term::as<FunDef>(t)) return Term(f->body());
    return std::nullopt;
  };
  sig.mkAbstraction = [](const std::string& name, const Term& formals,
                         const Term& body) -> std::optional<Term> {
    auto fs = term::as<Formals>(formals);
    auto e = term::as<Expr>(body);
    if (!fs || !e) return std::nullopt;
    return Term(std::make_shared<const FunDef>(name, fs, e));
  };
  sig.mkFormals = [](const Pairs& pairs) -> std::optional<Term> {
    Formals::Items formals;
    for (const auto& p : pairs) formals.push_back(std::make_shared<const Formal>(p.name));
    return Term(std::make_shared<const Formals>(std::move(formals)));
  };
  sig.getApplyName = [](const Term& t) -> std::optional<std::string> {
    if (auto c = term::as<Call>(t)) return c->name();
    return std::nullopt;
  };
  sig.getApplyActuals = [](const Term& t) -> std::optional<Term> {
    if (auto c = term::as<Call>(t)) return Term(c->args());
    return std::nullopt;
  };
  sig.mkApplication = [](const std::string& name, const Term& actuals) -> std::optional<Term> {
    auto args = term::as<ArgList>(actuals);
    if (!args) return std::nullopt;
    return Term(std::make_shared<const Call>(name, args));
  };
  sig.mkActuals = [](const Pairs& pairs) -> std::optional<Term> {
    ArgList::Items args;
    for (const auto& p : pairs) args.push_back(std::make_shared<const Var>(p.name));
    return Term(std::make_shared<const ArgList>(std::move(args)));
  };
  return sig;
}

// The let whose definition list carries the host focus.
std::shared_ptr<const Let> owningLet(const Term& prog) {
  auto q = monoTU<Expr>([](const ExprPtr& e) -> std::optional<Term> {
    auto l = term::as<Let>(e);
    if (l && term::as<FunDefListFocus>(l->defs())) return Term(l);
    return std::nullopt;
  });
  auto found = applyTU(oncetdTU(q), prog);
  return found ? term::as<Let>(*found) : nullptr;
}

void requireNotFreeIn(const std::shared_ptr<const Let>& let, const NameMinilet& name) {
  if (!let) return;
  if (framework::containsName(framework::freeNames(declaredNamesMinilet(), referencedMinilet(), let),
                              name)) {
    throw RefactorError(ErrorKind::NameClash, name + " is referenced free in the target scope");
  }
}

}  // namespace

const framework::AbstractionSignature<TypeMinilet>& functionSignature() {
  static const auto sig = makeSignature();
  return sig;
}

// --- refactorings ----------------------------------------------------------

CheckResult checkExtractable(const Term&) { return CheckResult::pass(); }

framework::ExtractionParams<TypeMinilet> extractionParams() {
  return {declaredMinilet(), referencedMinilet(), getExprFocus(),     setLetHost(),
          getFunDefListFocus(), checkExtractable, functionSignature()};
}

ProgramPtr extractFunction(const NameMinilet& newName, const Term& prog) {
  const auto p = extractionParams();
  auto result = term::slot<Program>(framework::extract(p, newName, prog), 0);

  // The call replacing the fragment must reach the new definition, and the
  // new definition must not capture uses elsewhere in the let.
  const auto [env, fragment] = framework::boundTypedNames(p.declared, p.find, prog);
  if (env.lookup(newName)) {
    throw RefactorError(ErrorKind::NameClash, newName + " is already bound at the focus");
  }
  requireNotFreeIn(owningLet(framework::markHost(p.mark, p.find, prog)), newName);
  return result;
}

ProgramPtr introduceFunction(const std::shared_ptr<const FunDef>& def, const Term& prog) {
  auto result = term::slot<Program>(
      framework::introduce(declaredMinilet(), referencedMinilet(), getFunDefListFocus(),
                           functionSignature(), def, prog),
      0);
  requireNotFreeIn(owningLet(prog), def->name());
  return result;
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
  const bool candidate = kind == FocusKind::Expression
                             ? term::as<Expr>(t) && !term::as<ExprFocus>(t)
                             : term::as<FunDefList>(t) || term::as<Let>(t);
  if (candidate && t->span().known()) out.push_back(t->span());
  for (const auto& c : t->children()) collectCandidates(c, kind, out);
}

}  // namespace

ProgramPtr placeFocus(const ProgramPtr& prog, FocusKind kind, term::Span span) {
  TP wrap = kind == FocusKind::Expression
                ? monoTP<Expr>([span](const ExprPtr& e) -> std::optional<Term> {
                    if (e->span() != span || term::as<ExprFocus>(e)) return std::nullopt;
                    return Term(std::make_shared<const ExprFocus>(e));
                  })
                : monoTP<Expr>([span](const ExprPtr& e) -> std::optional<Term> {
                    auto l = term::as<Let>(e);
                    if (!l || (l->span() != span && l->defs()->span() != span)) return std::nullopt;
                    return applyTP(setLetHost(), e);
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

}  // namespace genref::minilet
