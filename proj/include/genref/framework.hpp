#pragma once

// Language-independent refactoring layer: focus and scope handling, name
// analyses, the abstraction interface, and generic extraction/introduction.
// Every function here is parameterised by strategies and by an
// AbstractionSignature; languages close these hot spots.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genref/strategy.hpp"
#include "genref/term.hpp"

namespace genref::framework {

using strategy::TP;
using strategy::TU;
using term::Term;

using Name = std::string;
using Names = std::vector<Name>;

enum class ErrorKind {
  NoFocus,
  CheckFailed,
  UntypedFreeName,
  NoHost,
  NameClash,
  ConstructorRejected,
  ReplacementRejected,
};

std::string_view to_string(ErrorKind kind);

/// A refactoring precondition that did not hold. The input program is never
/// modified; the caller still owns it unchanged.
class RefactorError : public std::runtime_error {
 public:
  RefactorError(ErrorKind kind, std::string detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

template <class Tpe>
struct NameTypePair {
  Name name;
  Tpe type;

  friend bool operator==(const NameTypePair&, const NameTypePair&) = default;
};

template <class Tpe>
using Pairs = std::vector<NameTypePair<Tpe>>;

/// Bindings visible at a point, outermost first. Lookup returns the last
/// (innermost) binding of a name.
template <class Tpe>
class Environment {
 public:
  Environment() = default;
  explicit Environment(Pairs<Tpe> bindings) : bindings_(std::move(bindings)) {}

  Environment extended(const Pairs<Tpe>& more) const {
    Environment e = *this;
    e.bindings_.insert(e.bindings_.end(), more.begin(), more.end());
    return e;
  }

  std::optional<Tpe> lookup(const Name& n) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->name == n) return it->type;
    }
    return std::nullopt;
  }

  const Pairs<Tpe>& bindings() const { return bindings_; }
  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  Pairs<Tpe> bindings_;
};

// --- name sets -------------------------------------------------------------
//
// Lists used as sets: duplicates dropped, first occurrence kept.

Names unionNames(Names a, const Names& b);
/// Removes every occurrence of each name in `b`.
Names minusNames(Names a, const Names& b);
bool containsName(const Names& ns, const Name& n);

template <class Tpe>
TU<Names> namesOf(TU<Pairs<Tpe>> declared) {
  return TU<Names>([declared = std::move(declared)](const Term& t) -> std::optional<Names> {
    auto ps = declared(t);
    if (!ps) return std::nullopt;
    Names out;
    for (const auto& p : *ps) out.push_back(p.name);
    return out;
  });
}

// --- focus and scope -------------------------------------------------------

/// The fragment under the first focus wrapper (in preorder) recognised by
/// `getFocus`. Throws NoFocus.
Term selectFocus(const TU<Term>& getFocus, const Term& prog);

/// Replaces the first focus wrapper recognised by `getFocus` with
/// `put(fragment)`. Throws NoFocus when there is no wrapper and
/// ReplacementRejected when `put` declines.
Term replaceFocus(const TU<Term>& getFocus,
                  const std::function<std::optional<Term>(const Term&)>& put, const Term& prog);

/// Wraps the deepest node accepted by `setHost` that strictly contains the
/// focus recognised by `getFocus`. Throws NoHost.
Term markHost(const TP& setHost, const TU<Term>& getFocus, const Term& prog);

// --- name analyses ---------------------------------------------------------

/// Free names of `t`: at every node, names referenced there plus the free
/// names of the children, minus the names declared there. Queries that fail
/// count as empty.
Names freeNames(const TU<Names>& declared, const TU<Names>& referenced, const Term& t);

/// Environment accumulated on the root-to-focus path together with the
/// focused fragment.
template <class Tpe>
std::pair<Environment<Tpe>, Term> boundTypedNames(const TU<Pairs<Tpe>>& declared,
                                                  const TU<Term>& getFocus, const Term& prog) {
  using Env = Environment<Tpe>;
  using Found = std::pair<Env, Term>;
  auto query = strategy::propagateTU(
      Env{},
      [declared](const Env& e) {
        return strategy::letTU(declared,
                               [e](const Pairs<Tpe>& ps) { return strategy::constTU(e.extended(ps)); });
      },
      [getFocus](const Env& e) {
        return strategy::letTU(getFocus, [e](const Term& f) { return strategy::constTU(Found{e, f}); });
      });
  auto found = strategy::applyTU(query, prog);
  if (!found) throw RefactorError(ErrorKind::NoFocus, "no focused fragment");
  return std::move(*found);
}

/// Free names of `t`, each paired with its type from `env`. Throws
/// UntypedFreeName for a free name without a binding.
template <class Tpe>
Pairs<Tpe> freeTypedNames(const TU<Names>& declared, const TU<Names>& referenced,
                          const Environment<Tpe>& env, const Term& t) {
  Pairs<Tpe> out;
  for (const auto& n : freeNames(declared, referenced, t)) {
    auto type = env.lookup(n);
    if (!type) throw RefactorError(ErrorKind::UntypedFreeName, n);
    out.push_back({n, *type});
  }
  return out;
}

// --- abstractions ----------------------------------------------------------

/// Observers and constructors for one form of abstraction and its
/// application. All members are partial; an empty result means "not of this
/// form" for observers and "declined" for constructors.
template <class Tpe>
struct AbstractionSignature {
  std::function<std::optional<Name>(const Term& abstr)> getAbsName;
  std::function<std::optional<Term>(const Term& abstr)> getAbsFormals;
  std::function<std::optional<Term>(const Term& abstr)> getAbsBody;
  std::function<std::optional<Term>(const Name&, const Term& formals, const Term& body)>
      mkAbstraction;
  std::function<std::optional<Term>(const Pairs<Tpe>&)> mkFormals;

  std::function<std::optional<Name>(const Term& apply)> getApplyName;
  std::function<std::optional<Term>(const Term& apply)> getApplyActuals;
  std::function<std::optional<Term>(const Name&, const Term& actuals)> mkApplication;
  std::function<std::optional<Term>(const Pairs<Tpe>&)> mkActuals;

  // Conversions between the focused fragment and the abstraction body or
  // application. Identity unless the language needs a wrapper.
  std::function<Term(const Term& fragment)> fragmentToBody = [](const Term& t) { return t; };
  std::function<Term(const Term& apply)> applicationToFragment = [](const Term& t) { return t; };
};

struct CheckResult {
  bool ok = true;
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

using Check = std::function<CheckResult(const Term& fragment)>;

template <class Tpe>
struct ExtractionParams {
  TU<Pairs<Tpe>> declared;
  TU<Names> referenced;
  TU<Term> find;      // unwraps the fragment focus
  TP mark;            // wraps a host in the host focus
  TU<Term> findHost;  // unwraps the host focus
  Check check;
  AbstractionSignature<Tpe> sig;
};

namespace detail {

template <class T>
T require(std::optional<T> v, const char* what) {
  if (!v) throw RefactorError(ErrorKind::ConstructorRejected, what);
  return std::move(*v);
}

}  // namespace detail

/// Adds `abstr` to the focused list of abstractions, provided its name is
/// neither defined in that list nor free in it.
template <class Tpe>
Term introduce(const TU<Pairs<Tpe>>& declared, const TU<Names>& referenced,
               const TU<Term>& findHost, const AbstractionSignature<Tpe>& sig, const Term& abstr,
               const Term& prog) {
  const Term list = selectFocus(findHost, prog);
  const auto name = sig.getAbsName(abstr);
  if (!name) throw RefactorError(ErrorKind::ConstructorRejected, "not an abstraction");
  const Names frees = freeNames(namesOf(declared), referenced, list);
  Names defs;
  for (const auto& a : list->children()) {
    if (auto n = sig.getAbsName(a)) defs.push_back(*n);
  }
  if (containsName(defs, *name)) {
    throw RefactorError(ErrorKind::NameClash, *name + " is already defined in the target scope");
  }
  if (containsName(frees, *name)) {
    throw RefactorError(ErrorKind::NameClash, *name + " is referenced free in the target scope");
  }
  return replaceFocus(
      findHost, [&abstr](const Term& l) { return std::optional<Term>{term::appendElement(l, abstr)}; },
      prog);
}

/// Extracts the focused fragment into a new abstraction named `newName`,
/// added to the nearest enclosing host, and replaces the fragment by an
/// application of it.
template <class Tpe>
Term extract(const ExtractionParams<Tpe>& p, const Name& newName, const Term& prog) {
  const auto& sig = p.sig;
  const TU<Names> declaredNames = namesOf(p.declared);

  // analysis
  auto [env, fragment] = boundTypedNames(p.declared, p.find, prog);
  if (auto verdict = p.check(fragment); !verdict.ok) {
    throw RefactorError(ErrorKind::CheckFailed, verdict.reason);
  }
  const Pairs<Tpe> pairs = freeTypedNames(declaredNames, p.referenced, env, fragment);

  // construction
  const Term formals = detail::require(sig.mkFormals(pairs), "formal parameters");
  const Term body = sig.fragmentToBody(fragment);
  const Term abstr = detail::require(sig.mkAbstraction(newName, formals, body), "abstraction");

  // transformation
  const Term marked = markHost(p.mark, p.find, prog);
  const Term introduced = introduce(p.declared, p.referenced, p.findHost, sig, abstr, marked);
  const Term actuals = detail::require(sig.mkActuals(pairs), "actual parameters");
  const Term apply = detail::require(sig.mkApplication(newName, actuals), "application");
  const Term replacement = sig.applicationToFragment(apply);
  Term result = replaceFocus(
      p.find, [&replacement](const Term&) { return std::optional<Term>{replacement}; },
      introduced);

  if (strategy::applyTU(strategy::oncetdTU(p.find), result) ||
      strategy::applyTU(strategy::oncetdTU(p.findHost), result)) {
    throw std::logic_error("extraction left a focus wrapper behind");
  }
  return result;
}

}  // namespace genref::framework
