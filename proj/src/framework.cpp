#include "genref/framework.hpp"

namespace genref::framework {

using namespace strategy;

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoFocus: return "NoFocus";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::UntypedFreeName: return "UntypedFreeName";
    case ErrorKind::NoHost: return "NoHost";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::ConstructorRejected: return "ConstructorRejected";
    case ErrorKind::ReplacementRejected: return "ReplacementRejected";
  }
  return "Unknown";
}

RefactorError::RefactorError(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(std::move(detail)) {}

Names unionNames(Names a, const Names& b) {
  Names out;
  out.reserve(a.size() + b.size());
  for (const Names* src : {static_cast<const Names*>(&a), &b}) {
    for (const auto& n : *src) {
      if (!containsName(out, n)) out.push_back(n);
    }
  }
  return out;
}

Names minusNames(Names a, const Names& b) {
  std::erase_if(a, [&b](const Name& n) { return containsName(b, n); });
  return a;
}

bool containsName(const Names& ns, const Name& n) {
  return std::find(ns.begin(), ns.end(), n) != ns.end();
}

Term selectFocus(const TU<Term>& getFocus, const Term& prog) {
  auto found = applyTU(oncetdTU(getFocus), prog);
  if (!found) throw RefactorError(ErrorKind::NoFocus, "no focused fragment");
  return *found;
}

Term replaceFocus(const TU<Term>& getFocus,
                  const std::function<std::optional<Term>(const Term&)>& put, const Term& prog) {
  TP rewrite([getFocus, put](const Term& t) -> std::optional<Term> {
    auto fragment = getFocus(t);
    if (!fragment) return std::nullopt;
    return put(*fragment);
  });
  if (auto r = applyTP(oncetdTP(rewrite), prog)) return *r;
  if (applyTU(oncetdTU(getFocus), prog)) {
    throw RefactorError(ErrorKind::ReplacementRejected, "replacement declined at the focus");
  }
  throw RefactorError(ErrorKind::NoFocus, "no focused fragment");
}

Term markHost(const TP& setHost, const TU<Term>& getFocus, const Term& prog) {
  if (auto r = applyTP(aboveTP(setHost, voidTU(getFocus)), prog)) return *r;
  throw RefactorError(ErrorKind::NoHost, "no enclosing scope can host a new abstraction");
}

Names freeNames(const TU<Names>& declared, const TU<Names>& referenced, const Term& t) {
  const TU<Names> none = constTU(Names{});
  const TU<Names> declaredHere = choiceTU(declared, none);
  const TU<Names> referencedHere = choiceTU(referenced, none);
  const Monoid<Names> sets{{}, [](Names a, Names b) { return unionNames(std::move(a), b); }};

  auto free = fixTU<Names>([&](const TU<Names>& self) {
    auto below = combTU([](Names a, Names b) { return unionNames(std::move(a), b); },
                        referencedHere, allTU(sets, self));
    return combTU([](Names a, Names b) { return minusNames(std::move(a), b); }, below,
                  declaredHere);
  });
  return applyTU(free, t).value_or(Names{});
}

}  // namespace genref::framework
