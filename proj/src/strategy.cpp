#include "genref/strategy.hpp"

#include <string>

namespace genref::strategy {

std::optional<Term> applyTP(const TP& s, const Term& t) {
  auto r = s(t);
  if (r && (*r)->sort() != t->sort()) {
    throw std::logic_error("type-preserving strategy turned " + std::string(t->sort().name()) +
                           " into " + std::string((*r)->sort().name()));
  }
  return r;
}

TP idTP() {
  return TP([](const Term& t) { return std::optional<Term>{t}; });
}

TP failTP() {
  return TP([](const Term&) { return std::optional<Term>{}; });
}

TP seqTP(TP first, TP second) {
  return TP([first = std::move(first), second = std::move(second)](const Term& t) {
    auto r = first(t);
    return r ? second(*r) : r;
  });
}

TP choiceTP(TP first, TP second) {
  return TP([first = std::move(first), second = std::move(second)](const Term& t) {
    auto r = first(t);
    return r ? r : second(t);
  });
}

TP allTP(TP s) {
  return TP([s = std::move(s)](const Term& t) -> std::optional<Term> {
    auto cs = t->children();
    if (cs.empty()) return t;
    bool changed = false;
    for (auto& c : cs) {
      auto r = s(c);
      if (!r) return std::nullopt;
      changed = changed || *r != c;
      c = std::move(*r);
    }
    if (!changed) return t;
    return term::rebuild(t, std::move(cs));
  });
}

TP oneTP(TP s) {
  return TP([s = std::move(s)](const Term& t) -> std::optional<Term> {
    auto cs = t->children();
    for (auto& c : cs) {
      if (auto r = s(c)) {
        c = std::move(*r);
        return term::rebuild(t, std::move(cs));
      }
    }
    return std::nullopt;
  });
}

TP adhocTP(TP deflt, Sort s, std::function<std::optional<Term>(const Term&)> special) {
  return TP([deflt = std::move(deflt), s, special = std::move(special)](const Term& t) {
    return t->sort() == s ? special(t) : deflt(t);
  });
}

TP fixTP(const std::function<TP(const TP&)>& body) {
  auto cell = std::make_shared<std::optional<TP>>();
  std::weak_ptr<std::optional<TP>> weak = cell;
  TP self([weak](const Term& t) { return (**weak.lock())(t); });
  *cell = body(self);
  return TP([cell](const Term& t) { return (**cell)(t); });
}

TP oncetdTP(TP s) {
  return fixTP([s](const TP& self) { return choiceTP(s, oneTP(self)); });
}

TP oncebuTP(TP s) {
  return fixTP([s](const TP& self) { return choiceTP(oneTP(self), s); });
}

TP aboveTP(TP s, TU<Unit> below) {
  TU<Unit> strictlyBelow = oneTU(oncetdTU(std::move(below)));
  return oncebuTP(letTP(std::move(strictlyBelow), [s = std::move(s)](const Unit&) { return s; }));
}

}  // namespace genref::strategy
