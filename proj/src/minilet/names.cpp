#include "genref/minilet/names.hpp"

namespace genref::minilet {

using framework::Names;
using namespace strategy;

namespace {

const FunDefList* plainDefs(const Let& l) {
  const FunDefListNode* node = l.defs().get();
  while (const auto* f = dynamic_cast<const FunDefListFocus*>(node)) node = f->focused().get();
  return dynamic_cast<const FunDefList*>(node);
}

}  // namespace

TU<Pairs> declaredMinilet() {
  TU<Pairs> q = failTU<Pairs>();
  q = adhocTU<FunDef>(q, [](const std::shared_ptr<const FunDef>& f) -> std::optional<Pairs> {
    Pairs out{{f->name(), Val{}}};
    for (const auto& x : f->formals()->items()) out.push_back({x->name(), Val{}});
    return out;
  });
  q = adhocTU<Expr>(q, [](const ExprPtr& e) -> std::optional<Pairs> {
    const auto* l = dynamic_cast<const Let*>(e.get());
    if (!l) return std::nullopt;
    Pairs out;
    if (const auto* defs = plainDefs(*l)) {
      for (const auto& f : defs->items()) out.push_back({f->name(), Val{}});
    }
    return out;
  });
  return q;
}

TU<Names> declaredNamesMinilet() { return framework::namesOf(declaredMinilet()); }

TU<Names> referencedMinilet() {
  return monoTU<Expr>([](const ExprPtr& e) -> std::optional<Names> {
    if (const auto* v = dynamic_cast<const Var*>(e.get())) return Names{v->name()};
    if (const auto* c = dynamic_cast<const Call*>(e.get())) return Names{c->name()};
    return std::nullopt;
  });
}

}  // namespace genref::minilet
