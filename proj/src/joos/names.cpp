#include "genref/joos/names.hpp"

namespace genref::joos {

using framework::Names;
using namespace strategy;

std::string to_string(const TypeJoos& t) {
  if (const auto* e = std::get_if<ExprType>(&t)) return std::string(to_string(e->type));
  const auto& m = std::get<MethodType>(t);
  std::string out = std::string(to_string(m.result)) + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) out += ", ";
    out += to_string(m.params[i]);
  }
  return out + ")";
}

namespace {

Pair header(const Method& m) {
  MethodType type{m.result(), {}};
  for (const auto& p : m.params()->items()) type.params.push_back(p->type());
  return {m.name(), type};
}

std::optional<Pairs> declaredStmt(const StmtPtr& s) {
  if (const auto* d = dynamic_cast<const LocalDecl*>(s.get())) {
    return Pairs{{d->name(), ExprType{d->type()}}};
  }
  if (const auto* b = dynamic_cast<const Block*>(s.get())) {
    Pairs out;
    for (const auto& item : b->items()) {
      if (const auto* d = dynamic_cast<const LocalDecl*>(item.get())) {
        out.push_back({d->name(), ExprType{d->type()}});
      }
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

TU<Pairs> declaredJoos() {
  TU<Pairs> q = failTU<Pairs>();
  q = adhocTU<Stmt>(q, declaredStmt);
  q = adhocTU<Param>(q, [](const std::shared_ptr<const Param>& p) -> std::optional<Pairs> {
    return Pairs{{p->name(), ExprType{p->type()}}};
  });
  q = adhocTU<Field>(q, [](const std::shared_ptr<const Field>& f) -> std::optional<Pairs> {
    return Pairs{{f->name(), ExprType{f->type()}}};
  });
  q = adhocTU<Method>(q, [](const std::shared_ptr<const Method>& m) -> std::optional<Pairs> {
    Pairs out{header(*m)};
    for (const auto& p : m->params()->items()) out.push_back({p->name(), ExprType{p->type()}});
    return out;
  });
  q = adhocTU<Class>(q, [](const std::shared_ptr<const Class>& c) -> std::optional<Pairs> {
    Pairs out;
    for (const auto& f : c->fields()->items()) out.push_back({f->name(), ExprType{f->type()}});
    if (const auto* ms = dynamic_cast<const MethodList*>(c->methods().get())) {
      for (const auto& m : ms->items()) out.push_back(header(*m));
    }
    return out;
  });
  return q;
}

TU<Names> declaredNamesJoos() { return framework::namesOf(declaredJoos()); }

TU<Names> definedJoos() {
  return monoTU<Stmt>([](const StmtPtr& s) -> std::optional<Names> {
    if (const auto* a = dynamic_cast<const Assign*>(s.get())) return Names{a->target()};
    return std::nullopt;
  });
}

TU<Names> usedJoos() {
  return monoTU<Expr>([](const ExprPtr& e) -> std::optional<Names> {
    if (const auto* v = dynamic_cast<const VarRef*>(e.get())) return Names{v->name()};
    if (const auto* c = dynamic_cast<const Call*>(e.get())) return Names{c->name()};
    return std::nullopt;
  });
}

TU<Names> variableUsesJoos() {
  return monoTU<Expr>([](const ExprPtr& e) -> std::optional<Names> {
    if (const auto* v = dynamic_cast<const VarRef*>(e.get())) return Names{v->name()};
    return std::nullopt;
  });
}

TU<Names> referencedJoos() { return choiceTU(definedJoos(), usedJoos()); }

TU<Names> referencedVariablesJoos() { return choiceTU(definedJoos(), variableUsesJoos()); }

}  // namespace genref::joos
