#include <map>
#include <set>

#include "genref/joos/refactor.hpp"
#include "genref/joos/syntax.hpp"

namespace genref::joos {

namespace {

class Checker {
 public:
  explicit Checker(std::vector<Diagnostic>& out) : out_(out) {}

  void program(const Program& p) {
    std::set<std::string> classes;
    for (const auto& c : p.items()) {
      if (!classes.insert(c->name()).second) report(c->name(), "duplicate class " + c->name());
      classDecl(*c);
    }
  }

 private:
  void classDecl(const Class& c) {
    const auto* methods = dynamic_cast<const MethodList*>(c.methods().get());
    if (!methods) throw FocusPresent();

    where_ = c.name();
    std::set<std::string> fields;
    for (const auto& f : c.fields()->items()) {
      if (!fields.insert(f->name()).second) report(where_, "duplicate field " + f->name());
    }
    arity_.clear();
    for (const auto& m : methods->items()) {
      if (!arity_.emplace(m->name(), m->params()->items().size()).second) {
        report(where_, "duplicate method " + m->name());
      }
    }
    for (const auto& m : methods->items()) {
      where_ = c.name() + "." + m->name();
      scopes_.assign(1, fields);
      scopes_.emplace_back();
      for (const auto& p : m->params()->items()) {
        if (!scopes_.back().insert(p->name()).second) report(where_, "duplicate parameter " + p->name());
      }
      stmt(*m->body());
    }
  }

  void stmt(const Stmt& s) {
    if (const auto* b = dynamic_cast<const Block*>(&s)) {
      scopes_.emplace_back();
      for (const auto& item : b->items()) stmt(*item);
      scopes_.pop_back();
    } else if (const auto* d = dynamic_cast<const LocalDecl*>(&s)) {
      if (d->init()) expr(*d->init());
      if (visibleLocal(d->name())) report(where_, "duplicate local " + d->name());
      scopes_.back().insert(d->name());
    } else if (const auto* a = dynamic_cast<const Assign*>(&s)) {
      if (!visible(a->target())) report(where_, "assignment to undeclared variable " + a->target());
      expr(*a->value());
    } else if (const auto* i = dynamic_cast<const If*>(&s)) {
      expr(*i->cond());
      stmt(*i->then());
      if (i->otherwise()) stmt(*i->otherwise());
    } else if (const auto* w = dynamic_cast<const While*>(&s)) {
      expr(*w->cond());
      stmt(*w->body());
    } else if (const auto* r = dynamic_cast<const Return*>(&s)) {
      if (r->value()) expr(*r->value());
    } else if (const auto* c = dynamic_cast<const CallStmt*>(&s)) {
      call(*c->call());
    } else if (dynamic_cast<const StatementFocus*>(&s)) {
      throw FocusPresent();
    }
  }

  void expr(const Expr& e) {
    if (const auto* v = dynamic_cast<const VarRef*>(&e)) {
      if (!visible(v->name())) report(where_, "unresolved name " + v->name());
    } else if (const auto* c = dynamic_cast<const Call*>(&e)) {
      call(*c);
    } else if (const auto* b = dynamic_cast<const Binary*>(&e)) {
      expr(*b->lhs());
      expr(*b->rhs());
    } else if (const auto* n = dynamic_cast<const Not*>(&e)) {
      expr(*n->operand());
    }
  }

  void call(const Call& c) {
    auto it = arity_.find(c.name());
    const auto given = c.args()->items().size();
    if (it == arity_.end()) {
      report(where_, "unresolved method " + c.name());
    } else if (it->second != given) {
      report(where_, "arity mismatch calling " + c.name() + ": expected " +
                         std::to_string(it->second) + ", got " + std::to_string(given));
    }
    for (const auto& a : c.args()->items()) expr(*a);
  }

  bool visible(const std::string& n) const {
    for (const auto& s : scopes_) {
      if (s.count(n)) return true;
    }
    return false;
  }

  // Parameters and locals; fields (scope 0) may be shadowed.
  bool visibleLocal(const std::string& n) const {
    for (std::size_t i = 1; i < scopes_.size(); ++i) {
      if (scopes_[i].count(n)) return true;
    }
    return false;
  }

  void report(const std::string& where, std::string message) {
    out_.push_back({where, std::move(message)});
  }

  std::vector<Diagnostic>& out_;
  std::string where_;
  std::map<std::string, std::size_t> arity_;
  std::vector<std::set<std::string>> scopes_;
};

}  // namespace

std::vector<Diagnostic> staticCheck(const Program& p) {
  std::vector<Diagnostic> out;
  Checker(out).program(p);
  return out;
}

}  // namespace genref::joos
