#include <map>
#include <optional>
#include <set>

#include "genref/minilet/refactor.hpp"
#include "genref/minilet/syntax.hpp"

namespace genref::minilet {

namespace {

class Checker {
 public:
  explicit Checker(std::vector<Diagnostic>& out) : out_(out) {}

  void program(const Program& p) {
    where_ = "main";
    expr(*p.body());
  }

 private:
  // Arity of let-bound functions; formals have none.
  using Scope = std::map<std::string, std::optional<std::size_t>>;

  void expr(const Expr& e) {
    if (const auto* v = dynamic_cast<const Var*>(&e)) {
      if (!lookup(v->name())) report("unbound name " + v->name());
    } else if (const auto* c = dynamic_cast<const Call*>(&e)) {
      const auto given = c->args()->items().size();
      if (auto found = lookup(c->name()); !found) {
        report("unbound function " + c->name());
      } else if (*found && **found != given) {
        report("arity mismatch calling " + c->name() + ": expected " + std::to_string(**found) +
               ", got " + std::to_string(given));
      }
      for (const auto& a : c->args()->items()) expr(*a);
    } else if (const auto* b = dynamic_cast<const Binary*>(&e)) {
      expr(*b->lhs());
      expr(*b->rhs());
    } else if (const auto* l = dynamic_cast<const Let*>(&e)) {
      let(*l);
    } else if (dynamic_cast<const ExprFocus*>(&e)) {
      throw FocusPresent();
    }
  }

  void let(const Let& l) {
    const auto* defs = dynamic_cast<const FunDefList*>(l.defs().get());
    if (!defs) throw FocusPresent();
    Scope functions;
    for (const auto& f : defs->items()) {
      if (!functions.emplace(f->name(), f->formals()->items().size()).second) {
        report("duplicate function " + f->name());
      }
    }
    scopes_.push_back(std::move(functions));
    const std::string outer = where_;
    for (const auto& f : defs->items()) {
      where_ = outer == "main" ? f->name() : outer + "." + f->name();
      Scope formals;
      for (const auto& x : f->formals()->items()) {
        if (!formals.emplace(x->name(), std::nullopt).second) {
          report("duplicate formal " + x->name());
        }
      }
      scopes_.push_back(std::move(formals));
      expr(*f->body());
      scopes_.pop_back();
    }
    where_ = outer;
    expr(*l.body());
    scopes_.pop_back();
  }

  std::optional<std::optional<std::size_t>> lookup(const std::string& n) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto found = it->find(n); found != it->end()) return found->second;
    }
    return std::nullopt;
  }

  void report(std::string message) { out_.push_back({where_, std::move(message)}); }

  std::vector<Diagnostic>& out_;
  std::string where_;
  std::vector<Scope> scopes_;
};

}  // namespace

std::vector<Diagnostic> staticCheck(const Program& p) {
  std::vector<Diagnostic> out;
  Checker(out).program(p);
  return out;
}

}  // namespace genref::minilet
