#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <variant>

namespace oracle {

using genref::term::as;
using genref::term::Term;
namespace j = genref::joos;
namespace m = genref::minilet;

namespace {

using Scope = std::set<std::string>;

void note(Names& out, const Scope& env, const std::string& n) {
  if (env.count(n) || std::find(out.begin(), out.end(), n) != out.end()) return;
  out.push_back(n);
}

// --- JOOS --------------------------------------------------------------------

const j::MethodList* plainMethods(const j::Class& c) {
  return dynamic_cast<const j::MethodList*>(c.methods().get());
}

j::MethodType header(const j::Method& me) {
  j::MethodType t{me.result(), {}};
  for (const auto& p : me.params()->items()) t.params.push_back(p->type());
  return t;
}

struct JoosFree {
  bool assignedOnly = false;
  Names out;

  void walk(const Term& t, Scope env) {
    if (auto c = as<j::Class>(t)) {
      for (const auto& f : c->fields()->items()) env.insert(f->name());
      if (const auto* ms = plainMethods(*c)) {
        for (const auto& me : ms->items()) env.insert(me->name());
      }
    } else if (auto me = as<j::Method>(t)) {
      env.insert(me->name());
      for (const auto& p : me->params()->items()) env.insert(p->name());
    } else if (auto b = as<j::Block>(t)) {
      for (const auto& s : b->items()) {
        if (auto d = as<j::LocalDecl>(s)) env.insert(d->name());
      }
    } else if (auto d = as<j::LocalDecl>(t)) {
      env.insert(d->name());
    } else if (auto a = as<j::Assign>(t)) {
      note(out, env, a->target());
    } else if (auto e = as<j::Expr>(t)) {
      if (assignedOnly) return;
      if (auto v = as<j::VarRef>(e)) note(out, env, v->name());
      if (auto call = as<j::Call>(e)) note(out, env, call->name());
    }
    for (const auto& child : t->children()) walk(child, env);
  }
};

using JoosFound = std::pair<j::Pairs, Term>;

std::optional<JoosFound> joosSearch(const Term& t, j::Pairs env) {
  if (auto f = as<j::StatementFocus>(t)) return JoosFound{env, f->focused()};
  if (auto c = as<j::Class>(t)) {
    for (const auto& f : c->fields()->items()) env.push_back({f->name(), j::ExprType{f->type()}});
    if (const auto* ms = plainMethods(*c)) {
      for (const auto& me : ms->items()) env.push_back({me->name(), header(*me)});
    }
  } else if (auto me = as<j::Method>(t)) {
    env.push_back({me->name(), header(*me)});
    for (const auto& p : me->params()->items()) env.push_back({p->name(), j::ExprType{p->type()}});
  } else if (auto b = as<j::Block>(t)) {
    for (const auto& s : b->items()) {
      if (auto d = as<j::LocalDecl>(s)) env.push_back({d->name(), j::ExprType{d->type()}});
    }
  } else if (auto d = as<j::LocalDecl>(t)) {
    env.push_back({d->name(), j::ExprType{d->type()}});
  }
  for (const auto& child : t->children()) {
    if (auto found = joosSearch(child, env)) return found;
  }
  return std::nullopt;
}

// --- minilet -----------------------------------------------------------------

const m::FunDefList* plainDefs(const m::Let& l) {
  const m::FunDefListNode* n = l.defs().get();
  while (const auto* f = dynamic_cast<const m::FunDefListFocus*>(n)) n = f->focused().get();
  return dynamic_cast<const m::FunDefList*>(n);
}

void miniletFree(const Term& t, Scope env, Names& out) {
  if (auto l = as<m::Let>(t)) {
    if (const auto* defs = plainDefs(*l)) {
      for (const auto& f : defs->items()) env.insert(f->name());
    }
  } else if (auto f = as<m::FunDef>(t)) {
    env.insert(f->name());
    for (const auto& x : f->formals()->items()) env.insert(x->name());
  } else if (auto v = as<m::Var>(t)) {
    note(out, env, v->name());
  } else if (auto c = as<m::Call>(t)) {
    note(out, env, c->name());
  }
  for (const auto& child : t->children()) miniletFree(child, env, out);
}

using MiniletFound = std::pair<m::Pairs, Term>;

std::optional<MiniletFound> miniletSearch(const Term& t, m::Pairs env) {
  if (auto f = as<m::ExprFocus>(t)) return MiniletFound{env, f->focused()};
  if (auto l = as<m::Let>(t)) {
    if (const auto* defs = plainDefs(*l)) {
      for (const auto& f : defs->items()) env.push_back({f->name(), m::Val{}});
    }
  } else if (auto f = as<m::FunDef>(t)) {
    env.push_back({f->name(), m::Val{}});
    for (const auto& x : f->formals()->items()) env.push_back({x->name(), m::Val{}});
  }
  for (const auto& child : t->children()) {
    if (auto found = miniletSearch(child, env)) return found;
  }
  return std::nullopt;
}

// --- evaluator ---------------------------------------------------------------

struct Frame;
using FramePtr = std::shared_ptr<const Frame>;

struct Closure {
  const m::FunDef* def;
  FramePtr env;
};

using Value = std::variant<std::int64_t, Closure>;

// Let frames hold their definitions and build closures on lookup, so no
// frame refers to itself.
struct Frame {
  FramePtr parent;
  std::map<std::string, Value> values;
  const m::FunDefList* defs = nullptr;
};

struct Stuck {};

class Evaluator {
 public:
  explicit Evaluator(long fuel) : fuel_(fuel) {}

  Value eval(const m::Expr& e, const FramePtr& env) {
    if (const auto* lit = dynamic_cast<const m::IntLit*>(&e)) return lit->value();
    if (const auto* v = dynamic_cast<const m::Var*>(&e)) return lookup(env, v->name());
    if (const auto* b = dynamic_cast<const m::Binary*>(&e)) {
      const auto l = static_cast<std::uint64_t>(integer(eval(*b->lhs(), env)));
      const auto r = static_cast<std::uint64_t>(integer(eval(*b->rhs(), env)));
      return static_cast<std::int64_t>(b->op() == m::BinOp::Add ? l + r : l * r);
    }
    if (const auto* c = dynamic_cast<const m::Call*>(&e)) {
      if (--fuel_ < 0) throw Stuck{};
      auto callee = lookup(env, c->name());
      const auto* fn = std::get_if<Closure>(&callee);
      if (!fn) throw Stuck{};
      const auto& formals = fn->def->formals()->items();
      const auto& args = c->args()->items();
      if (formals.size() != args.size()) throw Stuck{};
      auto frame = std::make_shared<Frame>();
      frame->parent = fn->env;
      for (std::size_t i = 0; i < args.size(); ++i) {
        frame->values.insert_or_assign(formals[i]->name(), eval(*args[i], env));
      }
      if (++depth_ > kMaxDepth) throw Stuck{};
      auto result = eval(*fn->def->body(), frame);
      --depth_;
      return result;
    }
    if (const auto* l = dynamic_cast<const m::Let*>(&e)) {
      auto frame = std::make_shared<Frame>();
      frame->parent = env;
      frame->defs = plainDefs(*l);
      if (!frame->defs) throw Stuck{};
      return eval(*l->body(), frame);
    }
    throw Stuck{};
  }

  static std::int64_t integer(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    throw Stuck{};
  }

 private:
  static Value lookup(const FramePtr& env, const std::string& n) {
    for (const Frame* f = env.get(); f; f = f->parent.get()) {
      if (auto it = f->values.find(n); it != f->values.end()) return it->second;
      if (f->defs) {
        for (const auto& d : f->defs->items()) {
          if (d->name() == n) return Closure{d.get(), frameHandle(env, f)};
        }
      }
    }
    throw Stuck{};
  }

  static FramePtr frameHandle(const FramePtr& from, const Frame* target) {
    FramePtr cur = from;
    while (cur.get() != target) cur = cur->parent;
    return cur;
  }

  static constexpr int kMaxDepth = 2000;
  long fuel_;
  int depth_ = 0;
};

}  // namespace

Names joosFreeNames(const Term& t) {
  JoosFree w;
  w.walk(t, {});
  return w.out;
}

Names joosFreeAssigned(const Term& t) {
  JoosFree w;
  w.assignedOnly = true;
  w.walk(t, {});
  return w.out;
}

std::optional<std::pair<j::Pairs, Term>> joosEnvAtFocus(const Term& prog) {
  return joosSearch(prog, {});
}

bool joosContainsReturn(const Term& t) {
  if (as<j::Return>(t)) return true;
  for (const auto& c : t->children()) {
    if (joosContainsReturn(c)) return true;
  }
  return false;
}

Names miniletFreeNames(const Term& t) {
  Names out;
  miniletFree(t, {}, out);
  return out;
}

std::optional<std::pair<m::Pairs, Term>> miniletEnvAtFocus(const Term& prog) {
  return miniletSearch(prog, {});
}

std::optional<std::int64_t> evalMinilet(const m::Program& p, long fuel) {
  try {
    Evaluator ev(fuel);
    return Evaluator::integer(ev.eval(*p.body(), nullptr));
  } catch (const Stuck&) {
    return std::nullopt;
  }
}

}  // namespace oracle
