#include <sstream>

#include "genref/minilet/syntax.hpp"

namespace genref::minilet {

namespace {

std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 4, ' '); }

void expr(std::ostream& out, const Expr& e, int minPrec, int depth);

void funDef(std::ostream& out, const FunDef& f, int depth) {
  out << f.name() << '(';
  bool first = true;
  for (const auto& x : f.formals()->items()) {
    if (!first) out << ", ";
    first = false;
    out << x->name();
  }
  out << ") = ";
  expr(out, *f.body(), 0, depth);
  out << ';';
}

void let(std::ostream& out, const Let& l, int depth) {
  const auto* defs = dynamic_cast<const FunDefList*>(l.defs().get());
  if (!defs) throw FocusPresent();
  out << "let\n";
  for (const auto& f : defs->items()) {
    out << indent(depth + 1);
    funDef(out, *f, depth + 1);
    out << '\n';
  }
  out << indent(depth) << "in\n" << indent(depth + 1);
  expr(out, *l.body(), 0, depth + 1);
}

void expr(std::ostream& out, const Expr& e, int minPrec, int depth) {
  if (const auto* lit = dynamic_cast<const IntLit*>(&e)) {
    out << lit->value();
  } else if (const auto* v = dynamic_cast<const Var*>(&e)) {
    out << v->name();
  } else if (const auto* c = dynamic_cast<const Call*>(&e)) {
    out << c->name() << '(';
    bool first = true;
    for (const auto& a : c->args()->items()) {
      if (!first) out << ", ";
      first = false;
      expr(out, *a, 0, depth);
    }
    out << ')';
  } else if (const auto* b = dynamic_cast<const Binary*>(&e)) {
    const int p = precedence(b->op());
    const bool parens = p < minPrec;
    if (parens) out << '(';
    expr(out, *b->lhs(), p, depth);
    out << ' ' << to_string(b->op()) << ' ';
    expr(out, *b->rhs(), p + 1, depth);
    if (parens) out << ')';
  } else if (const auto* l = dynamic_cast<const Let*>(&e)) {
    if (minPrec > 0) out << '(';
    let(out, *l, depth);
    if (minPrec > 0) out << ')';
  } else if (dynamic_cast<const ExprFocus*>(&e)) {
    throw FocusPresent();
  } else {
    throw std::logic_error("unknown expression node " + std::string(e.tag()));
  }
}

}  // namespace

std::string prettyProgram(const Program& p) {
  std::ostringstream out;
  expr(out, *p.body(), 0, 0);
  out << '\n';
  return out.str();
}

std::string prettyFunDef(const FunDef& f) {
  std::ostringstream out;
  funDef(out, f, 0);
  return out.str();
}

std::string prettyExpression(const Expr& e) {
  std::ostringstream out;
  expr(out, e, 0, 0);
  return out.str();
}

}  // namespace genref::minilet
