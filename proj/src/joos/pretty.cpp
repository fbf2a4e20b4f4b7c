#include <sstream>

#include "genref/joos/syntax.hpp"

namespace genref::joos {

namespace {

constexpr int kUnaryPrec = 6;

std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 4, ' '); }

void expr(std::ostream& out, const Expr& e, int minPrec);

void args(std::ostream& out, const ArgList& as) {
  out << '(';
  bool first = true;
  for (const auto& a : as.items()) {
    if (!first) out << ", ";
    first = false;
    expr(out, *a, 1);
  }
  out << ')';
}

void call(std::ostream& out, const Call& c) {
  if (c.viaThis()) out << "this.";
  out << c.name();
  args(out, *c.args());
}

void expr(std::ostream& out, const Expr& e, int minPrec) {
  if (const auto* lit = dynamic_cast<const IntLit*>(&e)) {
    out << lit->value();
  } else if (const auto* b = dynamic_cast<const BoolLit*>(&e)) {
    out << (b->value() ? "true" : "false");
  } else if (const auto* v = dynamic_cast<const VarRef*>(&e)) {
    out << v->name();
  } else if (const auto* c = dynamic_cast<const Call*>(&e)) {
    call(out, *c);
  } else if (const auto* n = dynamic_cast<const Not*>(&e)) {
    out << '!';
    expr(out, *n->operand(), kUnaryPrec);
  } else if (const auto* bin = dynamic_cast<const Binary*>(&e)) {
    const int p = precedence(bin->op());
    const bool parens = p < minPrec;
    if (parens) out << '(';
    expr(out, *bin->lhs(), p);
    out << ' ' << to_string(bin->op()) << ' ';
    expr(out, *bin->rhs(), p + 1);
    if (parens) out << ')';
  } else {
    throw std::logic_error("unknown expression node " + std::string(e.tag()));
  }
}

// True when `s` ends in an if without else, which would capture a following
// else on reparse.
bool endsInOpenIf(const Stmt& s) {
  if (const auto* i = dynamic_cast<const If*>(&s)) {
    return !i->otherwise() || endsInOpenIf(*i->otherwise());
  }
  if (const auto* w = dynamic_cast<const While*>(&s)) return endsInOpenIf(*w->body());
  return false;
}

class Printer {
 public:
  explicit Printer(std::ostream& out) : out_(out) {}

  // Prints `s` starting at the current column; nested lines use `depth`.
  void stmt(const Stmt& s, int depth) {
    if (const auto* b = dynamic_cast<const Block*>(&s)) {
      block(*b, depth);
    } else if (const auto* d = dynamic_cast<const LocalDecl*>(&s)) {
      out_ << to_string(d->type()) << ' ' << d->name();
      if (d->init()) {
        out_ << " = ";
        expr(out_, *d->init(), 1);
      }
      out_ << ';';
    } else if (const auto* a = dynamic_cast<const Assign*>(&s)) {
      out_ << a->target() << " = ";
      expr(out_, *a->value(), 1);
      out_ << ';';
    } else if (const auto* i = dynamic_cast<const If*>(&s)) {
      ifStmt(*i, depth);
    } else if (const auto* w = dynamic_cast<const While*>(&s)) {
      out_ << "while (";
      expr(out_, *w->cond(), 1);
      out_ << ')';
      branch(*w->body(), depth, false);
    } else if (const auto* r = dynamic_cast<const Return*>(&s)) {
      out_ << "return";
      if (r->value()) {
        out_ << ' ';
        expr(out_, *r->value(), 1);
      }
      out_ << ';';
    } else if (const auto* c = dynamic_cast<const CallStmt*>(&s)) {
      call(out_, *c->call());
      out_ << ';';
    } else if (dynamic_cast<const StatementFocus*>(&s)) {
      throw FocusPresent();
    } else {
      throw std::logic_error("unknown statement node " + std::string(s.tag()));
    }
  }

  void block(const Block& b, int depth) {
    if (b.items().empty()) {
      out_ << "{ }";
      return;
    }
    out_ << "{\n";
    for (const auto& s : b.items()) {
      out_ << indent(depth + 1);
      stmt(*s, depth + 1);
      out_ << '\n';
    }
    out_ << indent(depth) << '}';
  }

  void method(const Method& m, int depth) {
    out_ << to_string(m.result()) << ' ' << m.name() << '(';
    bool first = true;
    for (const auto& p : m.params()->items()) {
      if (!first) out_ << ", ";
      first = false;
      out_ << to_string(p->type()) << ' ' << p->name();
    }
    out_ << ") ";
    if (const auto* b = dynamic_cast<const Block*>(m.body().get())) {
      block(*b, depth);
    } else if (dynamic_cast<const StatementFocus*>(m.body().get())) {
      throw FocusPresent();
    } else {
      // Only reachable for hand-built trees; keep the output parseable.
      out_ << "{\n" << indent(depth + 1);
      stmt(*m.body(), depth + 1);
      out_ << '\n' << indent(depth) << '}';
    }
  }

  void classDecl(const Class& c) {
    out_ << "class " << c.name() << " {\n";
    const auto* methods = dynamic_cast<const MethodList*>(c.methods().get());
    if (!methods) throw FocusPresent();
    for (const auto& f : c.fields()->items()) {
      out_ << indent(1) << to_string(f->type()) << ' ' << f->name() << ";\n";
    }
    bool first = c.fields()->items().empty();
    for (const auto& m : methods->items()) {
      if (!first) out_ << '\n';
      first = false;
      out_ << indent(1);
      method(*m, 1);
      out_ << '\n';
    }
    out_ << "}\n";
  }

 private:
  void ifStmt(const If& i, int depth) {
    out_ << "if (";
    expr(out_, *i.cond(), 1);
    out_ << ')';
    const bool needsBraces = i.otherwise() && endsInOpenIf(*i.then());
    const bool thenBlock = branch(*i.then(), depth, needsBraces);
    if (!i.otherwise()) return;
    if (thenBlock) {
      out_ << " else";
    } else {
      out_ << '\n' << indent(depth) << "else";
    }
    if (const auto* chained = dynamic_cast<const If*>(i.otherwise().get())) {
      out_ << ' ';
      ifStmt(*chained, depth);
      return;
    }
    branch(*i.otherwise(), depth, false);
  }

  // Prints the body of if/while/else. Returns true when it ended with '}'.
  bool branch(const Stmt& s, int depth, bool forceBraces) {
    if (const auto* b = dynamic_cast<const Block*>(&s)) {
      out_ << ' ';
      block(*b, depth);
      return true;
    }
    if (forceBraces) {
      out_ << " {\n" << indent(depth + 1);
      stmt(s, depth + 1);
      out_ << '\n' << indent(depth) << '}';
      return true;
    }
    out_ << '\n' << indent(depth + 1);
    stmt(s, depth + 1);
    return false;
  }

  std::ostream& out_;
};

}  // namespace

std::string prettyProgram(const Program& p) {
  std::ostringstream out;
  Printer printer(out);
  bool first = true;
  for (const auto& c : p.items()) {
    if (!first) out << '\n';
    first = false;
    printer.classDecl(*c);
  }
  return out.str();
}

std::string prettyMethod(const Method& m) {
  std::ostringstream out;
  Printer(out).method(m, 0);
  out << '\n';
  return out.str();
}

std::string prettyStatement(const Stmt& s) {
  std::ostringstream out;
  Printer(out).stmt(s, 0);
  return out.str();
}

std::string prettyExpression(const Expr& e) {
  std::ostringstream out;
  expr(out, e, 1);
  return out.str();
}

}  // namespace genref::joos
