#include "minilet_gen.hpp"

#include <string>
#include <vector>

namespace gen {

using namespace genref::minilet;
using genref::term::Term;

namespace {

int roll(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

template <class T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(roll(rng, static_cast<int>(xs.size())))];
}

struct Binding {
  std::string name;
  int arity;  // -1 for plain values
};

class ClosedGen {
 public:
  explicit ClosedGen(std::mt19937_64& rng) : rng_(rng) {}

  ExprPtr root(int depth) { return let(depth, {}); }

  ExprPtr expr(int depth, const std::vector<Binding>& scope) {
    std::vector<Binding> values, functions;
    for (const auto& b : scope) (b.arity < 0 ? values : functions).push_back(b);
    const int k = roll(rng_, depth > 0 ? 7 : 3);
    if (k == 1 && !values.empty()) return std::make_shared<const Var>(choose(rng_, values).name);
    if (k == 2 && !functions.empty()) {
      const auto& f = choose(rng_, functions);
      ArgList::Items args;
      for (int i = 0; i < f.arity; ++i) args.push_back(expr(depth - 2, scope));
      return std::make_shared<const Call>(f.name, std::make_shared<const ArgList>(std::move(args)));
    }
    if (k == 3 || k == 4) {
      return std::make_shared<const Binary>(k == 3 ? BinOp::Add : BinOp::Mul, expr(depth - 1, scope),
                                            expr(depth - 1, scope));
    }
    if (k >= 5) return let(depth, scope);
    return std::make_shared<const IntLit>(roll(rng_, 10));
  }

 private:
  ExprPtr let(int depth, std::vector<Binding> scope) {
    static const std::vector<std::string> formalPool = {"x", "y", "z"};
    FunDefList::Items defs;
    const int n = 1 + roll(rng_, 3);
    std::vector<Binding> visible = scope;
    for (int i = 0; i < n; ++i) {
      const std::string name = "f" + std::to_string(functions_++);
      Formals::Items formals;
      std::vector<Binding> inner = visible;
      const int arity = roll(rng_, 3);
      for (int j = 0; j < arity; ++j) {
        formals.push_back(std::make_shared<const Formal>(formalPool[static_cast<std::size_t>(j)]));
        inner.push_back({formalPool[static_cast<std::size_t>(j)], -1});
      }
      defs.push_back(std::make_shared<const FunDef>(
          name, std::make_shared<const Formals>(std::move(formals)), expr(depth - 1, inner)));
      visible.push_back({name, arity});
    }
    return std::make_shared<const Let>(std::make_shared<const FunDefList>(std::move(defs)),
                                       expr(depth - 1, visible));
  }

  std::mt19937_64& rng_;
  int functions_ = 0;
};

class OpenGen {
 public:
  explicit OpenGen(std::mt19937_64& rng) : rng_(rng) {}

  ExprPtr expr(int depth) {
    switch (roll(rng_, depth > 0 ? 7 : 2)) {
      case 0:
        return std::make_shared<const IntLit>(roll(rng_, 10));
      case 1:
      case 2:
        return std::make_shared<const Var>(name());
      case 3: {
        ArgList::Items args;
        const int n = roll(rng_, 3);
        for (int i = 0; i < n; ++i) args.push_back(expr(depth - 2));
        return std::make_shared<const Call>(name(), std::make_shared<const ArgList>(std::move(args)));
      }
      case 4:
        return std::make_shared<const Binary>(roll(rng_, 2) ? BinOp::Add : BinOp::Mul, expr(depth - 1),
                                              expr(depth - 1));
      default: {
        FunDefList::Items defs;
        const int n = 1 + roll(rng_, 2);
        for (int i = 0; i < n; ++i) {
          Formals::Items formals;
          const int arity = roll(rng_, 3);
          for (int j = 0; j < arity; ++j) formals.push_back(std::make_shared<const Formal>(name()));
          defs.push_back(std::make_shared<const FunDef>(
              name(), std::make_shared<const Formals>(std::move(formals)), expr(depth - 1)));
        }
        return std::make_shared<const Let>(std::make_shared<const FunDefList>(std::move(defs)),
                                           expr(depth - 1));
      }
    }
  }

 private:
  const std::string& name() {
    static const std::vector<std::string> pool = {"a", "b", "f", "g", "x", "y"};
    return choose(rng_, pool);
  }

  std::mt19937_64& rng_;
};

void collect(const Term& t, std::vector<ExprPtr>& out) {
  if (auto e = genref::term::as<Expr>(t)) {
    if (!genref::term::as<ExprFocus>(e)) out.push_back(e);
  }
  for (const auto& c : t->children()) collect(c, out);
}

}  // namespace

ProgramPtr closedMiniletProgram(std::mt19937_64& rng, int depth) {
  return std::make_shared<const Program>(ClosedGen(rng).root(depth));
}

ProgramPtr openMiniletProgram(std::mt19937_64& rng) {
  return std::make_shared<const Program>(OpenGen(rng).expr(4));
}

std::vector<ExprPtr> focusableExpressions(const Term& t) {
  std::vector<ExprPtr> out;
  collect(t, out);
  return out;
}

}  // namespace gen
