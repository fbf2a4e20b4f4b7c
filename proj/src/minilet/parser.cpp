#include <optional>

#include "genref/minilet/syntax.hpp"

namespace genref::minilet {

namespace {

const std::vector<std::string_view> kKeywords = {"let", "in"};
const std::vector<std::string_view> kPuncts = {"(", ")", ",", ";", "=", "+", "*"};

template <class N>
std::shared_ptr<N> spanned(std::shared_ptr<N> n, term::Position begin, term::Position end) {
  n->placeAt({begin, end});
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : ts_(tokenize(src, kKeywords, kPuncts)) {}

  ProgramPtr program() {
    const auto begin = ts_.here();
    auto body = expression();
    if (!ts_.atEnd()) ts_.fail("end of input");
    return spanned(std::make_shared<Program>(body), begin, ts_.lastEnd());
  }

  std::shared_ptr<const FunDef> lonelyFunDef() {
    auto f = funDef();
    if (!ts_.atEnd()) ts_.fail("end of input");
    return f;
  }

 private:
  std::shared_ptr<const FunDef> funDef() {
    const auto begin = ts_.here();
    std::string name = ts_.expectIdentifier().text;
    ts_.expectPunct("(");
    const auto formalsBegin = ts_.here();
    Formals::Items formals;
    if (!ts_.peek().is(TokenKind::Punct, ")")) {
      do {
        const auto& t = ts_.expectIdentifier();
        formals.push_back(spanned(std::make_shared<Formal>(t.text), t.span.begin, t.span.end));
      } while (ts_.acceptPunct(","));
    }
    auto formalList = spanned(std::make_shared<Formals>(std::move(formals)), formalsBegin, ts_.here());
    ts_.expectPunct(")");
    ts_.expectPunct("=");
    auto body = expression();
    ts_.expectPunct(";");
    return spanned(std::make_shared<FunDef>(std::move(name), formalList, body), begin, ts_.lastEnd());
  }

  std::shared_ptr<Expr> expression(int minPrec = 1) {
    const auto begin = ts_.here();
    auto lhs = atom();
    while (true) {
      const Token& t = ts_.peek();
      std::optional<BinOp> op;
      if (t.is(TokenKind::Punct, "+")) op = BinOp::Add;
      if (t.is(TokenKind::Punct, "*")) op = BinOp::Mul;
      if (!op || precedence(*op) < minPrec) break;
      ts_.next();
      auto rhs = expression(precedence(*op) + 1);
      lhs = spanned(std::make_shared<Binary>(*op, lhs, rhs), begin, ts_.lastEnd());
    }
    return lhs;
  }

  std::shared_ptr<Expr> atom() {
    const auto begin = ts_.here();
    const Token& t = ts_.peek();
    if (t.is(TokenKind::Keyword, "let")) {
      ts_.next();
      const auto defsBegin = ts_.here();
      FunDefList::Items defs;
      do {
        if (ts_.peek().kind != TokenKind::Identifier) ts_.fail("function definition");
        defs.push_back(funDef());
      } while (!ts_.peek().is(TokenKind::Keyword, "in"));
      auto defList = spanned(std::make_shared<FunDefList>(std::move(defs)), defsBegin, ts_.lastEnd());
      ts_.expectKeyword("in");
      auto body = expression();
      return spanned(std::make_shared<Let>(defList, body), begin, ts_.lastEnd());
    }
    if (t.kind == TokenKind::Integer) {
      const auto v = ts_.next().value;
      return spanned(std::make_shared<IntLit>(v), begin, ts_.lastEnd());
    }
    if (t.kind == TokenKind::Identifier) {
      std::string name = ts_.next().text;
      if (!ts_.acceptPunct("(")) {
        return spanned(std::make_shared<Var>(std::move(name)), begin, ts_.lastEnd());
      }
      const auto argsBegin = ts_.here();
      ArgList::Items args;
      if (!ts_.peek().is(TokenKind::Punct, ")")) {
        do {
          args.push_back(expression());
        } while (ts_.acceptPunct(","));
      }
      auto argList = spanned(std::make_shared<ArgList>(std::move(args)), argsBegin, ts_.here());
      ts_.expectPunct(")");
      return spanned(std::make_shared<Call>(std::move(name), argList), begin, ts_.lastEnd());
    }
    if (ts_.acceptPunct("(")) {
      auto inner = expression();
      ts_.expectPunct(")");
      inner->placeAt({begin, ts_.lastEnd()});
      return inner;
    }
    ts_.fail("expression");
  }

  TokenStream ts_;
};

}  // namespace

ProgramPtr parseProgram(std::string_view source) { return Parser(source).program(); }

std::shared_ptr<const FunDef> parseFunDef(std::string_view source) {
  return Parser(source).lonelyFunDef();
}

bool isIdentifier(std::string_view text) {
  try {
    const auto toks = tokenize(text, kKeywords, kPuncts);
    return toks.size() == 2 && toks[0].kind == TokenKind::Identifier && toks[0].text == text;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace genref::minilet
