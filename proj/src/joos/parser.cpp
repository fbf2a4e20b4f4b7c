#include <optional>

#include "genref/joos/syntax.hpp"

namespace genref::joos {

namespace {

const std::vector<std::string_view> kKeywords = {"class", "void", "int",    "boolean", "if",   "else",
                                                 "while", "return", "this", "true",    "false"};
const std::vector<std::string_view> kPuncts = {"{", "}", "(", ")", ";", ",", ".",  "=",  "==",
                                               "+", "-", "*", "/", "<", "!", "&&", "||"};

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
    Program::Items classes;
    do {
      classes.push_back(classDecl());
    } while (!ts_.atEnd());
    return spanned(std::make_shared<Program>(std::move(classes)), begin, ts_.lastEnd());
  }

  std::shared_ptr<const Method> lonelyMethod() {
    auto type = resultType();
    if (!type) ts_.fail("method declaration");
    auto m = method(*type, ts_.here());
    if (!ts_.atEnd()) ts_.fail("end of input");
    return m;
  }

 private:
  std::optional<Type> etype() {
    if (ts_.acceptKeyword("int")) return Type::Int;
    if (ts_.acceptKeyword("boolean")) return Type::Boolean;
    return std::nullopt;
  }

  bool atEtype() const {
    return ts_.peek().is(TokenKind::Keyword, "int") || ts_.peek().is(TokenKind::Keyword, "boolean");
  }

  std::optional<Type> resultType() {
    if (ts_.acceptKeyword("void")) return Type::Void;
    return etype();
  }

  std::shared_ptr<const Class> classDecl() {
    const auto begin = ts_.here();
    ts_.expectKeyword("class");
    std::string name = ts_.expectIdentifier().text;
    ts_.expectPunct("{");

    FieldList::Items fields;
    MethodList::Items methods;
    term::Position methodsBegin, methodsEnd;
    while (!ts_.acceptPunct("}")) {
      const auto memberBegin = ts_.here();
      auto type = resultType();
      if (!type) ts_.fail(methods.empty() ? "field or method declaration" : "method declaration");
      if (ts_.peek(1).is(TokenKind::Punct, "(")) {
        if (methods.empty()) methodsBegin = memberBegin;
        methods.push_back(method(*type, memberBegin));
        methodsEnd = ts_.lastEnd();
        continue;
      }
      if (!methods.empty()) ts_.fail("method declaration");
      if (*type == Type::Void) ts_.fail("method declaration");
      std::string fieldName = ts_.expectIdentifier().text;
      ts_.expectPunct(";");
      fields.push_back(
          spanned(std::make_shared<Field>(*type, std::move(fieldName)), memberBegin, ts_.lastEnd()));
    }

    auto fieldList = std::make_shared<FieldList>(std::move(fields));
    auto methodList = std::make_shared<MethodList>(std::move(methods));
    if (!methodList->items().empty()) methodList->placeAt({methodsBegin, methodsEnd});
    return spanned(std::make_shared<Class>(std::move(name), fieldList, methodList), begin,
                   ts_.lastEnd());
  }

  std::shared_ptr<const Method> method(Type result, term::Position begin) {
    std::string name = ts_.expectIdentifier().text;
    ts_.expectPunct("(");
    const auto paramsBegin = ts_.here();
    ParamList::Items params;
    if (!ts_.peek().is(TokenKind::Punct, ")")) {
      do {
        const auto pb = ts_.here();
        auto type = etype();
        if (!type) ts_.fail("parameter type");
        std::string pname = ts_.expectIdentifier().text;
        params.push_back(spanned(std::make_shared<Param>(*type, std::move(pname)), pb, ts_.lastEnd()));
      } while (ts_.acceptPunct(","));
    }
    auto paramList = spanned(std::make_shared<ParamList>(std::move(params)), paramsBegin, ts_.here());
    ts_.expectPunct(")");
    if (!ts_.peek().is(TokenKind::Punct, "{")) ts_.fail("'{'");
    auto body = block();
    return spanned(std::make_shared<Method>(result, std::move(name), paramList, body), begin,
                   ts_.lastEnd());
  }

  std::shared_ptr<Block> block() {
    const auto begin = ts_.here();
    ts_.expectPunct("{");
    Block::Items items;
    while (!ts_.acceptPunct("}")) {
      if (ts_.atEnd()) ts_.fail("'}'");
      items.push_back(blockStatement());
    }
    return spanned(std::make_shared<Block>(std::move(items)), begin, ts_.lastEnd());
  }

  StmtPtr blockStatement() {
    if (!atEtype()) return statement();
    const auto begin = ts_.here();
    Type type = *etype();
    std::string name = ts_.expectIdentifier().text;
    ExprPtr init;
    if (ts_.acceptPunct("=")) init = expression();
    ts_.expectPunct(";");
    return spanned(std::make_shared<LocalDecl>(type, std::move(name), init), begin, ts_.lastEnd());
  }

  StmtPtr statement() {
    const auto begin = ts_.here();
    const Token& t = ts_.peek();
    if (t.is(TokenKind::Punct, "{")) return block();
    if (t.is(TokenKind::Keyword, "if")) {
      ts_.next();
      ts_.expectPunct("(");
      auto cond = expression();
      ts_.expectPunct(")");
      auto then = statement();
      StmtPtr otherwise;
      if (ts_.acceptKeyword("else")) otherwise = statement();
      return spanned(std::make_shared<If>(cond, then, otherwise), begin, ts_.lastEnd());
    }
    if (t.is(TokenKind::Keyword, "while")) {
      ts_.next();
      ts_.expectPunct("(");
      auto cond = expression();
      ts_.expectPunct(")");
      auto body = statement();
      return spanned(std::make_shared<While>(cond, body), begin, ts_.lastEnd());
    }
    if (t.is(TokenKind::Keyword, "return")) {
      ts_.next();
      ExprPtr value;
      if (!ts_.peek().is(TokenKind::Punct, ";")) value = expression();
      ts_.expectPunct(";");
      return spanned(std::make_shared<Return>(value), begin, ts_.lastEnd());
    }
    if (t.is(TokenKind::Keyword, "this")) {
      auto c = call();
      ts_.expectPunct(";");
      return spanned(std::make_shared<CallStmt>(c), begin, ts_.lastEnd());
    }
    if (t.kind == TokenKind::Identifier) {
      if (ts_.peek(1).is(TokenKind::Punct, "=")) {
        std::string target = ts_.next().text;
        ts_.next();
        auto value = expression();
        ts_.expectPunct(";");
        return spanned(std::make_shared<Assign>(std::move(target), value), begin, ts_.lastEnd());
      }
      if (ts_.peek(1).is(TokenKind::Punct, "(")) {
        auto c = call();
        ts_.expectPunct(";");
        return spanned(std::make_shared<CallStmt>(c), begin, ts_.lastEnd());
      }
      ts_.next();
      ts_.fail("'=' or '('");
    }
    ts_.fail("statement");
  }

  std::shared_ptr<Call> call() {
    const auto begin = ts_.here();
    bool viaThis = false;
    if (ts_.acceptKeyword("this")) {
      ts_.expectPunct(".");
      viaThis = true;
    }
    std::string name = ts_.expectIdentifier().text;
    ts_.expectPunct("(");
    const auto argsBegin = ts_.here();
    ArgList::Items args;
    if (!ts_.peek().is(TokenKind::Punct, ")")) {
      do {
        args.push_back(expression());
      } while (ts_.acceptPunct(","));
    }
    auto argList = spanned(std::make_shared<ArgList>(std::move(args)), argsBegin, ts_.here());
    ts_.expectPunct(")");
    return spanned(std::make_shared<Call>(viaThis, std::move(name), argList), begin, ts_.lastEnd());
  }

  // Precedence climbing over the binary operator table.
  std::shared_ptr<Expr> expression(int minPrec = 1) {
    const auto begin = ts_.here();
    auto lhs = unary();
    while (true) {
      const Token& t = ts_.peek();
      if (t.kind != TokenKind::Punct) break;
      auto op = binop(t.text);
      if (!op || precedence(*op) < minPrec) break;
      ts_.next();
      auto rhs = expression(precedence(*op) + 1);
      lhs = spanned(std::make_shared<Binary>(*op, lhs, rhs), begin, ts_.lastEnd());
    }
    return lhs;
  }

  static std::optional<BinOp> binop(std::string_view s) {
    for (auto op : {BinOp::Or, BinOp::And, BinOp::Lt, BinOp::Eq, BinOp::Add, BinOp::Sub, BinOp::Mul,
                    BinOp::Div}) {
      if (to_string(op) == s) return op;
    }
    return std::nullopt;
  }

  std::shared_ptr<Expr> unary() {
    const auto begin = ts_.here();
    if (ts_.acceptPunct("!")) {
      auto operand = unary();
      return spanned(std::make_shared<Not>(operand), begin, ts_.lastEnd());
    }
    return primary();
  }

  std::shared_ptr<Expr> primary() {
    const auto begin = ts_.here();
    const Token& t = ts_.peek();
    if (t.kind == TokenKind::Integer) {
      const auto v = ts_.next().value;
      return spanned(std::make_shared<IntLit>(v), begin, ts_.lastEnd());
    }
    if (t.is(TokenKind::Keyword, "true") || t.is(TokenKind::Keyword, "false")) {
      const bool v = ts_.next().text == "true";
      return spanned(std::make_shared<BoolLit>(v), begin, ts_.lastEnd());
    }
    if (t.is(TokenKind::Keyword, "this")) return call();
    if (t.kind == TokenKind::Identifier) {
      if (ts_.peek(1).is(TokenKind::Punct, "(")) return call();
      std::string name = ts_.next().text;
      return spanned(std::make_shared<VarRef>(std::move(name)), begin, ts_.lastEnd());
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

std::shared_ptr<const Method> parseMethod(std::string_view source) {
  return Parser(source).lonelyMethod();
}

bool isIdentifier(std::string_view text) {
  try {
    const auto toks = tokenize(text, kKeywords, kPuncts);
    return toks.size() == 2 && toks[0].kind == TokenKind::Identifier && toks[0].text == text;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace genref::joos
