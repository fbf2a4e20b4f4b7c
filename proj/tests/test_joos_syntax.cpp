#include <gtest/gtest.h>

#include "genref/joos/refactor.hpp"
#include "genref/joos/syntax.hpp"

namespace {

using namespace genref;
using namespace genref::joos;

std::shared_ptr<const Method> firstMethod(const ProgramPtr& p) {
  auto methods = term::as<MethodList>(p->items()[0]->methods());
  return methods->items()[0];
}

StmtPtr firstStmt(const ProgramPtr& p) { return term::as<Block>(firstMethod(p)->body())->items()[0]; }

TEST(JoosParse, EmptyMethod) {
  auto p = parseProgram("class C { void m() { } }");
  ASSERT_EQ(p->items().size(), 1u);
  EXPECT_EQ(p->items()[0]->name(), "C");
  auto m = firstMethod(p);
  EXPECT_EQ(m->name(), "m");
  EXPECT_TRUE(m->params()->items().empty());
  EXPECT_TRUE(term::as<Block>(m->body())->items().empty());
}

TEST(JoosParse, Errors) {
  EXPECT_THROW(parseProgram("class C {"), ParseError);
  EXPECT_THROW(parseProgram(""), ParseError);
  EXPECT_THROW(parseProgram("class C { void m() { x = ; } }"), ParseError);
  EXPECT_THROW(parseProgram("class C { void f; }"), ParseError);
  try {
    parseProgram("class C {\n  void m() { x = 1 }\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position().line, 2);
    EXPECT_EQ(e.position().column, 20);
  }
}

TEST(JoosParse, MulBindsTighter) {
  auto s = term::as<Assign>(firstStmt(parseProgram("class C { void m() { a = b + c * d; } }")));
  ASSERT_TRUE(s);
  auto add = term::as<Binary>(s->value());
  ASSERT_TRUE(add);
  EXPECT_EQ(add->op(), BinOp::Add);
  EXPECT_TRUE(term::as<VarRef>(add->lhs()));
  auto mul = term::as<Binary>(add->rhs());
  ASSERT_TRUE(mul);
  EXPECT_EQ(mul->op(), BinOp::Mul);
}

TEST(JoosParse, PrecedenceLadderAndLeftAssociativity) {
  auto s = term::as<Assign>(firstStmt(parseProgram("class C { void m() { a = !x || y && b < c == d - e - f; } }")));
  auto orE = term::as<Binary>(s->value());
  ASSERT_EQ(orE->op(), BinOp::Or);
  EXPECT_TRUE(term::as<Not>(orE->lhs()));
  auto andE = term::as<Binary>(orE->rhs());
  ASSERT_EQ(andE->op(), BinOp::And);
  auto eqE = term::as<Binary>(andE->rhs());
  ASSERT_EQ(eqE->op(), BinOp::Eq);
  EXPECT_EQ(term::as<Binary>(eqE->lhs())->op(), BinOp::Lt);
  auto sub = term::as<Binary>(eqE->rhs());
  ASSERT_EQ(sub->op(), BinOp::Sub);
  EXPECT_EQ(term::as<Binary>(sub->lhs())->op(), BinOp::Sub);
  EXPECT_TRUE(term::as<VarRef>(sub->rhs()));
}

TEST(JoosPretty, Layout) {
  auto p = parseProgram(
      "class C { int f; boolean g; void m(int a) { int t = 1; if (a < t) { f = (a + 1) * 2; } else "
      "this.n(); while (g) { } return; } int n() { return f - (1 - 2); } }");
  const std::string want =
      "class C {\n"
      "    int f;\n"
      "    boolean g;\n"
      "\n"
      "    void m(int a) {\n"
      "        int t = 1;\n"
      "        if (a < t) {\n"
      "            f = (a + 1) * 2;\n"
      "        } else\n"
      "            this.n();\n"
      "        while (g) { }\n"
      "        return;\n"
      "    }\n"
      "\n"
      "    int n() {\n"
      "        return f - (1 - 2);\n"
      "    }\n"
      "}\n";
  EXPECT_EQ(prettyProgram(*p), want);
  EXPECT_EQ(prettyProgram(*parseProgram(want)), want);
}

TEST(JoosPretty, RoundTrip) {
  const char* src = "class A { void m() { x = y; } } class B { int k(int a, boolean b) { return k(a, !b); } }";
  auto p = parseProgram(src);
  auto again = parseProgram(prettyProgram(*p));
  EXPECT_TRUE(term::structurallyEqual(p, again));
  EXPECT_EQ(prettyProgram(*again), prettyProgram(*p));
}

TEST(JoosPretty, FocusPresent) {
  auto p = parseProgram("class C { void m() { x = 1; } }");
  auto focused = placeFocus(p, FocusKind::Statement, firstStmt(p)->span());
  EXPECT_THROW(prettyProgram(*focused), FocusPresent);
  EXPECT_THROW(staticCheck(*focused), FocusPresent);
}

TEST(JoosSpans, RecordedPerNode) {
  auto p = parseProgram("class C {\n    void m() {\n        { x = 1; }\n    }\n}\n");
  auto block = firstStmt(p);
  EXPECT_EQ(term::to_string(block->span()), "3:9-3:19");
  auto inner = term::as<Block>(block)->items()[0];
  EXPECT_EQ(term::to_string(inner->span()), "3:11-3:17");
}

TEST(JoosSpans, PlaceFocus) {
  const std::string src = "class C {\n    void m() {\n        { x = 1; }\n    }\n    void n() { }\n}\n";
  auto focused = placeFocusBySpan(src, FocusKind::Statement, {{3, 9}, {3, 19}});
  auto f = applyTU(getStatementFocus(), firstStmt(focused));
  ASSERT_TRUE(f);
  EXPECT_TRUE(term::as<Block>(*f));

  try {
    placeFocusBySpan(src, FocusKind::Statement, {{3, 9}, {3, 15}});
    FAIL();
  } catch (const SpanMismatch& e) {
    ASSERT_FALSE(e.nearest().empty());
    EXPECT_EQ(e.nearest()[0], (term::Span{{3, 9}, {3, 19}}));
  }

  auto hosted = placeFocusBySpan(src, FocusKind::MethodList, {{2, 5}, {5, 17}});
  EXPECT_TRUE(term::as<MethodDeclarationFocus>(hosted->items()[0]->methods()));
}

TEST(JoosSpans, LocalDeclarationIsNotFocusable) {
  const std::string src = "class C { void m() { int x; } }";
  EXPECT_THROW(placeFocusBySpan(src, FocusKind::Statement, {{1, 22}, {1, 28}}), SpanMismatch);
  auto p = parseProgram(src);
  EXPECT_THROW(focusStatement(firstStmt(p)), std::invalid_argument);
}

}  // namespace
