#pragma once

// Expression language with nested `let` blocks of function definitions.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "genref/term.hpp"

namespace genref::minilet {

using term::Term;

enum class BinOp { Add, Mul };

std::string_view to_string(BinOp op);
int precedence(BinOp op);

namespace sorts {
inline constexpr char kProgram[] = "MiniletProgram";
inline constexpr char kExpr[] = "MiniletExpr";
inline constexpr char kFunDefList[] = "MiniletFunDefList";
inline constexpr char kFunDef[] = "MiniletFunDef";
inline constexpr char kFormals[] = "MiniletFormals";
inline constexpr char kFormal[] = "MiniletFormal";
inline constexpr char kArgList[] = "MiniletArgList";
}  // namespace sorts

class Expr : public term::SortBase<sorts::kExpr> {};
class FunDefListNode : public term::SortBase<sorts::kFunDefList> {};

using ExprPtr = std::shared_ptr<const Expr>;

class IntLit final : public Expr {
 public:
  explicit IntLit(std::int64_t value) : value_(value) {}
  std::int64_t value() const { return value_; }
  std::string_view tag() const override { return "IntLit"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {value_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<IntLit>(value_);
  }

 private:
  std::int64_t value_;
};

class Var final : public Expr {
 public:
  explicit Var(std::string name) : name_(std::move(name)) {}
  const std::string& name() const { return name_; }
  std::string_view tag() const override { return "Var"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<Var>(name_);
  }

 private:
  std::string name_;
};

class ArgList final : public term::ListNode<ArgList, term::SortBase<sorts::kArgList>, Expr> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "ArgList"; }
};

class Call final : public Expr {
 public:
  Call(std::string name, std::shared_ptr<const ArgList> args)
      : name_(std::move(name)), args_(std::move(args)) {}
  const std::string& name() const { return name_; }
  const std::shared_ptr<const ArgList>& args() const { return args_; }
  std::string_view tag() const override { return "Call"; }
  std::vector<Term> children() const override { return {args_}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Call>(name_, term::slot<ArgList>(cs[0], 0));
  }

 private:
  std::string name_;
  std::shared_ptr<const ArgList> args_;
};

class Binary final : public Expr {
 public:
  Binary(BinOp op, ExprPtr lhs, ExprPtr rhs) : op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
  BinOp op() const { return op_; }
  const ExprPtr& lhs() const { return lhs_; }
  const ExprPtr& rhs() const { return rhs_; }
  std::string_view tag() const override { return "Binary"; }
  std::vector<Term> children() const override { return {lhs_, rhs_}; }
  std::vector<term::Atom> atoms() const override { return {std::string(to_string(op_))}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Binary>(op_, term::slot<Expr>(cs[0], 0), term::slot<Expr>(cs[1], 1));
  }

 private:
  BinOp op_;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

class Formal final : public term::SortBase<sorts::kFormal> {
 public:
  explicit Formal(std::string name) : name_(std::move(name)) {}
  const std::string& name() const { return name_; }
  std::string_view tag() const override { return "Formal"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<Formal>(name_);
  }

 private:
  std::string name_;
};

class Formals final : public term::ListNode<Formals, term::SortBase<sorts::kFormals>, Formal> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "Formals"; }
};

class FunDef final : public term::SortBase<sorts::kFunDef> {
 public:
  FunDef(std::string name, std::shared_ptr<const Formals> formals, ExprPtr body)
      : name_(std::move(name)), formals_(std::move(formals)), body_(std::move(body)) {}
  const std::string& name() const { return name_; }
  const std::shared_ptr<const Formals>& formals() const { return formals_; }
  const ExprPtr& body() const { return body_; }
  std::string_view tag() const override { return "FunDef"; }
  std::vector<Term> children() const override { return {formals_, body_}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<FunDef>(name_, term::slot<Formals>(cs[0], 0), term::slot<Expr>(cs[1], 1));
  }

 private:
  std::string name_;
  std::shared_ptr<const Formals> formals_;
  ExprPtr body_;
};

class FunDefList final : public term::ListNode<FunDefList, FunDefListNode, FunDef> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "FunDefList"; }
};

class FunDefListFocus final : public FunDefListNode {
 public:
  explicit FunDefListFocus(std::shared_ptr<const FunDefListNode> focused)
      : focused_(std::move(focused)) {}
  const std::shared_ptr<const FunDefListNode>& focused() const { return focused_; }
  std::string_view tag() const override { return "FunDefListFocus"; }
  std::vector<Term> children() const override { return {focused_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<FunDefListFocus>(term::slot<FunDefListNode>(cs[0], 0));
  }

 private:
  std::shared_ptr<const FunDefListNode> focused_;
};

class Let final : public Expr {
 public:
  Let(std::shared_ptr<const FunDefListNode> defs, ExprPtr body)
      : defs_(std::move(defs)), body_(std::move(body)) {}
  const std::shared_ptr<const FunDefListNode>& defs() const { return defs_; }
  const ExprPtr& body() const { return body_; }
  std::string_view tag() const override { return "Let"; }
  std::vector<Term> children() const override { return {defs_, body_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Let>(term::slot<FunDefListNode>(cs[0], 0), term::slot<Expr>(cs[1], 1));
  }

 private:
  std::shared_ptr<const FunDefListNode> defs_;
  ExprPtr body_;
};

class ExprFocus final : public Expr {
 public:
  explicit ExprFocus(ExprPtr focused) : focused_(std::move(focused)) {}
  const ExprPtr& focused() const { return focused_; }
  std::string_view tag() const override { return "ExprFocus"; }
  std::vector<Term> children() const override { return {focused_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<ExprFocus>(term::slot<Expr>(cs[0], 0));
  }

 private:
  ExprPtr focused_;
};

class Program final : public term::SortBase<sorts::kProgram> {
 public:
  explicit Program(ExprPtr body) : body_(std::move(body)) {}
  const ExprPtr& body() const { return body_; }
  std::string_view tag() const override { return "Program"; }
  std::vector<Term> children() const override { return {body_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Program>(term::slot<Expr>(cs[0], 0));
  }

 private:
  ExprPtr body_;
};

using ProgramPtr = std::shared_ptr<const Program>;

}  // namespace genref::minilet
