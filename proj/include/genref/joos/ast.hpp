#pragma once

// Typed AST for the Java subset. Each syntactic domain is one sort; focus
// wrappers belong to the sort of what they wrap, so inserting or removing
// them is type-preserving.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "genref/term.hpp"

namespace genref::joos {

using term::Term;

enum class Type { Void, Int, Boolean };
enum class BinOp { Or, And, Lt, Eq, Add, Sub, Mul, Div };

std::string_view to_string(Type t);
std::string_view to_string(BinOp op);
/// Binding strength, higher binds tighter.
int precedence(BinOp op);

namespace sorts {
inline constexpr char kProgram[] = "JoosProgram";
inline constexpr char kClass[] = "JoosClass";
inline constexpr char kFieldList[] = "JoosFieldList";
inline constexpr char kField[] = "JoosField";
inline constexpr char kMethodList[] = "JoosMethodList";
inline constexpr char kMethod[] = "JoosMethod";
inline constexpr char kParamList[] = "JoosParamList";
inline constexpr char kParam[] = "JoosParam";
inline constexpr char kStatement[] = "JoosStatement";
inline constexpr char kExpression[] = "JoosExpression";
inline constexpr char kArgList[] = "JoosArgList";
}  // namespace sorts

class Expr : public term::SortBase<sorts::kExpression> {};
class Stmt : public term::SortBase<sorts::kStatement> {};
class MethodListNode : public term::SortBase<sorts::kMethodList> {};

using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// --- expressions -----------------------------------------------------------

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

class BoolLit final : public Expr {
 public:
  explicit BoolLit(bool value) : value_(value) {}
  bool value() const { return value_; }
  std::string_view tag() const override { return "BoolLit"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override {
    return {std::string(value_ ? "true" : "false")};
  }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<BoolLit>(value_);
  }

 private:
  bool value_;
};

class VarRef final : public Expr {
 public:
  explicit VarRef(std::string name) : name_(std::move(name)) {}
  const std::string& name() const { return name_; }
  std::string_view tag() const override { return "VarRef"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<VarRef>(name_);
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
  Call(bool viaThis, std::string name, std::shared_ptr<const ArgList> args)
      : viaThis_(viaThis), name_(std::move(name)), args_(std::move(args)) {}
  bool viaThis() const { return viaThis_; }
  const std::string& name() const { return name_; }
  const std::shared_ptr<const ArgList>& args() const { return args_; }
  std::string_view tag() const override { return "Call"; }
  std::vector<Term> children() const override { return {args_}; }
  std::vector<term::Atom> atoms() const override {
    return {std::int64_t{viaThis_ ? 1 : 0}, name_};
  }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Call>(viaThis_, name_, term::slot<ArgList>(cs[0], 0));
  }

 private:
  bool viaThis_;
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

class Not final : public Expr {
 public:
  explicit Not(ExprPtr operand) : operand_(std::move(operand)) {}
  const ExprPtr& operand() const { return operand_; }
  std::string_view tag() const override { return "Not"; }
  std::vector<Term> children() const override { return {operand_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Not>(term::slot<Expr>(cs[0], 0));
  }

 private:
  ExprPtr operand_;
};

// --- statements ------------------------------------------------------------

class Block final : public term::ListNode<Block, Stmt, Stmt> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "Block"; }
};

/// `etype name (= init)?;`, only legal directly inside a block.
class LocalDecl final : public Stmt {
 public:
  LocalDecl(Type type, std::string name, ExprPtr init = nullptr)
      : type_(type), name_(std::move(name)), init_(std::move(init)) {}
  Type type() const { return type_; }
  const std::string& name() const { return name_; }
  const ExprPtr& init() const { return init_; }
  std::string_view tag() const override { return "LocalDecl"; }
  std::vector<Term> children() const override {
    return init_ ? std::vector<Term>{init_} : std::vector<Term>{};
  }
  std::vector<term::Atom> atoms() const override {
    return {std::string(to_string(type_)), name_};
  }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<LocalDecl>(type_, name_, cs.empty() ? nullptr : term::slot<Expr>(cs[0], 0));
  }

 private:
  Type type_;
  std::string name_;
  ExprPtr init_;
};

class Assign final : public Stmt {
 public:
  Assign(std::string target, ExprPtr value) : target_(std::move(target)), value_(std::move(value)) {}
  const std::string& target() const { return target_; }
  const ExprPtr& value() const { return value_; }
  std::string_view tag() const override { return "Assign"; }
  std::vector<Term> children() const override { return {value_}; }
  std::vector<term::Atom> atoms() const override { return {target_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Assign>(target_, term::slot<Expr>(cs[0], 0));
  }

 private:
  std::string target_;
  ExprPtr value_;
};

class If final : public Stmt {
 public:
  If(ExprPtr cond, StmtPtr then, StmtPtr otherwise = nullptr)
      : cond_(std::move(cond)), then_(std::move(then)), else_(std::move(otherwise)) {}
  const ExprPtr& cond() const { return cond_; }
  const StmtPtr& then() const { return then_; }
  const StmtPtr& otherwise() const { return else_; }
  std::string_view tag() const override { return "If"; }
  std::vector<Term> children() const override {
    if (else_) return {cond_, then_, else_};
    return {cond_, then_};
  }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<If>(term::slot<Expr>(cs[0], 0), term::slot<Stmt>(cs[1], 1),
                                cs.size() > 2 ? term::slot<Stmt>(cs[2], 2) : nullptr);
  }

 private:
  ExprPtr cond_;
  StmtPtr then_;
  StmtPtr else_;
};

class While final : public Stmt {
 public:
  While(ExprPtr cond, StmtPtr body) : cond_(std::move(cond)), body_(std::move(body)) {}
  const ExprPtr& cond() const { return cond_; }
  const StmtPtr& body() const { return body_; }
  std::string_view tag() const override { return "While"; }
  std::vector<Term> children() const override { return {cond_, body_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<While>(term::slot<Expr>(cs[0], 0), term::slot<Stmt>(cs[1], 1));
  }

 private:
  ExprPtr cond_;
  StmtPtr body_;
};

class Return final : public Stmt {
 public:
  explicit Return(ExprPtr value = nullptr) : value_(std::move(value)) {}
  const ExprPtr& value() const { return value_; }
  std::string_view tag() const override { return "Return"; }
  std::vector<Term> children() const override {
    return value_ ? std::vector<Term>{value_} : std::vector<Term>{};
  }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Return>(cs.empty() ? nullptr : term::slot<Expr>(cs[0], 0));
  }

 private:
  ExprPtr value_;
};

class CallStmt final : public Stmt {
 public:
  explicit CallStmt(std::shared_ptr<const Call> call) : call_(std::move(call)) {}
  const std::shared_ptr<const Call>& call() const { return call_; }
  std::string_view tag() const override { return "CallStmt"; }
  std::vector<Term> children() const override { return {call_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<CallStmt>(term::slot<Call>(cs[0], 0));
  }

 private:
  std::shared_ptr<const Call> call_;
};

class StatementFocus final : public Stmt {
 public:
  explicit StatementFocus(StmtPtr focused) : focused_(std::move(focused)) {}
  const StmtPtr& focused() const { return focused_; }
  std::string_view tag() const override { return "StatementFocus"; }
  std::vector<Term> children() const override { return {focused_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<StatementFocus>(term::slot<Stmt>(cs[0], 0));
  }

 private:
  StmtPtr focused_;
};

// --- declarations ----------------------------------------------------------

class Param final : public term::SortBase<sorts::kParam> {
 public:
  Param(Type type, std::string name) : type_(type), name_(std::move(name)) {}
  Type type() const { return type_; }
  const std::string& name() const { return name_; }
  std::string_view tag() const override { return "Param"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {std::string(to_string(type_)), name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<Param>(type_, name_);
  }

 private:
  Type type_;
  std::string name_;
};

class ParamList final : public term::ListNode<ParamList, term::SortBase<sorts::kParamList>, Param> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "ParamList"; }
};

class Method final : public term::SortBase<sorts::kMethod> {
 public:
  Method(Type result, std::string name, std::shared_ptr<const ParamList> params, StmtPtr body)
      : result_(result), name_(std::move(name)), params_(std::move(params)), body_(std::move(body)) {}
  Type result() const { return result_; }
  const std::string& name() const { return name_; }
  const std::shared_ptr<const ParamList>& params() const { return params_; }
  const StmtPtr& body() const { return body_; }
  std::string_view tag() const override { return "Method"; }
  std::vector<Term> children() const override { return {params_, body_}; }
  std::vector<term::Atom> atoms() const override { return {std::string(to_string(result_)), name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Method>(result_, name_, term::slot<ParamList>(cs[0], 0),
                                    term::slot<Stmt>(cs[1], 1));
  }

 private:
  Type result_;
  std::string name_;
  std::shared_ptr<const ParamList> params_;
  StmtPtr body_;
};

class MethodList final : public term::ListNode<MethodList, MethodListNode, Method> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "MethodList"; }
};

class MethodDeclarationFocus final : public MethodListNode {
 public:
  explicit MethodDeclarationFocus(std::shared_ptr<const MethodListNode> focused)
      : focused_(std::move(focused)) {}
  const std::shared_ptr<const MethodListNode>& focused() const { return focused_; }
  std::string_view tag() const override { return "MethodDeclarationFocus"; }
  std::vector<Term> children() const override { return {focused_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<MethodDeclarationFocus>(term::slot<MethodListNode>(cs[0], 0));
  }

 private:
  std::shared_ptr<const MethodListNode> focused_;
};

class Field final : public term::SortBase<sorts::kField> {
 public:
  Field(Type type, std::string name) : type_(type), name_(std::move(name)) {}
  Type type() const { return type_; }
  const std::string& name() const { return name_; }
  std::string_view tag() const override { return "Field"; }
  std::vector<Term> children() const override { return {}; }
  std::vector<term::Atom> atoms() const override { return {std::string(to_string(type_)), name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term>) const override {
    return std::make_shared<Field>(type_, name_);
  }

 private:
  Type type_;
  std::string name_;
};

class FieldList final : public term::ListNode<FieldList, term::SortBase<sorts::kFieldList>, Field> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "FieldList"; }
};

class Class final : public term::SortBase<sorts::kClass> {
 public:
  Class(std::string name, std::shared_ptr<const FieldList> fields,
        std::shared_ptr<const MethodListNode> methods)
      : name_(std::move(name)), fields_(std::move(fields)), methods_(std::move(methods)) {}
  const std::string& name() const { return name_; }
  const std::shared_ptr<const FieldList>& fields() const { return fields_; }
  const std::shared_ptr<const MethodListNode>& methods() const { return methods_; }
  std::string_view tag() const override { return "Class"; }
  std::vector<Term> children() const override { return {fields_, methods_}; }
  std::vector<term::Atom> atoms() const override { return {name_}; }

 protected:
  std::shared_ptr<term::Node> remake(std::vector<Term> cs) const override {
    return std::make_shared<Class>(name_, term::slot<FieldList>(cs[0], 0),
                                   term::slot<MethodListNode>(cs[1], 1));
  }

 private:
  std::string name_;
  std::shared_ptr<const FieldList> fields_;
  std::shared_ptr<const MethodListNode> methods_;
};

class Program final : public term::ListNode<Program, term::SortBase<sorts::kProgram>, Class> {
 public:
  using ListNode::ListNode;
  std::string_view tag() const override { return "Program"; }
};

using ProgramPtr = std::shared_ptr<const Program>;

}  // namespace genref::joos
