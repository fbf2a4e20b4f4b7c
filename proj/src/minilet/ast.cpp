#include "genref/minilet/ast.hpp"

namespace genref::minilet {

std::string_view to_string(BinOp op) { return op == BinOp::Add ? "+" : "*"; }

int precedence(BinOp op) { return op == BinOp::Add ? 1 : 2; }

}  // namespace genref::minilet
