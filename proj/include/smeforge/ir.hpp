#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smeforge/value.hpp"

namespace smeforge::ir {

enum class UnaryOp : uint8_t { Not, Negate };

enum class BinaryOp : uint8_t {
  Add, Sub, Mul, Div, Mod,
  Shl, Shr,
  BitAnd, BitOr, BitXor,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or,
};

inline bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Eq: case BinaryOp::Ne:
    case BinaryOp::Lt: case BinaryOp::Le:
    case BinaryOp::Gt: case BinaryOp::Ge:
      return true;
    default:
      return false;
  }
}

inline bool is_logical(BinaryOp op) {
  return op == BinaryOp::And || op == BinaryOp::Or;
}

inline const char* op_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression tree. Nodes are immutable after construction and freely shared.
// `type` is the result type, filled in by the builder helpers below or by
// the frontend's type checker.
struct Expr {
  enum class Node : uint8_t { Literal, ReadVar, ReadField, Index, Unary, Binary, Cast };

  Node node;
  ValueType type;

  Value literal;                // Literal
  std::string var;              // ReadVar, Index (array base)
  std::string bus, field;       // ReadField (bus instance local name + field)
  UnaryOp un{};                 // Unary
  BinaryOp bin{};               // Binary
  ExprPtr lhs, rhs;             // Unary/Cast: lhs; Binary: both; Index: lhs = index expr
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using Block = std::vector<StmtPtr>;

struct Stmt {
  enum class Node : uint8_t { AssignVar, AssignField, If, For, Call, Nop, Trap };

  Node node;
  std::string var;     // AssignVar target; For loop variable
  ExprPtr index;       // optional array index for AssignVar
  std::string bus, field;  // AssignField target
  ExprPtr value;       // AssignVar/AssignField value; If condition
  Block then_block;    // If then; For body
  Block else_block;    // If else
  ValueType loop_type; // For loop variable type
  uint64_t from = 0, to = 0;  // For iterates over [from, to)
  std::string callee;  // Call
  std::string message; // Trap
};

// ── Expression builders ─────────────────────────────────────────────────────

inline ExprPtr lit(ValueType t, uint64_t raw) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::Literal;
  e->type = t.element();
  e->literal = Value::of(t, raw);
  return e;
}

inline ExprPtr lit_bool(bool b) { return lit(ValueType::boolean(), b ? 1 : 0); }

inline ExprPtr read_var(std::string name, ValueType t) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::ReadVar;
  e->type = t.element();
  e->var = std::move(name);
  return e;
}

inline ExprPtr read_field(std::string bus, std::string field, ValueType t) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::ReadField;
  e->type = t.element();
  e->bus = std::move(bus);
  e->field = std::move(field);
  return e;
}

inline ExprPtr index(std::string array_var, ExprPtr idx, ValueType element_type) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::Index;
  e->type = element_type.element();
  e->var = std::move(array_var);
  e->lhs = std::move(idx);
  return e;
}

inline ExprPtr unary(UnaryOp op, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::Unary;
  e->un = op;
  e->type = operand->type;
  e->lhs = std::move(operand);
  return e;
}

inline ExprPtr binary(BinaryOp op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::Binary;
  e->bin = op;
  e->type = (is_comparison(op) || is_logical(op)) ? ValueType::boolean() : l->type;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

inline ExprPtr cast(ValueType target, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->node = Expr::Node::Cast;
  e->type = target.element();
  e->lhs = std::move(operand);
  return e;
}

// ── Statement builders ──────────────────────────────────────────────────────

inline StmtPtr set_var(std::string name, ExprPtr value) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::AssignVar;
  s->var = std::move(name);
  s->value = std::move(value);
  return s;
}

inline StmtPtr set_elem(std::string array_var, ExprPtr idx, ExprPtr value) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::AssignVar;
  s->var = std::move(array_var);
  s->index = std::move(idx);
  s->value = std::move(value);
  return s;
}

inline StmtPtr set_field(std::string bus, std::string field, ExprPtr value) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::AssignField;
  s->bus = std::move(bus);
  s->field = std::move(field);
  s->value = std::move(value);
  return s;
}

inline StmtPtr if_(ExprPtr cond, Block then_block, Block else_block = {}) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::If;
  s->value = std::move(cond);
  s->then_block = std::move(then_block);
  s->else_block = std::move(else_block);
  return s;
}

inline StmtPtr for_(std::string var, ValueType var_type, uint64_t from, uint64_t to,
                    Block body) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::For;
  s->var = std::move(var);
  s->loop_type = var_type.element();
  s->from = from;
  s->to = to;
  s->then_block = std::move(body);
  return s;
}

inline StmtPtr call(std::string function) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::Call;
  s->callee = std::move(function);
  return s;
}

inline StmtPtr nop() {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::Nop;
  return s;
}

inline StmtPtr trap(std::string message) {
  auto s = std::make_shared<Stmt>();
  s->node = Stmt::Node::Trap;
  s->message = std::move(message);
  return s;
}

}  // namespace smeforge::ir
