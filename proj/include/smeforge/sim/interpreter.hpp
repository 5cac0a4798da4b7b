#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smeforge/ir.hpp"
#include "smeforge/network.hpp"
#include "smeforge/sim/sim_error.hpp"
#include "smeforge/value.hpp"

namespace smeforge::sim {

struct VarStore {
  std::vector<uint64_t> bits;
  std::vector<uint8_t> defined;
};

// Flattened, name-resolved form of an expression: a postorder op sequence
// evaluated on a small value stack. Built once per process before the run.
struct CompiledExpr {
  struct Op {
    enum class K : uint8_t { Lit, LoadVar, LoadElem, LoadField, Un, Bin, Cast };
    K k;
    ValueType type;      // Lit/Cast result; LoadElem element type
    uint64_t imm = 0;    // literal bits
    bool imm_defined = true;
    int a = -1;          // var slot / bus id / LoadElem base slot
    int b = -1;          // field index / LoadElem array length
    ir::UnaryOp un{};
    ir::BinaryOp bin{};
    std::string name;    // variable or field name, for diagnostics
  };
  std::vector<Op> ops;
};

struct CompiledStmt {
  enum class K : uint8_t { AssignVar, AssignElem, AssignField, If, For, Nop, Trap };
  K k;
  int slot = -1;       // variable/loop-variable slot
  uint32_t len = 0;    // array length for AssignElem
  int bus = -1;
  int field = -1;
  CompiledExpr value;  // assigned value / if condition
  CompiledExpr index;  // AssignElem index
  std::vector<CompiledStmt> then_block, else_block;
  uint64_t from = 0, to = 0;
  std::string message;   // trap text
  std::string var_name;  // diagnostics
};

struct CompiledProcess {
  ProcessId pid = -1;
  std::string name;
  bool clocked = true;
  bool host = false;
  struct Var {
    std::string name;
    ValueType type;
    std::optional<Value> initial;
    int base = 0;
    uint32_t len = 1;
  };
  std::vector<Var> vars;  // declared vars first, then loop slots
  int store_size = 0;
  std::vector<CompiledStmt> body;
};

namespace detail {

class ProcessCompiler {
 public:
  ProcessCompiler(const Network& net, ProcessId pid) : net_(net), def_(net.process(pid)) {
    out_.pid = pid;
    out_.name = def_.name;
    out_.clocked = def_.clocked;
    out_.host = def_.host_driven;
    for (const auto& v : def_.variables) {
      CompiledProcess::Var cv{v.name, v.type, v.initial, out_.store_size,
                              v.type.array_len.value_or(1)};
      slots_[v.name] = static_cast<int>(out_.vars.size());
      out_.vars.push_back(cv);
      out_.store_size += static_cast<int>(cv.len);
    }
    for (BusId b : def_.inputs) bus_ids_[net.bus(b).name] = b;
    for (BusId b : def_.outputs) bus_ids_[net.bus(b).name] = b;
  }

  CompiledProcess compile() {
    if (!def_.host_driven) out_.body = compile_block(def_.body);
    return std::move(out_);
  }

 private:
  std::vector<CompiledStmt> compile_block(const ir::Block& block) {
    std::vector<CompiledStmt> out;
    for (const auto& s : block) {
      switch (s->node) {
        case ir::Stmt::Node::Call: {
          // local functions are inlined; no call frames exist at runtime
          auto sub = compile_block(def_.functions.at(s->callee));
          for (auto& cs : sub) out.push_back(std::move(cs));
          break;
        }
        default:
          out.push_back(compile_stmt(*s));
          break;
      }
    }
    return out;
  }

  CompiledStmt compile_stmt(const ir::Stmt& s) {
    CompiledStmt cs;
    switch (s.node) {
      case ir::Stmt::Node::AssignVar: {
        const auto& var = out_.vars[slots_.at(s.var)];
        cs.var_name = s.var;
        cs.slot = var.base;
        cs.value = compile_expr(*s.value);
        if (s.index) {
          cs.k = CompiledStmt::K::AssignElem;
          cs.len = var.len;
          cs.index = compile_expr(*s.index);
        } else {
          cs.k = CompiledStmt::K::AssignVar;
        }
        break;
      }
      case ir::Stmt::Node::AssignField: {
        cs.k = CompiledStmt::K::AssignField;
        cs.bus = bus_ids_.at(s.bus);
        cs.field = net_.bus(cs.bus).shape.field_index(s.field);
        cs.value = compile_expr(*s.value);
        break;
      }
      case ir::Stmt::Node::If:
        cs.k = CompiledStmt::K::If;
        cs.value = compile_expr(*s.value);
        cs.then_block = compile_block(s.then_block);
        cs.else_block = compile_block(s.else_block);
        break;
      case ir::Stmt::Node::For: {
        cs.k = CompiledStmt::K::For;
        cs.from = s.from;
        cs.to = s.to;
        cs.var_name = s.var;
        int loop_slot = out_.store_size++;
        out_.vars.push_back({s.var, s.loop_type, std::nullopt, loop_slot, 1});
        int saved = -1;
        auto it = slots_.find(s.var);
        if (it != slots_.end()) saved = it->second;
        slots_[s.var] = static_cast<int>(out_.vars.size()) - 1;
        cs.slot = loop_slot;
        cs.then_block = compile_block(s.then_block);
        if (saved >= 0) slots_[s.var] = saved;
        else slots_.erase(s.var);
        break;
      }
      case ir::Stmt::Node::Nop:
        cs.k = CompiledStmt::K::Nop;
        break;
      case ir::Stmt::Node::Trap:
        cs.k = CompiledStmt::K::Trap;
        cs.message = s.message;
        break;
      case ir::Stmt::Node::Call:
        cs.k = CompiledStmt::K::Nop;  // handled in compile_block
        break;
    }
    return cs;
  }

  CompiledExpr compile_expr(const ir::Expr& e) {
    CompiledExpr out;
    emit(e, out);
    return out;
  }

  void emit(const ir::Expr& e, CompiledExpr& out) {
    using K = CompiledExpr::Op::K;
    CompiledExpr::Op op;
    switch (e.node) {
      case ir::Expr::Node::Literal:
        op.k = K::Lit;
        op.type = e.type;
        op.imm = e.literal.bits;
        op.imm_defined = e.literal.defined;
        break;
      case ir::Expr::Node::ReadVar: {
        const auto& var = out_.vars[slots_.at(e.var)];
        op.k = K::LoadVar;
        op.type = var.type.element();
        op.a = var.base;
        op.name = e.var;
        break;
      }
      case ir::Expr::Node::ReadField:
        op.k = K::LoadField;
        op.a = bus_ids_.at(e.bus);
        op.b = net_.bus(op.a).shape.field_index(e.field);
        op.type = net_.bus(op.a).shape.fields[op.b].type;
        break;
      case ir::Expr::Node::Index: {
        emit(*e.lhs, out);
        const auto& var = out_.vars[slots_.at(e.var)];
        op.k = K::LoadElem;
        op.type = var.type.element();
        op.a = var.base;
        op.b = static_cast<int>(var.len);
        op.name = e.var;
        break;
      }
      case ir::Expr::Node::Unary:
        emit(*e.lhs, out);
        op.k = K::Un;
        op.un = e.un;
        op.type = e.type;
        break;
      case ir::Expr::Node::Binary:
        emit(*e.lhs, out);
        emit(*e.rhs, out);
        op.k = K::Bin;
        op.bin = e.bin;
        op.type = e.type;
        break;
      case ir::Expr::Node::Cast:
        emit(*e.lhs, out);
        op.k = K::Cast;
        op.type = e.type;
        break;
    }
    out.ops.push_back(std::move(op));
  }

  const Network& net_;
  const ProcessDef& def_;
  CompiledProcess out_;
  std::map<std::string, int> slots_;    // name -> index into out_.vars
  std::map<std::string, BusId> bus_ids_;
};

}  // namespace detail

inline CompiledProcess compile_process(const Network& net, ProcessId pid) {
  return detail::ProcessCompiler(net, pid).compile();
}

// Mutable execution environment shared by all process triggers of one run.
struct ExecEnv {
  Network* net = nullptr;
  bool strict_undefined_read = true;
  uint64_t cycle = 0;
  std::vector<std::string>* warnings = nullptr;
  std::set<std::pair<int, int>>* lenient_warned = nullptr;
  std::vector<Value> stack;  // reused across evaluations
};

namespace detail {

[[noreturn]] inline void abort_sim(SimError::Kind kind, const ExecEnv& env,
                                   const std::string& process, std::string bus, std::string field,
                                   std::string message = "") {
  throw SimAbort{SimError{kind, process, std::move(bus), std::move(field), env.cycle,
                          std::move(message)}};
}

inline Value eval_binary(ir::BinaryOp op, const Value& l, const Value& r, ValueType result,
                         const ExecEnv& env, const CompiledProcess& p) {
  uint64_t mask = width_mask(l.type.width);
  bool sign = l.type.kind == Kind::Signed;
  uint64_t bits = 0;
  switch (op) {
    case ir::BinaryOp::Add: bits = (l.bits + r.bits) & mask; break;
    case ir::BinaryOp::Sub: bits = (l.bits - r.bits) & mask; break;
    case ir::BinaryOp::Mul: bits = (l.bits * r.bits) & mask; break;
    case ir::BinaryOp::Div:
      if (r.bits == 0) abort_sim(SimError::Kind::DivideByZero, env, p.name, "", "");
      bits = sign ? (static_cast<uint64_t>(l.as_signed() / r.as_signed()) & mask)
                  : (l.bits / r.bits);
      break;
    case ir::BinaryOp::Mod:
      if (r.bits == 0) abort_sim(SimError::Kind::DivideByZero, env, p.name, "", "");
      bits = sign ? (static_cast<uint64_t>(l.as_signed() % r.as_signed()) & mask)
                  : (l.bits % r.bits);
      break;
    case ir::BinaryOp::Shl:
      bits = r.bits >= 64 ? 0 : (l.bits << r.bits) & mask;
      break;
    case ir::BinaryOp::Shr:
      if (sign) {
        int64_t v = l.as_signed();
        bits = r.bits >= 63 ? static_cast<uint64_t>(v < 0 ? -1 : 0) & mask
                            : static_cast<uint64_t>(v >> r.bits) & mask;
      } else {
        bits = r.bits >= 64 ? 0 : l.bits >> r.bits;
      }
      break;
    case ir::BinaryOp::BitAnd: bits = l.bits & r.bits; break;
    case ir::BinaryOp::BitOr: bits = l.bits | r.bits; break;
    case ir::BinaryOp::BitXor: bits = l.bits ^ r.bits; break;
    case ir::BinaryOp::Eq: bits = l.bits == r.bits; break;
    case ir::BinaryOp::Ne: bits = l.bits != r.bits; break;
    case ir::BinaryOp::Lt: bits = sign ? l.as_signed() < r.as_signed() : l.bits < r.bits; break;
    case ir::BinaryOp::Le: bits = sign ? l.as_signed() <= r.as_signed() : l.bits <= r.bits; break;
    case ir::BinaryOp::Gt: bits = sign ? l.as_signed() > r.as_signed() : l.bits > r.bits; break;
    case ir::BinaryOp::Ge: bits = sign ? l.as_signed() >= r.as_signed() : l.bits >= r.bits; break;
    // hardware evaluates both operands; no short circuit
    case ir::BinaryOp::And: bits = (l.bits != 0) && (r.bits != 0); break;
    case ir::BinaryOp::Or: bits = (l.bits != 0) || (r.bits != 0); break;
  }
  Value v;
  v.type = result;
  v.bits = bits;
  v.defined = true;
  return v;
}

}  // namespace detail

// Evaluates a compiled expression. Reads of input fields return the bus's
// current slot, never the staged one.
inline Value eval_expression(const CompiledExpr& e, const CompiledProcess& p, VarStore& store,
                             ExecEnv& env) {
  auto& stack = env.stack;
  size_t base = stack.size();
  for (const auto& op : e.ops) {
    using K = CompiledExpr::Op::K;
    switch (op.k) {
      case K::Lit:
        stack.push_back(Value{op.type, op.imm, op.imm_defined});
        break;
      case K::LoadVar: {
        if (!store.defined[op.a]) {
          if (env.strict_undefined_read) {
            detail::abort_sim(SimError::Kind::UndefinedRead, env, p.name, "", op.name);
          }
          stack.push_back(Value::zero(op.type));
          break;
        }
        stack.push_back(Value{op.type, store.bits[op.a], true});
        break;
      }
      case K::LoadElem: {
        Value idx = stack.back();
        stack.pop_back();
        if (idx.bits >= static_cast<uint64_t>(op.b)) {
          detail::abort_sim(SimError::Kind::OutOfBounds, env, p.name, "", op.name,
                            "index " + std::to_string(idx.bits) + " >= length " +
                                std::to_string(op.b));
        }
        size_t slot = static_cast<size_t>(op.a) + idx.bits;
        if (!store.defined[slot]) {
          if (env.strict_undefined_read) {
            detail::abort_sim(SimError::Kind::UndefinedRead, env, p.name, "", op.name);
          }
          stack.push_back(Value::zero(op.type));
          break;
        }
        stack.push_back(Value{op.type, store.bits[slot], true});
        break;
      }
      case K::LoadField: {
        const FieldSlot& slot = env.net->bus(op.a).slots[op.b];
        if (!slot.current.defined) {
          const BusInstance& bus = env.net->bus(op.a);
          const std::string& fname = bus.shape.fields[op.b].name;
          if (env.strict_undefined_read) {
            detail::abort_sim(SimError::Kind::UndefinedRead, env, p.name, bus.name, fname);
          }
          if (env.lenient_warned && env.lenient_warned->insert({op.a, op.b}).second &&
              env.warnings) {
            env.warnings->push_back("lenient mode: undefined read of " + bus.name + "." + fname +
                                    " substituted with zero");
          }
          stack.push_back(Value::zero(op.type));
          break;
        }
        stack.push_back(slot.current);
        break;
      }
      case K::Un: {
        Value v = stack.back();
        stack.pop_back();
        uint64_t mask = width_mask(v.type.width);
        if (op.un == ir::UnaryOp::Not) {
          v.bits = v.type.kind == Kind::Bool ? (v.bits ^ 1) : (~v.bits & mask);
        } else {
          v.bits = (0 - v.bits) & mask;
        }
        stack.push_back(v);
        break;
      }
      case K::Bin: {
        Value r = stack.back();
        stack.pop_back();
        Value l = stack.back();
        stack.pop_back();
        stack.push_back(detail::eval_binary(op.bin, l, r, op.type, env, p));
        break;
      }
      case K::Cast: {
        Value v = stack.back();
        stack.pop_back();
        stack.push_back(cast_value(v, op.type));
        break;
      }
    }
  }
  Value result = stack.back();
  stack.resize(base);
  return result;
}

namespace detail {

inline void exec_block(const std::vector<CompiledStmt>& block, const CompiledProcess& p,
                       VarStore& store, ExecEnv& env);

inline void exec_stmt(const CompiledStmt& s, const CompiledProcess& p, VarStore& store,
                      ExecEnv& env) {
  switch (s.k) {
    case CompiledStmt::K::AssignVar: {
      Value v = eval_expression(s.value, p, store, env);
      store.bits[s.slot] = v.bits;
      store.defined[s.slot] = 1;
      break;
    }
    case CompiledStmt::K::AssignElem: {
      Value idx = eval_expression(s.index, p, store, env);
      if (idx.bits >= s.len) {
        abort_sim(SimError::Kind::OutOfBounds, env, p.name, "", s.var_name,
                  "index " + std::to_string(idx.bits) + " >= length " + std::to_string(s.len));
      }
      Value v = eval_expression(s.value, p, store, env);
      store.bits[s.slot + idx.bits] = v.bits;
      store.defined[s.slot + idx.bits] = 1;
      break;
    }
    case CompiledStmt::K::AssignField: {
      Value v = eval_expression(s.value, p, store, env);
      FieldSlot& slot = env.net->bus_mut(s.bus).slots[s.field];
      slot.staged = v;
      slot.written = true;
      break;
    }
    case CompiledStmt::K::If: {
      Value c = eval_expression(s.value, p, store, env);
      exec_block(c.bits != 0 ? s.then_block : s.else_block, p, store, env);
      break;
    }
    case CompiledStmt::K::For: {
      for (uint64_t i = s.from; i < s.to; ++i) {
        store.bits[s.slot] = i;
        store.defined[s.slot] = 1;
        exec_block(s.then_block, p, store, env);
      }
      break;
    }
    case CompiledStmt::K::Nop:
      break;
    case CompiledStmt::K::Trap:
      abort_sim(SimError::Kind::ComponentTrap, env, p.name, "", "", s.message);
      break;
  }
}

inline void exec_block(const std::vector<CompiledStmt>& block, const CompiledProcess& p,
                       VarStore& store, ExecEnv& env) {
  for (const auto& s : block) exec_stmt(s, p, store, env);
}

}  // namespace detail

inline void reset_store(const CompiledProcess& p, VarStore& store) {
  store.bits.assign(p.store_size, 0);
  store.defined.assign(p.store_size, 0);
  for (const auto& v : p.vars) {
    if (!v.initial) continue;
    for (uint32_t i = 0; i < v.len; ++i) {
      store.bits[v.base + i] = v.initial->bits;
      store.defined[v.base + i] = 1;
    }
  }
}

// Interprets one trigger of a statement-bodied process. Unclocked processes
// are combinational: their variables reset to initials at every trigger so
// no state can leak across cycles.
inline void trigger_process(const CompiledProcess& p, VarStore& store, ExecEnv& env) {
  if (!p.clocked) reset_store(p, store);
  detail::exec_block(p.body, p, store, env);
}

}  // namespace smeforge::sim
