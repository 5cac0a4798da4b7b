#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smeforge/bus.hpp"
#include "smeforge/ir.hpp"
#include "smeforge/process.hpp"
#include "smeforge/value.hpp"

namespace smeforge {

struct Issue {
  std::string message;
  std::vector<ProcessId> cycle;  // offending path for unclocked-cycle errors
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;
  bool ok() const { return errors.empty(); }
};

namespace detail {

// Writes performed by a statement body, as (bus local name, field name).
inline void collect_field_writes(const ir::Block& block,
                                 const std::map<std::string, ir::Block>& functions,
                                 std::set<std::pair<std::string, std::string>>& out) {
  for (const auto& s : block) {
    switch (s->node) {
      case ir::Stmt::Node::AssignField:
        out.insert({s->bus, s->field});
        break;
      case ir::Stmt::Node::If:
        collect_field_writes(s->then_block, functions, out);
        collect_field_writes(s->else_block, functions, out);
        break;
      case ir::Stmt::Node::For:
        collect_field_writes(s->then_block, functions, out);
        break;
      case ir::Stmt::Node::Call: {
        auto it = functions.find(s->callee);
        if (it != functions.end()) collect_field_writes(it->second, functions, out);
        break;
      }
      default:
        break;
    }
  }
}

}  // namespace detail

// The elaborated set of process and bus instances. Mutating operations keep
// the network structurally sound (single writer per field, resolvable
// bodies); whole-network checks live in validate_network.
class Network {
 public:
  explicit Network(std::string name = "network") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  BusId add_bus(BusInstance inst, std::string instance_name = "") {
    if (instance_name.empty()) instance_name = inst.shape.name;
    inst.name = unique_bus_name(instance_name);
    inst.id = static_cast<BusId>(buses_.size());
    buses_.push_back(std::move(inst));
    return buses_.back().id;
  }

  BusId add_bus(const BusShape& shape, std::string instance_name = "") {
    return add_bus(instantiate_bus(shape), std::move(instance_name));
  }

  // Registers a process: resolves and checks its body against the declared
  // buses and variables, claims field ownership, and records readers.
  ProcessId add_process(ProcessDef def) {
    for (const auto& p : processes_) {
      if (p.name == def.name) {
        throw BuildError("duplicate process name '" + def.name + "'");
      }
    }
    if (def.host_driven && !def.ignore) {
      throw BuildError("process '" + def.name + "': host-driven bodies require the ignore attribute");
    }
    if (def.host_driven && !def.body.empty()) {
      throw BuildError("process '" + def.name + "': host-driven processes cannot also carry a statement body");
    }
    for (BusId b : def.inputs) check_bus_id(b, def.name);
    for (BusId b : def.outputs) check_bus_id(b, def.name);
    for (BusId b : def.inputs) {
      if (std::find(def.outputs.begin(), def.outputs.end(), b) != def.outputs.end()) {
        throw BuildError("process '" + def.name + "' lists bus '" + buses_[b].name +
                         "' as both input and output");
      }
    }
    for (size_t i = 0; i < def.variables.size(); ++i) {
      const VarDecl& v = def.variables[i];
      if (!v.type.valid()) {
        throw BuildError("process '" + def.name + "': variable '" + v.name +
                         "' has invalid type " + v.type.to_string());
      }
      if (v.initial && !v.initial->type.same_scalar(v.type)) {
        throw BuildError("process '" + def.name + "': initial value of '" + v.name +
                         "' does not match " + v.type.to_string());
      }
      for (size_t j = 0; j < i; ++j) {
        if (def.variables[j].name == v.name) {
          throw BuildError("process '" + def.name + "': duplicate variable '" + v.name + "'");
        }
      }
    }

    ProcessId pid = static_cast<ProcessId>(processes_.size());

    if (!def.host_driven) {
      BodyChecker checker(*this, def);
      checker.check(def.body);
      for (const auto& [fname, fbody] : def.functions) {
        checker.enter_function(fname);
        checker.check(fbody);
        checker.leave_function();
      }
      // ownership per assigned field
      std::set<std::pair<std::string, std::string>> writes;
      detail::collect_field_writes(def.body, def.functions, writes);
      for (const auto& [bus_name, field] : writes) {
        BusInstance& bus = buses_[bus_id_by_name(bus_name, def)];
        int fi = bus.shape.field_index(field);
        claim_field(bus, fi, pid, def.name);
      }
    } else {
      // Host drivers do not expose their write set statically: they own every
      // field of their declared output buses.
      for (BusId b : def.outputs) {
        BusInstance& bus = buses_[b];
        for (size_t fi = 0; fi < bus.slots.size(); ++fi) {
          claim_field(bus, static_cast<int>(fi), pid, def.name);
        }
      }
    }

    for (BusId b : def.inputs) buses_[b].readers.insert(pid);
    processes_.push_back(std::move(def));
    return pid;
  }

  ValidationReport validate() const {
    ValidationReport report;
    find_unclocked_cycles(report);
    for (const auto& bus : buses_) {
      if (bus.readers.empty() && !bus.has_writer()) {
        report.warnings.push_back({"bus '" + bus.name + "' is a zombie instance: no readers and no writers", {}});
      }
    }
    for (const auto& p : processes_) {
      if (!p.clocked || p.host_driven) continue;
      for (BusId b : p.inputs) {
        const BusInstance& bus = buses_[b];
        for (const auto& f : bus.shape.fields) {
          if (!f.initial) {
            report.warnings.push_back(
                {"clocked process '" + p.name + "' reads '" + bus.name + "." + f.name +
                     "' which has no initial value; an unguarded read is a simulation error",
                 {}});
          }
        }
      }
    }
    for (const auto& p : processes_) {
      if (p.clocked || p.host_driven) continue;
      warn_unclocked_state(p, report);
    }
    for (const auto& p : processes_) {
      if (p.host_driven) continue;
      warn_array_read_after_write(p, report);
    }
    return report;
  }

  size_t process_count() const { return processes_.size(); }
  size_t bus_count() const { return buses_.size(); }
  const ProcessDef& process(ProcessId id) const { return processes_.at(id); }
  const BusInstance& bus(BusId id) const { return buses_.at(id); }
  BusInstance& bus_mut(BusId id) { return buses_.at(id); }
  const std::vector<ProcessDef>& processes() const { return processes_; }
  const std::vector<BusInstance>& buses() const { return buses_; }

  BusId find_bus(const std::string& instance_name) const {
    for (const auto& b : buses_) {
      if (b.name == instance_name) return b.id;
    }
    return -1;
  }

  ProcessId find_process(const std::string& name) const {
    for (size_t i = 0; i < processes_.size(); ++i) {
      if (processes_[i].name == name) return static_cast<ProcessId>(i);
    }
    return -1;
  }

  // Variables never reassigned after initialization; code generation turns
  // these into constants.
  bool is_constant_var(ProcessId pid, const std::string& var) const {
    const ProcessDef& p = processes_.at(pid);
    const VarDecl* decl = p.find_var(var);
    if (!decl || !decl->initial || decl->type.is_array()) return false;
    return !assigns_var(p.body, p.functions, var);
  }

 private:
  friend class BodyChecker;

  class BodyChecker {
   public:
    BodyChecker(const Network& net, const ProcessDef& def) : net_(net), def_(def) {
      for (BusId b : def.inputs) inputs_[net.buses_[b].name] = b;
      for (BusId b : def.outputs) outputs_[net.buses_[b].name] = b;
    }

    void enter_function(const std::string& name) {
      if (call_stack_.count(name)) fail("recursive local function '" + name + "'");
      call_stack_.insert(name);
    }
    void leave_function() {}

    void check(const ir::Block& block) {
      for (const auto& s : block) check_stmt(*s);
    }

   private:
    void fail(const std::string& msg) const {
      throw BuildError("process '" + def_.name + "': " + msg);
    }

    const FieldSpec& field_of(const std::map<std::string, BusId>& side, const std::string& bus,
                              const std::string& field, const char* role) const {
      auto it = side.find(bus);
      if (it == side.end()) fail("references bus '" + bus + "' which is not a declared " + role);
      const BusInstance& inst = net_.buses_[it->second];
      int fi = inst.shape.field_index(field);
      if (fi < 0) fail("bus '" + bus + "' has no field '" + field + "'");
      return inst.shape.fields[fi];
    }

    const VarDecl& var_of(const std::string& name) const {
      const VarDecl* v = def_.find_var(name);
      if (!v) fail("references undeclared variable '" + name + "'");
      return *v;
    }

    void check_stmt(const ir::Stmt& s) {
      switch (s.node) {
        case ir::Stmt::Node::AssignVar: {
          if (loop_vars_.count(s.var)) fail("loop variable '" + s.var + "' is read-only");
          const VarDecl& v = var_of(s.var);
          ValueType val_t = check_expr(*s.value);
          if (s.index) {
            if (!v.type.is_array()) fail("variable '" + s.var + "' is not an array");
            check_index(*s.index, *v.type.array_len, s.var);
            if (!val_t.same_scalar(v.type.element())) {
              fail("cannot assign " + val_t.to_string() + " to element of '" + s.var + "' (" +
                   v.type.element().to_string() + ")");
            }
          } else {
            if (v.type.is_array()) fail("array variable '" + s.var + "' needs an index");
            if (!val_t.same_scalar(v.type)) {
              fail("cannot assign " + val_t.to_string() + " to '" + s.var + "' (" +
                   v.type.to_string() + ")");
            }
          }
          break;
        }
        case ir::Stmt::Node::AssignField: {
          const FieldSpec& f = field_of(outputs_, s.bus, s.field, "output");
          ValueType val_t = check_expr(*s.value);
          if (!val_t.same_scalar(f.type)) {
            fail("cannot assign " + val_t.to_string() + " to field '" + s.bus + "." + s.field +
                 "' (" + f.type.to_string() + ")");
          }
          break;
        }
        case ir::Stmt::Node::If: {
          ValueType c = check_expr(*s.value);
          if (c.kind != Kind::Bool) fail("if condition must be bool, got " + c.to_string());
          check(s.then_block);
          check(s.else_block);
          break;
        }
        case ir::Stmt::Node::For: {
          if (s.from > s.to) fail("for loop has descending bounds");
          if (!s.loop_type.valid() || s.loop_type.is_array() || s.loop_type.kind == Kind::Bool) {
            fail("for loop variable '" + s.var + "' must have an integer type");
          }
          if (s.to > width_mask(s.loop_type.width)) {
            fail("for loop bound does not fit " + s.loop_type.to_string());
          }
          if (def_.find_var(s.var) || loop_vars_.count(s.var)) {
            fail("for loop variable '" + s.var + "' shadows an existing name");
          }
          loop_vars_[s.var] = {s.loop_type, s.to};
          check(s.then_block);
          loop_vars_.erase(s.var);
          break;
        }
        case ir::Stmt::Node::Call: {
          auto it = def_.functions.find(s.callee);
          if (it == def_.functions.end()) fail("call to undeclared function '" + s.callee + "'");
          enter_function(s.callee);
          check(it->second);
          call_stack_.erase(s.callee);
          break;
        }
        case ir::Stmt::Node::Nop:
        case ir::Stmt::Node::Trap:
          break;
      }
    }

    ValueType check_expr(const ir::Expr& e) {
      switch (e.node) {
        case ir::Expr::Node::Literal:
          if (!e.type.valid() || e.type.is_array()) fail("invalid literal type");
          return e.type;
        case ir::Expr::Node::ReadVar: {
          auto lv = loop_vars_.find(e.var);
          if (lv != loop_vars_.end()) {
            if (!e.type.same_scalar(lv->second.first)) {
              fail("loop variable '" + e.var + "' read at wrong type");
            }
            return lv->second.first;
          }
          const VarDecl& v = var_of(e.var);
          if (v.type.is_array()) fail("array variable '" + e.var + "' needs an index");
          if (!e.type.same_scalar(v.type)) fail("variable '" + e.var + "' read at wrong type");
          return v.type;
        }
        case ir::Expr::Node::ReadField: {
          const FieldSpec& f = field_of(inputs_, e.bus, e.field, "input");
          if (!e.type.same_scalar(f.type)) {
            fail("field '" + e.bus + "." + e.field + "' read at wrong type");
          }
          return f.type;
        }
        case ir::Expr::Node::Index: {
          const VarDecl& v = var_of(e.var);
          if (!v.type.is_array()) fail("variable '" + e.var + "' is not an array");
          check_index(*e.lhs, *v.type.array_len, e.var);
          return v.type.element();
        }
        case ir::Expr::Node::Unary: {
          ValueType t = check_expr(*e.lhs);
          if (e.un == ir::UnaryOp::Negate && t.kind == Kind::Bool) {
            fail("cannot negate a bool");
          }
          return t;
        }
        case ir::Expr::Node::Binary: {
          ValueType l = check_expr(*e.lhs);
          ValueType r = check_expr(*e.rhs);
          if (ir::is_logical(e.bin)) {
            if (l.kind != Kind::Bool || r.kind != Kind::Bool) {
              fail(std::string("operands of ") + ir::op_name(e.bin) + " must be bool");
            }
            return ValueType::boolean();
          }
          if (e.bin == ir::BinaryOp::Shl || e.bin == ir::BinaryOp::Shr) {
            if (l.kind == Kind::Bool) fail("cannot shift a bool");
            if (r.kind != Kind::Unsigned) fail("shift amount must be unsigned");
            return l;
          }
          if (!l.same_scalar(r)) {
            fail(std::string("operand types of ") + ir::op_name(e.bin) + " differ: " +
                 l.to_string() + " vs " + r.to_string());
          }
          if (ir::is_comparison(e.bin)) {
            if (l.kind == Kind::Bool && e.bin != ir::BinaryOp::Eq && e.bin != ir::BinaryOp::Ne) {
              fail("bools only support == and !=");
            }
            return ValueType::boolean();
          }
          if (l.kind == Kind::Bool) {
            fail(std::string("operator ") + ir::op_name(e.bin) + " is not defined for bool");
          }
          return l;
        }
        case ir::Expr::Node::Cast: {
          check_expr(*e.lhs);
          if (!e.type.valid() || e.type.is_array()) fail("invalid cast target");
          return e.type;
        }
      }
      fail("unknown expression node");
      return ValueType::unsigned_(1);
    }

    // Indices must be statically bounded. Rejects the provable violations
    // (literal indices and loop-variable ranges); anything else is
    // width-bounded and enforced by the interpreter's range check.
    void check_index(const ir::Expr& idx, uint32_t len, const std::string& array_name) {
      ValueType t = check_expr(idx);
      if (t.kind != Kind::Unsigned) fail("index into '" + array_name + "' must be unsigned");
      if (idx.node == ir::Expr::Node::Literal && idx.literal.bits >= len) {
        fail("index " + std::to_string(idx.literal.bits) + " out of range for '" + array_name +
             "' of length " + std::to_string(len));
      }
      if (idx.node == ir::Expr::Node::ReadVar) {
        auto lv = loop_vars_.find(idx.var);
        if (lv != loop_vars_.end() && lv->second.second > len) {
          fail("loop over [0.." + std::to_string(lv->second.second) + ") indexes '" + array_name +
               "' of length " + std::to_string(len));
        }
      }
    }

    const Network& net_;
    const ProcessDef& def_;
    std::map<std::string, BusId> inputs_, outputs_;
    std::map<std::string, std::pair<ValueType, uint64_t>> loop_vars_;  // type, exclusive bound
    std::set<std::string> call_stack_;
  };

  void check_bus_id(BusId b, const std::string& pname) const {
    if (b < 0 || b >= static_cast<BusId>(buses_.size())) {
      throw BuildError("process '" + pname + "' references a bus that is not in the network");
    }
  }

  BusId bus_id_by_name(const std::string& n, const ProcessDef& def) const {
    for (BusId b : def.outputs) {
      if (buses_[b].name == n) return b;
    }
    for (BusId b : def.inputs) {
      if (buses_[b].name == n) return b;
    }
    throw BuildError("process '" + def.name + "': unknown bus '" + n + "'");
  }

  void claim_field(BusInstance& bus, int fi, ProcessId pid, const std::string& pname) {
    auto& writer = bus.slots[fi].writer;
    if (writer && *writer != pid) {
      throw BuildError("double driver: field '" + bus.name + "." + bus.shape.fields[fi].name +
                       "' is already written by process '" + processes_[*writer].name +
                       "', cannot add writer '" + pname + "'");
    }
    writer = pid;
  }

  std::string unique_bus_name(const std::string& want) {
    std::string name = want;
    int suffix = 2;
    while (find_bus(name) >= 0) {
      name = want + std::to_string(suffix++);
    }
    return name;
  }

  // Cycle search over the subgraph that gates scheduling: unclocked buses
  // into unclocked readers. Every cycle in that graph consists of unclocked
  // processes only.
  void find_unclocked_cycles(ValidationReport& report) const {
    std::vector<std::vector<std::pair<ProcessId, BusId>>> adj(processes_.size());
    for (const auto& bus : buses_) {
      if (bus.clocked()) continue;
      std::set<ProcessId> writers;
      for (const auto& slot : bus.slots) {
        if (slot.writer) writers.insert(*slot.writer);
      }
      for (ProcessId w : writers) {
        for (ProcessId r : bus.readers) {
          if (!processes_[r].clocked) adj[w].push_back({r, bus.id});
        }
      }
    }
    // DFS with colors; report the first cycle reached from each root.
    std::vector<int> color(processes_.size(), 0);  // 0 white, 1 on stack, 2 done
    std::vector<ProcessId> stack;
    for (ProcessId start = 0; start < static_cast<ProcessId>(processes_.size()); ++start) {
      if (color[start] == 0) dfs_cycle(start, adj, color, stack, report);
    }
  }

  void dfs_cycle(ProcessId v, const std::vector<std::vector<std::pair<ProcessId, BusId>>>& adj,
                 std::vector<int>& color, std::vector<ProcessId>& stack,
                 ValidationReport& report) const {
    color[v] = 1;
    stack.push_back(v);
    for (auto [next, bus] : adj[v]) {
      if (color[next] == 1) {
        std::vector<ProcessId> cycle;
        auto it = std::find(stack.begin(), stack.end(), next);
        cycle.assign(it, stack.end());
        std::string path;
        for (ProcessId p : cycle) path += processes_[p].name + " -> ";
        path += processes_[next].name;
        report.errors.push_back(
            {"unclocked cycle: " + path + " (combinational loop, would short-circuit)", cycle});
      } else if (color[next] == 0) {
        dfs_cycle(next, adj, color, stack, report);
      }
    }
    stack.pop_back();
    color[v] = 2;
  }

  static bool assigns_var(const ir::Block& block, const std::map<std::string, ir::Block>& fns,
                          const std::string& var) {
    for (const auto& s : block) {
      switch (s->node) {
        case ir::Stmt::Node::AssignVar:
          if (s->var == var) return true;
          break;
        case ir::Stmt::Node::If:
          if (assigns_var(s->then_block, fns, var) || assigns_var(s->else_block, fns, var)) {
            return true;
          }
          break;
        case ir::Stmt::Node::For:
          if (assigns_var(s->then_block, fns, var)) return true;
          break;
        case ir::Stmt::Node::Call: {
          auto it = fns.find(s->callee);
          if (it != fns.end() && assigns_var(it->second, fns, var)) return true;
          break;
        }
        default:
          break;
      }
    }
    return false;
  }

  // Unclocked processes are combinational: a variable read before it is
  // definitely assigned within the trigger would be a latch in hardware.
  void warn_unclocked_state(const ProcessDef& p, ValidationReport& report) const {
    std::set<std::string> assigned;
    for (const auto& v : p.variables) {
      if (v.initial) assigned.insert(v.name);  // reset to initial every trigger
    }
    std::set<std::string> warned;
    scan_assigned_before_use(p, p.body, assigned, warned, report);
  }

  void scan_assigned_before_use(const ProcessDef& p, const ir::Block& block,
                                std::set<std::string>& assigned, std::set<std::string>& warned,
                                ValidationReport& report) const {
    for (const auto& s : block) {
      switch (s->node) {
        case ir::Stmt::Node::AssignVar:
          if (s->index) check_expr_uses(p, *s->index, assigned, warned, report);
          check_expr_uses(p, *s->value, assigned, warned, report);
          if (!s->index) assigned.insert(s->var);
          break;
        case ir::Stmt::Node::AssignField:
          check_expr_uses(p, *s->value, assigned, warned, report);
          break;
        case ir::Stmt::Node::If: {
          check_expr_uses(p, *s->value, assigned, warned, report);
          std::set<std::string> a = assigned, b = assigned;
          scan_assigned_before_use(p, s->then_block, a, warned, report);
          scan_assigned_before_use(p, s->else_block, b, warned, report);
          std::set<std::string> both;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(both, both.begin()));
          assigned = both;
          break;
        }
        case ir::Stmt::Node::For: {
          std::set<std::string> inner = assigned;
          inner.insert(s->var);
          scan_assigned_before_use(p, s->then_block, inner, warned, report);
          if (s->to > s->from) {
            inner.erase(s->var);
            assigned = inner;
          }
          break;
        }
        case ir::Stmt::Node::Call: {
          auto it = p.functions.find(s->callee);
          if (it != p.functions.end()) {
            scan_assigned_before_use(p, it->second, assigned, warned, report);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  void check_expr_uses(const ProcessDef& p, const ir::Expr& e, const std::set<std::string>& assigned,
                       std::set<std::string>& warned, ValidationReport& report) const {
    if (e.node == ir::Expr::Node::ReadVar) {
      if (p.find_var(e.var) && !assigned.count(e.var) && !warned.count(e.var)) {
        warned.insert(e.var);
        report.warnings.push_back(
            {"unclocked process '" + p.name + "' may read variable '" + e.var +
                 "' before assigning it; in hardware this would be a latch",
             {}});
      }
    }
    if (e.node == ir::Expr::Node::Index && p.find_var(e.var)) {
      // whole-array state carried across triggers is equally latch-like
      if (!warned.count(e.var)) {
        const VarDecl* v = p.find_var(e.var);
        if (v && !v->initial) {
          warned.insert(e.var);
          report.warnings.push_back(
              {"unclocked process '" + p.name + "' reads array '" + e.var +
                   "' which has no per-trigger initialization",
               {}});
        }
      }
    }
    if (e.lhs) check_expr_uses(p, *e.lhs, assigned, warned, report);
    if (e.rhs) check_expr_uses(p, *e.rhs, assigned, warned, report);
  }

  // Arrays are emitted as VHDL signals (block-RAM template); a read after a
  // write in the same trigger observes the old value there but the new value
  // in the interpreter.
  void warn_array_read_after_write(const ProcessDef& p, ValidationReport& report) const {
    std::set<std::string> written;
    std::set<std::string> warned;
    scan_array_order(p, p.body, written, warned, report);
  }

  void scan_array_order(const ProcessDef& p, const ir::Block& block, std::set<std::string>& written,
                        std::set<std::string>& warned, ValidationReport& report) const {
    for (const auto& s : block) {
      switch (s->node) {
        case ir::Stmt::Node::AssignVar:
          if (s->index) check_array_reads(p, *s->index, written, warned, report);
          check_array_reads(p, *s->value, written, warned, report);
          if (s->index) written.insert(s->var);
          break;
        case ir::Stmt::Node::AssignField:
          check_array_reads(p, *s->value, written, warned, report);
          break;
        case ir::Stmt::Node::If:
          check_array_reads(p, *s->value, written, warned, report);
          scan_array_order(p, s->then_block, written, warned, report);
          scan_array_order(p, s->else_block, written, warned, report);
          break;
        case ir::Stmt::Node::For:
          scan_array_order(p, s->then_block, written, warned, report);
          break;
        case ir::Stmt::Node::Call: {
          auto it = p.functions.find(s->callee);
          if (it != p.functions.end()) scan_array_order(p, it->second, written, warned, report);
          break;
        }
        default:
          break;
      }
    }
  }

  void check_array_reads(const ProcessDef& p, const ir::Expr& e, const std::set<std::string>& written,
                         std::set<std::string>& warned, ValidationReport& report) const {
    if (e.node == ir::Expr::Node::Index && written.count(e.var) && !warned.count(e.var)) {
      warned.insert(e.var);
      report.warnings.push_back(
          {"process '" + p.name + "' reads array '" + e.var +
               "' after writing it in the same trigger; generated hardware observes the old value",
           {}});
    }
    if (e.lhs) check_array_reads(p, *e.lhs, written, warned, report);
    if (e.rhs) check_array_reads(p, *e.rhs, written, warned, report);
  }

  std::string name_;
  std::vector<ProcessDef> processes_;
  std::vector<BusInstance> buses_;
};

inline ValidationReport validate_network(const Network& net) { return net.validate(); }

}  // namespace smeforge
