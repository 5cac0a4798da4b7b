#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smeforge/bus.hpp"
#include "smeforge/ir.hpp"
#include "smeforge/value.hpp"

namespace smeforge {

struct VarDecl {
  std::string name;
  ValueType type;
  std::optional<Value> initial;  // scalar initial; arrays are filled element-wise
};

// A process definition. Non-ignored processes carry a statement body and are
// translatable to hardware; ignored ("simulation") processes are either a
// statement body that is skipped by code generation or a host-driven stimulus
// routine supplied when the simulation starts.
struct ProcessDef {
  std::string name;
  bool clocked = true;
  bool ignore = false;
  bool host_driven = false;  // body supplied as a driver at simulation time
  std::vector<BusId> inputs;
  std::vector<BusId> outputs;
  std::vector<VarDecl> variables;
  ir::Block body;
  std::map<std::string, ir::Block> functions;

  const VarDecl* find_var(const std::string& n) const {
    for (const auto& v : variables) {
      if (v.name == n) return &v;
    }
    return nullptr;
  }
};

inline ProcessDef make_simulation_process(std::string name, std::vector<BusId> inputs,
                                          std::vector<BusId> outputs) {
  ProcessDef def;
  def.name = std::move(name);
  def.clocked = true;
  def.ignore = true;
  def.host_driven = true;
  def.inputs = std::move(inputs);
  def.outputs = std::move(outputs);
  return def;
}

}  // namespace smeforge
