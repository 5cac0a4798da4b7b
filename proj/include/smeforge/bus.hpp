#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "smeforge/value.hpp"

namespace smeforge {

using ProcessId = int;
using BusId = int;

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldSpec {
  std::string name;
  ValueType type;
  std::optional<Value> initial;
};

// A shape is the declared layout of a bus: named typed fields plus the
// propagation discipline. Any number of instances can be made from one shape.
struct BusShape {
  std::string name;
  std::vector<FieldSpec> fields;
  bool clocked = true;
  bool initialised = false;

  int field_index(const std::string& field) const {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (fields[i].name == field) return static_cast<int>(i);
    }
    return -1;
  }
};

inline BusShape declare_bus_shape(std::string name, std::vector<FieldSpec> fields,
                                  bool clocked, bool initialised) {
  if (fields.empty()) {
    throw BuildError("bus shape '" + name + "' must have at least one field");
  }
  for (size_t i = 0; i < fields.size(); ++i) {
    FieldSpec& f = fields[i];
    if (f.type.is_array()) {
      throw BuildError("bus field '" + name + "." + f.name + "' cannot carry an array");
    }
    if (!f.type.valid()) {
      throw BuildError("bus field '" + name + "." + f.name + "' has invalid type " +
                       f.type.to_string());
    }
    for (size_t j = 0; j < i; ++j) {
      if (fields[j].name == f.name) {
        throw BuildError("duplicate field name '" + f.name + "' in bus shape '" + name + "'");
      }
    }
    if (f.initial && !f.initial->type.same_scalar(f.type)) {
      throw BuildError("initial value of '" + name + "." + f.name + "' does not match type " +
                       f.type.to_string());
    }
    if (initialised && !f.initial) {
      f.initial = Value::zero(f.type);
    }
  }
  BusShape shape;
  shape.name = std::move(name);
  shape.fields = std::move(fields);
  shape.clocked = clocked;
  shape.initialised = initialised;
  return shape;
}

// One field's runtime storage. `current` is what readers observe; writes go
// to `staged` and move to `current` only when the bus propagates.
struct FieldSlot {
  Value current;
  Value staged;
  bool written = false;
  std::optional<ProcessId> writer;
};

struct BusInstance {
  BusId id = -1;
  std::string name;  // unique within a network; assigned at registration
  BusShape shape;
  std::vector<FieldSlot> slots;
  std::set<ProcessId> readers;

  bool clocked() const { return shape.clocked; }

  bool has_writer() const {
    for (const auto& s : slots) {
      if (s.writer) return true;
    }
    return false;
  }
};

inline BusInstance instantiate_bus(const BusShape& shape) {
  BusInstance inst;
  inst.shape = shape;
  inst.slots.resize(shape.fields.size());
  for (size_t i = 0; i < shape.fields.size(); ++i) {
    const FieldSpec& f = shape.fields[i];
    Value init = f.initial ? *f.initial : Value::undefined(f.type);
    inst.slots[i].current = init;
    inst.slots[i].staged = init;
    inst.slots[i].written = false;
  }
  return inst;
}

// Publishes staged writes: a field written since the last propagation gets
// its staged value as the new current; everything else is latched.
inline void propagate_bus(BusInstance& bus) {
  for (auto& slot : bus.slots) {
    if (slot.written) {
      slot.current = slot.staged;
      slot.written = false;
    }
  }
}

}  // namespace smeforge
