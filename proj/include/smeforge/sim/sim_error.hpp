#pragma once

#include <cstdint>
#include <string>

namespace smeforge::sim {

struct SimError {
  enum class Kind {
    UndefinedRead,
    DivideByZero,
    OutOfBounds,
    ComponentTrap,
    Deadlock,
    DriverError,
  };

  Kind kind;
  std::string process;
  std::string bus;    // empty when the read was a variable
  std::string field;  // field or variable name
  uint64_t cycle = 0;
  std::string message;

  std::string describe() const {
    std::string what;
    switch (kind) {
      case Kind::UndefinedRead:
        what = "read of undefined value";
        break;
      case Kind::DivideByZero:
        what = "division by zero";
        break;
      case Kind::OutOfBounds:
        what = "index out of bounds";
        break;
      case Kind::ComponentTrap:
        what = "component trap";
        break;
      case Kind::Deadlock:
        what = "scheduler deadlock";
        break;
      case Kind::DriverError:
        what = "driver error";
        break;
    }
    std::string loc;
    if (!bus.empty()) loc = " on " + bus + (field.empty() ? "" : "." + field);
    else if (!field.empty()) loc = " of '" + field + "'";
    std::string s = what + loc + " in process '" + process + "' at cycle " + std::to_string(cycle);
    if (!message.empty()) s += ": " + message;
    return s;
  }
};

// Internal control-flow carrier; never escapes the public simulation API.
struct SimAbort {
  SimError error;
};

}  // namespace smeforge::sim
