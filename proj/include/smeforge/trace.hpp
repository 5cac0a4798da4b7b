#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "smeforge/network.hpp"

namespace smeforge {

struct TraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TraceCell {
  uint64_t bits = 0;
  bool defined = false;

  std::string render() const { return defined ? std::to_string(bits) : "U"; }
  friend bool operator==(const TraceCell& a, const TraceCell& b) {
    if (!a.defined && !b.defined) return true;
    return a.defined == b.defined && a.bits == b.bits;
  }
};

// Per-cycle recording of every field on every bus. Column order is stable:
// buses in registration order, fields in declaration order. Row index is the
// cycle number; there is no separate cycle column.
struct Trace {
  std::vector<std::string> columns;  // "busName.fieldName"
  std::vector<ValueType> types;      // per column; empty when loaded from CSV
  std::vector<std::vector<TraceCell>> rows;

  int column_index(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
  }

  static Trace for_network(const Network& net) {
    Trace t;
    for (const auto& bus : net.buses()) {
      for (const auto& f : bus.shape.fields) {
        t.columns.push_back(bus.name + "." + f.name);
        t.types.push_back(f.type);
      }
    }
    return t;
  }
};

// Appends one row with every field's currently visible value. Undefined
// values render as U.
inline void record_cycle(const Network& net, Trace& trace) {
  std::vector<TraceCell> row;
  row.reserve(trace.columns.size());
  for (const auto& bus : net.buses()) {
    for (const auto& slot : bus.slots) {
      row.push_back({slot.current.bits, slot.current.defined});
    }
  }
  if (row.size() != trace.columns.size()) {
    throw TraceError("trace row arity does not match column count");
  }
  trace.rows.push_back(std::move(row));
}

inline void write_trace_csv(const Trace& trace, std::ostream& out) {
  for (size_t i = 0; i < trace.columns.size(); ++i) {
    if (i) out << ',';
    out << trace.columns[i];
  }
  out << '\n';
  for (const auto& row : trace.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i].render();
    }
    out << '\n';
  }
}

inline std::string write_trace_csv(const Trace& trace) {
  std::ostringstream ss;
  write_trace_csv(trace, ss);
  return ss.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

inline bool valid_column_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

inline Trace read_trace_csv(std::istream& in) {
  Trace t;
  std::string line;
  if (!std::getline(in, line)) {
    throw TraceError("malformed trace: missing header line");
  }
  for (const auto& name : detail::split_csv_line(line)) {
    if (!detail::valid_column_name(name)) {
      throw TraceError("malformed trace header: bad column name '" + name + "'");
    }
    t.columns.push_back(name);
  }
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    auto cells = detail::split_csv_line(line);
    if (cells.size() != t.columns.size()) {
      throw TraceError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(t.columns.size()) + " cells, got " +
                       std::to_string(cells.size()));
    }
    std::vector<TraceCell> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      if (cell == "U") {
        row.push_back({0, false});
        continue;
      }
      if (cell.empty()) {
        throw TraceError("line " + std::to_string(lineno) + ": empty cell");
      }
      uint64_t v = 0;
      for (char c : cell) {
        if (c < '0' || c > '9') {
          throw TraceError("line " + std::to_string(lineno) + ": non-numeric cell '" + cell + "'");
        }
        uint64_t digit = static_cast<uint64_t>(c - '0');
        if (v > (~uint64_t{0} - digit) / 10) {
          throw TraceError("line " + std::to_string(lineno) + ": value out of range '" + cell + "'");
        }
        v = v * 10 + digit;
      }
      row.push_back({v, true});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline Trace read_trace_csv(const std::string& text) {
  std::istringstream ss(text);
  return read_trace_csv(ss);
}

struct Mismatch {
  uint64_t cycle;
  std::string column;
  std::string expected;
  std::string actual;
};

// Cell-exact comparison; columns must agree. The result is empty exactly when
// the traces are identical.
inline std::vector<Mismatch> diff_traces(const Trace& a, const Trace& b) {
  if (a.columns != b.columns) {
    throw TraceError("trace column sets differ");
  }
  std::vector<Mismatch> out;
  size_t rows = std::max(a.rows.size(), b.rows.size());
  for (size_t r = 0; r < rows; ++r) {
    if (r >= a.rows.size() || r >= b.rows.size()) {
      for (size_t c = 0; c < a.columns.size(); ++c) {
        out.push_back({r, a.columns[c], r < a.rows.size() ? a.rows[r][c].render() : "<absent>",
                       r < b.rows.size() ? b.rows[r][c].render() : "<absent>"});
      }
      continue;
    }
    for (size_t c = 0; c < a.columns.size(); ++c) {
      if (!(a.rows[r][c] == b.rows[r][c])) {
        out.push_back({r, a.columns[c], a.rows[r][c].render(), b.rows[r][c].render()});
      }
    }
  }
  return out;
}

inline std::string first_divergence_summary(const std::vector<Mismatch>& mismatches) {
  if (mismatches.empty()) return "traces identical";
  const Mismatch& m = mismatches.front();
  return "first divergence at cycle " + std::to_string(m.cycle) + ", column " + m.column +
         ": expected " + m.expected + ", got " + m.actual + " (" +
         std::to_string(mismatches.size()) + " mismatching cells total)";
}

}  // namespace smeforge
