#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "smeforge/network.hpp"

namespace smeforge {

// Processes as nodes, unclocked buses as edges. An edge exists from a field
// writer to each unclocked reader of the bus: those are the dependencies that
// gate intra-cycle trigger order. Clocked processes take their inputs at the
// clock edge and are the scheduling roots, so no edge points into them.
struct DepGraph {
  struct Edge {
    ProcessId writer;
    ProcessId reader;
    BusId bus;
  };

  std::vector<ProcessId> nodes;  // registration order
  std::vector<Edge> edges;
  std::vector<ProcessId> roots;  // the clocked processes

  std::vector<Edge> in_edges(ProcessId p) const {
    std::vector<Edge> out;
    for (const Edge& e : edges) {
      if (e.reader == p) out.push_back(e);
    }
    return out;
  }

  bool has_edge(ProcessId w, ProcessId r) const {
    for (const Edge& e : edges) {
      if (e.writer == w && e.reader == r) return true;
    }
    return false;
  }

  // Wave index per process: roots are wave 0, an unclocked process sits one
  // wave after the latest of its writers. This is the trigger order used by
  // the simulation algorithm.
  std::vector<int> waves() const {
    std::vector<int> wave(nodes.size(), -1);
    for (ProcessId r : roots) wave[r] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t p = 0; p < nodes.size(); ++p) {
        if (wave[p] == 0) continue;
        int max_in = 0;
        bool all_known = true;
        for (const Edge& e : edges) {
          if (e.reader != static_cast<ProcessId>(p)) continue;
          if (wave[e.writer] < 0) {
            all_known = false;
            break;
          }
          max_in = std::max(max_in, wave[e.writer]);
        }
        if (all_known) {
          int w = max_in + 1;
          if (wave[p] != w) {
            wave[p] = w;
            changed = true;
          }
        }
      }
    }
    return wave;
  }

  // Registration-order topological sort (roots first, then by wave).
  std::vector<ProcessId> topological_order() const {
    std::vector<int> wave = waves();
    std::vector<ProcessId> order(nodes.begin(), nodes.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](ProcessId a, ProcessId b) { return wave[a] < wave[b]; });
    return order;
  }
};

inline DepGraph build_dependency_graph(const Network& net) {
  {
    ValidationReport report = net.validate();
    if (!report.ok()) {
      throw BuildError("cannot build dependency graph: " + report.errors.front().message);
    }
  }
  DepGraph g;
  for (ProcessId p = 0; p < static_cast<ProcessId>(net.process_count()); ++p) {
    g.nodes.push_back(p);
    if (net.process(p).clocked) g.roots.push_back(p);
  }
  for (BusId b = 0; b < static_cast<BusId>(net.bus_count()); ++b) {
    const BusInstance& bus = net.bus(b);
    if (bus.clocked()) continue;
    std::set<ProcessId> writers;
    for (const auto& slot : bus.slots) {
      if (slot.writer) writers.insert(*slot.writer);
    }
    for (ProcessId w : writers) {
      for (ProcessId r : bus.readers) {
        if (net.process(r).clocked) continue;
        bool dup = false;
        for (const auto& e : g.edges) {
          if (e.writer == w && e.reader == r && e.bus == b) {
            dup = true;
            break;
          }
        }
        if (!dup) g.edges.push_back({w, r, b});
      }
    }
  }
  return g;
}

}  // namespace smeforge
