#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smeforge/depgraph.hpp"
#include "smeforge/network.hpp"
#include "smeforge/sim/driver.hpp"
#include "smeforge/sim/interpreter.hpp"
#include "smeforge/sim/sim_error.hpp"
#include "smeforge/trace.hpp"

namespace smeforge::sim {

struct SimConfig {
  std::optional<uint64_t> max_cycles;
  bool stop_when_drivers_done = false;
  bool record_trace = true;
  bool strict_undefined_read = true;
  bool record_schedule = false;
};

struct ScheduleEntry {
  ProcessId process;
  int wave;
};

struct SimReport {
  uint64_t cycles_run = 0;
  Trace trace;
  std::optional<SimError> error;
  std::vector<std::string> warnings;
  std::vector<std::vector<ScheduleEntry>> schedule;  // per cycle, trigger order
  uint64_t total_triggers = 0;
  bool drivers_done = false;

  bool ok() const { return !error.has_value(); }
};

class Simulation;

// Handle passed to host driver routines. Reads and writes are checked
// against the driver process's declared buses.
class DriverCtx {
 public:
  uint64_t cycle() const;
  ClockTick tick() const { return {}; }
  void write(BusId bus, const std::string& field, Value v);
  Value read(BusId bus, const std::string& field) const;

 private:
  friend class Simulation;
  DriverCtx(Simulation* sim, ProcessId pid) : sim_(sim), pid_(pid) {}
  Simulation* sim_;
  ProcessId pid_;
};

using DriverFactory = std::function<Driver(DriverCtx&)>;

// Executes a validated network cycle by cycle:
//   1. propagate the clocked buses
//   2. the clocked processes become the active set
//   3. trigger the active set
//   4. propagate unclocked buses out of the triggered processes
//   5. processes whose input edges have all propagated become the new active set
//   6. repeat 3-5 until every process has triggered
//   7. record the trace row and evaluate the stop condition
class Simulation {
 public:
  Simulation(const Network& net, SimConfig cfg) : net_(net), cfg_(std::move(cfg)) {
    if (!cfg_.max_cycles && !cfg_.stop_when_drivers_done) {
      throw BuildError("simulation config enables no stop condition");
    }
    ValidationReport report = net_.validate();
    if (!report.ok()) {
      throw BuildError("network failed validation: " + report.errors.front().message);
    }
    DepGraph graph = build_dependency_graph(net_);
    edges_ = graph.edges;
    indegree_.assign(net_.process_count(), 0);
    for (const auto& e : edges_) indegree_[e.reader]++;

    for (ProcessId p = 0; p < static_cast<ProcessId>(net_.process_count()); ++p) {
      compiled_.push_back(compile_process(net_, p));
      if (net_.process(p).clocked) roots_.push_back(p);
    }
    stores_.resize(net_.process_count());
    for (size_t p = 0; p < compiled_.size(); ++p) reset_store(compiled_[p], stores_[p]);

    // unclocked out-buses per process, for step 4
    out_buses_.resize(net_.process_count());
    for (BusId b = 0; b < static_cast<BusId>(net_.bus_count()); ++b) {
      const BusInstance& bus = net_.bus(b);
      if (bus.clocked()) continue;
      std::set<ProcessId> writers;
      for (const auto& slot : bus.slots) {
        if (slot.writer) writers.insert(*slot.writer);
      }
      for (ProcessId w : writers) out_buses_[w].push_back(b);
    }
  }

  void attach_driver(ProcessId pid, DriverFactory factory) {
    if (pid < 0 || pid >= static_cast<ProcessId>(net_.process_count())) {
      throw BuildError("driver attached to unknown process id");
    }
    if (!net_.process(pid).host_driven) {
      throw BuildError("process '" + net_.process(pid).name + "' is not host-driven");
    }
    factories_[pid] = std::move(factory);
  }

  SimReport run(bool parallel = false) {
    for (ProcessId p = 0; p < static_cast<ProcessId>(net_.process_count()); ++p) {
      if (net_.process(p).host_driven && !factories_.count(p)) {
        throw BuildError("host-driven process '" + net_.process(p).name + "' has no driver");
      }
    }
    SimReport report;
    report.trace = Trace::for_network(net_);

    contexts_.clear();
    drivers_.clear();
    for (auto& [pid, factory] : factories_) {
      contexts_.emplace_back(new DriverCtx(this, pid));
      drivers_.emplace_back(pid, factory(*contexts_.back()));
    }

    env_.net = &net_;
    env_.strict_undefined_read = cfg_.strict_undefined_read;
    env_.warnings = &report.warnings;
    env_.lenient_warned = &lenient_warned_;

    while (!stop_condition_met(report)) {
      env_.cycle = report.cycles_run;
      std::optional<SimError> err = run_cycle(report, parallel);
      if (err) {
        report.error = std::move(err);
        break;
      }
      if (cfg_.record_trace) record_cycle(net_, report.trace);
      report.cycles_run++;
    }
    report.drivers_done = all_drivers_done();
    return report;
  }

  const Network& network() const { return net_; }

 private:
  friend class DriverCtx;

  bool stop_condition_met(const SimReport& report) const {
    if (cfg_.max_cycles && report.cycles_run >= *cfg_.max_cycles) return true;
    if (cfg_.stop_when_drivers_done && all_drivers_done()) return true;
    return false;
  }

  bool all_drivers_done() const {
    for (const auto& [pid, driver] : drivers_) {
      if (!driver.done()) return false;
    }
    return true;
  }

  std::optional<SimError> run_cycle(SimReport& report, bool parallel) {
    const size_t n = net_.process_count();
    // step 1
    for (BusId b = 0; b < static_cast<BusId>(net_.bus_count()); ++b) {
      if (net_.bus(b).clocked()) propagate_bus(net_.bus_mut(b));
    }
    // step 2
    std::vector<bool> triggered(n, false);
    std::vector<int> pending = indegree_;
    std::vector<ProcessId> wave = roots_;
    std::vector<ScheduleEntry>* sched = nullptr;
    if (cfg_.record_schedule) {
      report.schedule.emplace_back();
      sched = &report.schedule.back();
    }

    int wave_idx = 0;
    size_t triggered_count = 0;
    while (!wave.empty()) {
      // step 3
      if (sched) {
        for (ProcessId p : wave) sched->push_back({p, wave_idx});
      }
      std::optional<SimError> err =
          parallel ? trigger_wave_parallel(wave) : trigger_wave_sequential(wave);
      if (err) return err;
      for (ProcessId p : wave) {
        triggered[p] = true;
        ++triggered_count;
        ++report.total_triggers;
      }
      // step 4
      std::set<BusId> to_propagate;
      for (ProcessId p : wave) {
        for (BusId b : out_buses_[p]) to_propagate.insert(b);
      }
      for (BusId b : to_propagate) propagate_bus(net_.bus_mut(b));
      for (const auto& e : edges_) {
        if (std::find(wave.begin(), wave.end(), e.writer) != wave.end()) {
          pending[e.reader]--;
        }
      }
      // step 5
      std::vector<ProcessId> next;
      for (ProcessId p = 0; p < static_cast<ProcessId>(n); ++p) {
        if (!triggered[p] && !net_.process(p).clocked && pending[p] == 0 &&
            std::find(wave.begin(), wave.end(), p) == wave.end()) {
          next.push_back(p);
        }
      }
      wave = std::move(next);
      ++wave_idx;
    }
    if (triggered_count != n) {
      for (ProcessId p = 0; p < static_cast<ProcessId>(n); ++p) {
        if (!triggered[p]) {
          return SimError{SimError::Kind::Deadlock, net_.process(p).name, "", "", env_.cycle,
                          "process never became ready; its input edges cannot all propagate"};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<SimError> trigger_wave_sequential(const std::vector<ProcessId>& wave) {
    for (ProcessId p : wave) {
      std::optional<SimError> err = trigger_one(p, env_);
      if (err) return err;
    }
    return std::nullopt;
  }

  // Processes in one wave have no dependency path between each other; those
  // that also share no bus instance may run concurrently. Processes touching
  // a shared bus are grouped and their group runs in registration order, so
  // the observable behavior is identical to the sequential scheduler.
  std::optional<SimError> trigger_wave_parallel(const std::vector<ProcessId>& wave) {
    if (wave.size() <= 1) return trigger_wave_sequential(wave);

    std::map<BusId, std::vector<size_t>> bus_touchers;
    for (size_t i = 0; i < wave.size(); ++i) {
      const ProcessDef& def = net_.process(wave[i]);
      for (BusId b : def.inputs) bus_touchers[b].push_back(i);
      for (BusId b : def.outputs) bus_touchers[b].push_back(i);
    }
    std::vector<size_t> parent(wave.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [bus, touchers] : bus_touchers) {
      for (size_t i = 1; i < touchers.size(); ++i) {
        parent[find(touchers[i])] = find(touchers[0]);
      }
    }
    std::map<size_t, std::vector<ProcessId>> groups;
    for (size_t i = 0; i < wave.size(); ++i) groups[find(i)].push_back(wave[i]);

    std::vector<std::future<std::optional<SimError>>> futures;
    for (auto& [root, members] : groups) {
      futures.push_back(std::async(std::launch::async, [this, members = members]() {
        ExecEnv env;
        env.net = &net_;
        env.strict_undefined_read = env_.strict_undefined_read;
        env.cycle = env_.cycle;
        env.warnings = nullptr;
        env.lenient_warned = nullptr;
        std::optional<SimError> first;
        for (ProcessId p : members) {
          std::optional<SimError> err = trigger_one(p, env);
          if (err) return err;
        }
        return first;
      }));
    }
    // deterministic error selection: the sequentially-first failing process
    std::optional<SimError> best;
    ProcessId best_pid = -1;
    size_t idx = 0;
    for (auto& [root, members] : groups) {
      std::optional<SimError> err = futures[idx++].get();
      if (err) {
        ProcessId pid = net_.find_process(err->process);
        if (!best || pid < best_pid) {
          best = err;
          best_pid = pid;
        }
      }
    }
    return best;
  }

  std::optional<SimError> trigger_one(ProcessId p, ExecEnv& env) {
    const ProcessDef& def = net_.process(p);
    try {
      if (def.host_driven) {
        for (auto& [pid, driver] : drivers_) {
          if (pid == p) {
            driver.resume();
            break;
          }
        }
      } else {
        trigger_process(compiled_[p], stores_[p], env);
      }
    } catch (const SimAbort& abort) {
      return abort.error;
    } catch (const std::exception& e) {
      return SimError{SimError::Kind::DriverError, def.name, "", "", env.cycle, e.what()};
    }
    return std::nullopt;
  }

  Network net_;  // private runtime copy; the caller's network stays untouched
  SimConfig cfg_;
  std::vector<DepGraph::Edge> edges_;
  std::vector<int> indegree_;
  std::vector<ProcessId> roots_;
  std::vector<CompiledProcess> compiled_;
  std::vector<VarStore> stores_;
  std::vector<std::vector<BusId>> out_buses_;
  std::map<ProcessId, DriverFactory> factories_;
  std::vector<std::unique_ptr<DriverCtx>> contexts_;
  std::vector<std::pair<ProcessId, Driver>> drivers_;
  ExecEnv env_;
  std::set<std::pair<int, int>> lenient_warned_;
};

inline uint64_t DriverCtx::cycle() const { return sim_->env_.cycle; }

inline void DriverCtx::write(BusId bus, const std::string& field, Value v) {
  if (bus < 0 || bus >= static_cast<BusId>(sim_->net_.bus_count())) {
    throw SimAbort{SimError{SimError::Kind::DriverError, sim_->net_.process(pid_).name, "", field,
                            sim_->env_.cycle, "write to unknown bus"}};
  }
  BusInstance& inst = sim_->net_.bus_mut(bus);
  int fi = inst.shape.field_index(field);
  if (fi < 0) {
    throw SimAbort{SimError{SimError::Kind::DriverError, sim_->net_.process(pid_).name, inst.name,
                            field, sim_->env_.cycle, "no such field"}};
  }
  if (!inst.slots[fi].writer || *inst.slots[fi].writer != pid_) {
    throw SimAbort{SimError{SimError::Kind::DriverError, sim_->net_.process(pid_).name, inst.name,
                            field, sim_->env_.cycle, "driver does not own this field"}};
  }
  const FieldSpec& spec = inst.shape.fields[fi];
  if (!v.type.same_scalar(spec.type)) {
    throw SimAbort{SimError{SimError::Kind::DriverError, sim_->net_.process(pid_).name, inst.name,
                            field, sim_->env_.cycle,
                            "value type " + v.type.to_string() + " does not match field type " +
                                spec.type.to_string()}};
  }
  inst.slots[fi].staged = v;
  inst.slots[fi].written = true;
}

inline Value DriverCtx::read(BusId bus, const std::string& field) const {
  const ProcessDef& def = sim_->net_.process(pid_);
  if (std::find(def.inputs.begin(), def.inputs.end(), bus) == def.inputs.end()) {
    throw SimAbort{SimError{SimError::Kind::DriverError, def.name, "", field, sim_->env_.cycle,
                            "read from a bus that is not a declared input"}};
  }
  const BusInstance& inst = sim_->net_.bus(bus);
  int fi = inst.shape.field_index(field);
  if (fi < 0) {
    throw SimAbort{SimError{SimError::Kind::DriverError, def.name, inst.name, field,
                            sim_->env_.cycle, "no such field"}};
  }
  const Value& v = inst.slots[fi].current;
  if (!v.defined && sim_->cfg_.strict_undefined_read) {
    throw SimAbort{SimError{SimError::Kind::UndefinedRead, def.name, inst.name, field,
                            sim_->env_.cycle, ""}};
  }
  if (!v.defined) return Value::zero(inst.shape.fields[fi].type);
  return v;
}

inline SimReport run_simulation(const Network& net, const SimConfig& cfg,
                                const std::map<ProcessId, DriverFactory>& drivers = {}) {
  Simulation sim(net, cfg);
  for (const auto& [pid, factory] : drivers) sim.attach_driver(pid, factory);
  return sim.run(false);
}

// Same contract as run_simulation; independent processes within a wave may
// execute concurrently, and the resulting trace is byte-identical.
inline SimReport run_parallel(const Network& net, const SimConfig& cfg,
                              const std::map<ProcessId, DriverFactory>& drivers = {}) {
  Simulation sim(net, cfg);
  for (const auto& [pid, factory] : drivers) sim.attach_driver(pid, factory);
  return sim.run(true);
}

}  // namespace smeforge::sim
