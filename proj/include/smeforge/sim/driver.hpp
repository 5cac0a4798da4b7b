#pragma once

#include <coroutine>
#include <exception>
#include <utility>

namespace smeforge::sim {

// A host-driven simulation process body. The routine runs once per clock
// cycle between co_awaits: each `co_await ctx.tick()` suspends it until the
// scheduler triggers it again on the next cycle. When the coroutine returns,
// the driver is complete.
class Driver {
 public:
  struct promise_type {
    std::exception_ptr exception;

    Driver get_return_object() {
      return Driver(std::coroutine_handle<promise_type>::from_promise(*this));
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    void return_void() {}
    void unhandled_exception() { exception = std::current_exception(); }
  };

  Driver() = default;
  explicit Driver(std::coroutine_handle<promise_type> h) : handle_(h) {}
  Driver(Driver&& o) noexcept : handle_(std::exchange(o.handle_, {})) {}
  Driver& operator=(Driver&& o) noexcept {
    if (this != &o) {
      destroy();
      handle_ = std::exchange(o.handle_, {});
    }
    return *this;
  }
  Driver(const Driver&) = delete;
  Driver& operator=(const Driver&) = delete;
  ~Driver() { destroy(); }

  bool valid() const { return static_cast<bool>(handle_); }
  bool done() const { return !handle_ || handle_.done(); }

  // Runs the driver up to its next suspension point (or completion).
  // Exceptions thrown by the body are rethrown here.
  void resume() {
    if (done()) return;
    handle_.resume();
    if (handle_.done() && handle_.promise().exception) {
      std::rethrow_exception(handle_.promise().exception);
    }
  }

 private:
  void destroy() {
    if (handle_) {
      handle_.destroy();
      handle_ = {};
    }
  }

  std::coroutine_handle<promise_type> handle_;
};

// Awaitable returned by DriverCtx::tick(); plain suspension, the scheduler
// resumes the handle on the next cycle.
struct ClockTick {
  bool await_ready() const noexcept { return false; }
  void await_suspend(std::coroutine_handle<>) const noexcept {}
  void await_resume() const noexcept {}
};

}  // namespace smeforge::sim
