#pragma once

#include <atomic>
#include <chrono>
#include <optional>

namespace pmctw {

// Wall-clock deadline plus an external cancellation flag. Both optional;
// the flag may be set from another thread or a signal handler.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  explicit Budget(Clock::duration limit) : deadline_(Clock::now() + limit) {}

  void set_cancel_flag(const std::atomic<bool>* flag) { cancel_ = flag; }

  bool expired() const {
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) {
      return true;
    }
    return deadline_ && Clock::now() >= *deadline_;
  }

 private:
  std::optional<Clock::time_point> deadline_;
  const std::atomic<bool>* cancel_ = nullptr;
};

}  // namespace pmctw
