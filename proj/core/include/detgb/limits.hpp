#pragma once

#include <chrono>
#include <cstdint>

#include "detgb/errors.hpp"

namespace detgb {

// Resource budget for Groebner-basis computations. Zero means "no limit".
struct ResourceLimits {
  std::uint64_t max_pairs = 0;
  double timeout_seconds = 0.0;
};

// Tracks consumption against a ResourceLimits budget across one computation.
class ResourceGuard {
 public:
  explicit ResourceGuard(const ResourceLimits& limits)
      : limits_(limits), start_(std::chrono::steady_clock::now()) {}

  void charge_pair() {
    ++pairs_;
    if (limits_.max_pairs != 0 && pairs_ > limits_.max_pairs) {
      throw ResourceLimitError(
          ResourceLimitError::Limit::pairs,
          "pair budget exhausted (" + std::to_string(limits_.max_pairs) + ")");
    }
    if (limits_.timeout_seconds > 0 && (pairs_ & 0x3f) == 0) check_time();
  }

  void check_time() const {
    if (limits_.timeout_seconds <= 0) return;
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    if (elapsed > limits_.timeout_seconds) {
      throw ResourceLimitError(ResourceLimitError::Limit::wall_time,
                               "wall-time budget exhausted");
    }
  }

  std::uint64_t pairs_charged() const noexcept { return pairs_; }

 private:
  ResourceLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t pairs_ = 0;
};

}  // namespace detgb
