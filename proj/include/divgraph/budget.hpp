#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divgraph {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts descriptor computations against a fixed limit.
class BudgetLedger {
 public:
  explicit BudgetLedger(std::size_t limit) : limit_(limit) {}

  std::size_t limit() const { return limit_; }
  std::size_t used() const { return used_; }
  std::size_t remaining() const { return limit_ - used_; }
  bool exhausted() const { return used_ >= limit_; }

  /// Throws BudgetExhausted when the limit is already reached.
  void charge() {
    if (used_ >= limit_) {
      throw BudgetExhausted("budget of " + std::to_string(limit_) + " descriptor computations exhausted");
    }
    ++used_;
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace divgraph
