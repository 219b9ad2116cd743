#pragma once

#include <cstdint>

#include "rotsys/errors.hpp"

namespace rotsys {

// Work cap for the exact exponential searches. Exhausting it raises
// BudgetExceeded; there is no silent truncation anywhere.
struct SearchBudget {
    std::uint64_t max_steps = 200'000'000;

    // Vertex-count guard; 0 means the operation's own default applies.
    int max_vertices = 0;
};

// Shared countdown helper.
class StepCounter {
  public:
    explicit StepCounter(std::uint64_t limit) : remaining_(limit) {}

    void tick(const char* what) {
        if (remaining_ == 0) throw BudgetExceeded(what);
        --remaining_;
    }

    std::uint64_t used(std::uint64_t initial) const { return initial - remaining_; }

  private:
    std::uint64_t remaining_;
};

}  // namespace rotsys
