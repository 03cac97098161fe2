#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace edgestab {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t limit)
        : std::runtime_error("search budget of " + std::to_string(limit) + " steps exhausted")
    {
    }
};

/// Step counter guarding the exponential searches. One budget may be
/// threaded through nested calls; exhausting it throws BudgetExceeded.
class SearchBudget {
public:
    static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

    explicit SearchBudget(std::uint64_t max_steps = unlimited) : limit_(max_steps) {}

    void charge(std::uint64_t steps = 1)
    {
        used_ += steps;
        if (used_ > limit_)
            throw BudgetExceeded(limit_);
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace edgestab
