#ifndef ABELMULT_BUDGET_HPP
#define ABELMULT_BUDGET_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

namespace abelmult {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Cooperative wall-clock cap. Long computations call check() between units
/// of work; an unset budget never fires.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;
    explicit Budget(std::chrono::duration<double> limit)
        : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(limit)) {}

    static Budget unlimited() { return Budget(); }

    bool limited() const { return deadline_.has_value(); }
    bool expired() const { return deadline_ && Clock::now() > *deadline_; }
    void check() const {
        if (expired()) throw BudgetExceeded();
    }

private:
    std::optional<Clock::time_point> deadline_;
};

}  // namespace abelmult

#endif
