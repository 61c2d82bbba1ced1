#ifndef CGC_BUDGET_HPP
#define CGC_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "cgc/errors.hpp"

namespace cgc {

/// Resource bound for the exact searches. Absent fields mean unbounded.
struct SearchBudget {
    std::optional<std::int64_t> max_nodes;
    std::optional<std::int64_t> max_millis;
};

/// Per-call consumption meter. tick() is called once per search-tree node;
/// the wall clock is only consulted every few thousand ticks.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget)
        : node_limit_(budget.max_nodes.value_or(-1)) {
        if (budget.max_nodes && *budget.max_nodes <= 0)
            throw domain_error("budget max_nodes must be positive");
        if (budget.max_millis) {
            if (*budget.max_millis <= 0)
                throw domain_error("budget max_millis must be positive");
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(*budget.max_millis);
            has_deadline_ = true;
        }
    }

    void tick(std::int64_t amount = 1) {
        nodes_ += amount;
        if (node_limit_ >= 0 && nodes_ > node_limit_)
            throw budget_error("search node budget exhausted");
        if (has_deadline_ && (nodes_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            throw budget_error("search time budget exhausted");
    }

    std::int64_t nodes() const { return nodes_; }

private:
    std::int64_t nodes_ = 0;
    std::int64_t node_limit_;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

} // namespace cgc

#endif // CGC_BUDGET_HPP
