#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liqdem {

using AgentId = int;
using IssueId = int;

// Everything semantic runs over explicit 2^m model enumeration, so the
// issue count is capped hard. Desk-scale verification only.
inline constexpr int kMaxIssues = 20;

// Default ceiling on exhaustively enumerated spaces (profiles, pairs of
// profiles, graph/profile products). Overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad JSON, unknown atom, bad trustee id).
struct InputError : Error {
    using Error::Error;
};

// Issue count exceeds the model-enumeration cap.
struct EnumerationLimitError : Error {
    using Error::Error;
};

// An exhaustive check would exceed its work budget.
struct BudgetError : Error {
    using Error::Error;
};

// Quota specification violating the acceptance/rejection constraint.
struct QuotaError : Error {
    using Error::Error;
};

namespace detail {

inline void check_budget(long double work, std::uint64_t budget, const char* what) {
    if (work > static_cast<long double>(budget))
        throw BudgetError(std::string(what) + ": work estimate exceeds budget " +
                          std::to_string(budget));
}

} // namespace detail

} // namespace liqdem
