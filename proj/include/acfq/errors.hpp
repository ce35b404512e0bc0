#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acfq {

// Arithmetic between values of different coefficient domains.
struct DomainMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parse failure; positions are 1-based.
struct SyntaxError : std::runtime_error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

// A quantifier rebinding a name already in scope.
struct ShadowingError : SyntaxError {
    using SyntaxError::SyntaxError;
};

// A normal-form or case-split grew past the configured cap.
struct BudgetExceededError : std::runtime_error {
    std::size_t budget;
    explicit BudgetExceededError(std::size_t budget_, const std::string& what_ = "")
        : std::runtime_error("budget of " + std::to_string(budget_) + " exceeded" +
                             (what_.empty() ? "" : ": " + what_)),
          budget(budget_) {}
};

// A brute-force search field would exceed the configured size cap.
struct OracleTooLargeError : std::runtime_error {
    unsigned long long requested;
    unsigned long long cap;
    OracleTooLargeError(unsigned long long requested_, unsigned long long cap_)
        : std::runtime_error("oracle search field of " + std::to_string(requested_) +
                             " elements exceeds cap " + std::to_string(cap_)),
          requested(requested_),
          cap(cap_) {}
};

// Caller violated a documented precondition (e.g. free variables where a
// sentence is required).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace acfq
