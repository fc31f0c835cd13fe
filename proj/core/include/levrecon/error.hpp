#pragma once

#include <stdexcept>
#include <string>

namespace levrecon {

/// Raised when an operation is called outside the hypothesis it is defined for
/// (infeasible budgets, out-of-domain formula parameters, q < 4 decoding, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised on malformed input text (words, patterns, JSON documents).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levrecon
