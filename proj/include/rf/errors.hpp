#ifndef RF_ERRORS_HPP
#define RF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rf {

// Thrown when an argument is outside an operation's domain (bad symbol,
// empty level set, length mismatch, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Thrown when a stated precondition of a lemma-backed operation fails.
// The message names the failing inequality.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a search or evaluation exceeds its configured budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a postcondition that must hold by theorem fails at runtime.
struct InternalContractError : std::logic_error {
    explicit InternalContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Thrown by certificate verification on any failed check.
struct VerifyError : std::runtime_error {
    explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rf

#endif
