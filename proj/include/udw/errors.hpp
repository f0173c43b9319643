// errors.hpp — exception taxonomy shared by all udw modules

#pragma once

#include <stdexcept>
#include <string>

namespace udw {

// Bad arguments (negative k, non-positive widths, malformed regions, ...)
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation at a measure-zero singular point (k = 0, massless dispersion)
struct SingularPointError : DomainError {
    using DomainError::DomainError;
};

// A quantity that must be finite was certified divergent
struct DivergenceError : std::runtime_error {
    enum class End { IR, UV };
    DivergenceError(End e, double exponent, const std::string& msg)
        : std::runtime_error(msg), end(e), local_exponent(exponent) {}
    End end;
    double local_exponent;
};

// Quadrature or exponent fit could not certify either verdict
struct InconclusiveError : std::runtime_error {
    InconclusiveError(const std::string& msg, const std::string& diag = {})
        : std::runtime_error(diag.empty() ? msg : msg + " [" + diag + "]"),
          diagnostics(diag) {}
    std::string diagnostics;
};

// Scenario outside the exactly solvable regime (nonzero gap, non-vacuum initial field, ...)
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle state-space budget exceeded; carries the smallest violating dimension
struct BudgetError : std::runtime_error {
    BudgetError(std::size_t dim, const std::string& msg)
        : std::runtime_error(msg), violating_dimension(dim) {}
    std::size_t violating_dimension;
};

// Fock truncation found inadequate for a requested expectation value
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config/schema problems; message lists the offending keys
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace udw
