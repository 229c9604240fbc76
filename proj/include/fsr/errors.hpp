#pragma once

#include <stdexcept>
#include <string>

namespace fsr {

// Malformed or mismatched input: unknown variable, bad exponent, length mismatch.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition of an operation does not hold (e.g. a is not
// contained in the radical of J).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A runtime consistency check failed. Always a bug.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An oracle refused to run because the instance exceeds its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fsr
