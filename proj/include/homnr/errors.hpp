#pragma once

#include <stdexcept>
#include <string>

namespace homnr {

// Malformed or inconsistent input: bad JSON, dimension mismatch, a cochain
// outside the subspace an operation requires. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical precondition that the caller asserted does not hold
// (unverified algebra, failed representation axioms). Maps to exit code 3.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations disagreed. Never expected; indicates a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homnr
