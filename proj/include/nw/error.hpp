#pragma once

#include <stdexcept>
#include <string>

namespace nw {

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded search (primes in progressions, zero vectors) ran out of budget.
class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external input: unparsable polynomial, place or profile file.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nw
