#pragma once

#include <stdexcept>
#include <string>

namespace qmds {

/// A caller-supplied parameter violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dual-containment was queried for a nontrivial code whose lambda order r
/// does not divide q + 1; such codes can never contain their Hermitian dual.
class LambdaOrderError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A computation would exceed the exact-arithmetic or enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. These are proven facts, so a
/// failure always signals a bug rather than bad input.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qmds
