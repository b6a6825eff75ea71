#pragma once

#include <stdexcept>
#include <string>

#include "qflab/integers.hpp"

namespace qflab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input; the message names the violated constraint.
struct ValidationError : Error {
    using Error::Error;
};

// A factorization search was asked to cross its configured norm budget.
struct BudgetExceededError : Error {
    Int reached_bound;
    BudgetExceededError(const std::string& msg, Int reached)
        : Error(msg), reached_bound(std::move(reached)) {}
};

// Boundary values are defined only over a half-factorial base ring; raised
// when a query is not covered by the supplied certificate.
struct UncertifiedDomainError : Error {
    using Error::Error;
};

// Internal consistency failure: a certified half-factorial ring produced an
// element with two factorization lengths. Firing is a refutation event.
struct AmbiguousLengthError : Error {
    using Error::Error;
};

struct NotComaximalError : Error {
    using Error::Error;
};

struct NonComaximalModuliError : Error {
    using Error::Error;
};

struct NotIntermediateError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qflab
