#pragma once

#include <stdexcept>

namespace aecc {

// Base class for all library errors. Subclasses distinguish contract
// violations by the caller (dimension/domain) from numerical failures
// (rank/solver) and resource refusals (budget).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands have incompatible sizes.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An argument is outside the operation's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A matrix does not have the rank the operation requires.
class RankError : public Error {
public:
    using Error::Error;
};

// Numerical breakdown inside a solver; never a silent wrong answer.
class SolverError : public Error {
public:
    using Error::Error;
};

// An enumeration would exceed its configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Inconsistent simulation or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// File could not be read, written, or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace aecc
