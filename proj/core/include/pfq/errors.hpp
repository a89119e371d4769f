#pragma once

#include <stdexcept>
#include <string>

namespace pfq {

/// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A gamma-function argument fell within the pole guard of a non-positive
/// integer where a finite value was required.
class PoleError : public Error {
public:
    PoleError(double argument, const std::string& where)
        : Error("gamma pole at argument " + std::to_string(argument) + " in " + where),
          argument_(argument) {}

    double argument() const noexcept { return argument_; }

private:
    double argument_;
};

/// 0/0 gamma quotient: both a numerator and a denominator argument sit on a
/// pole. The limit is not taken.
class IndeterminateError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A denominator Pochhammer factor reached zero before the series terminated.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Terminating-series evaluation requested with no non-positive-integer
/// numerator parameter.
class NotTerminatingError : public Error {
public:
    using Error::Error;
};

/// (i, j) outside the supported coefficient cells.
class UnsupportedPairError : public Error {
public:
    UnsupportedPairError(int i, int j)
        : Error("unsupported coefficient pair (i=" + std::to_string(i) +
                ", j=" + std::to_string(j) + ")"),
          i_(i), j_(j) {}

    int i() const noexcept { return i_; }
    int j() const noexcept { return j_; }

private:
    int i_, j_;
};

/// A printed rational coefficient of a special case has a vanishing denominator.
class CoefficientPoleError : public Error {
public:
    using Error::Error;
};

/// Malformed grid or control configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace pfq
