#pragma once

#include <cmath>
#include <span>

#include "pfq/errors.hpp"

namespace pfq {

/// Classifies arguments that sit too close to a non-positive integer, where
/// the gamma function has a pole. Evaluation near a pole is rejected rather
/// than attempted: callers skip and record such points.
struct PoleGuard {
    double tolerance = 1e-9;

    /// True when x is within tolerance of some integer k <= 0.
    bool near_nonpositive_integer(double x) const noexcept {
        if (x > tolerance) return false;
        double k = std::nearbyint(x);
        return k <= 0.0 && std::abs(x - k) <= tolerance;
    }

    void validate() const {
        if (!(tolerance > 0.0) || !(tolerance < 0.5))
            throw ConfigError("pole guard tolerance must lie in (0, 0.5)");
    }
};

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
    double log_abs;
    int sign; // exactly +1 or -1

    double value() const noexcept { return sign * std::exp(log_abs); }
};

/// True when x is exactly a non-positive integer (floating-point equality;
/// used for series termination, never for pole proximity).
inline bool is_nonpositive_integer(double x) noexcept {
    return x <= 0.0 && x == std::floor(x);
}

/// Signed log-gamma for finite real x away from poles. Negative arguments go
/// through the reflection formula with explicit sign tracking; the sign of
/// Gamma(x) for x < 0 alternates per unit interval.
SignedLogGamma log_gamma_signed(double x, const PoleGuard& guard = {});

/// prod Gamma(numerators) / prod Gamma(denominators), accumulated in log
/// space. A pole in a denominator gamma sends the whole ratio to exactly 0.
/// A numerator pole without a denominator pole raises PoleError; poles on
/// both sides raise IndeterminateError (0/0, no limit taken).
double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators,
                   const PoleGuard& guard = {});

/// Rising factorial alpha (alpha+1) ... (alpha+n-1) by direct product, so a
/// non-positive-integer alpha yields exact zeros. (alpha)_0 = 1.
double pochhammer(double alpha, long n);

/// Kahan-Babuska-Neumaier compensated accumulator.
class CompensatedSum {
public:
    void add(double v) noexcept {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

    void reset() noexcept { sum_ = comp_ = 0.0; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Compensated sum of a finite sequence; empty input sums to 0.
double compensated_sum(std::span<const double> terms) noexcept;

} // namespace pfq
