#include "pfq/scalar.hpp"

#include <cmath>
#include <numbers>

namespace pfq {

SignedLogGamma log_gamma_signed(double x, const PoleGuard& guard) {
    guard.validate();
    if (!std::isfinite(x))
        throw DomainError("log_gamma_signed: argument must be finite");
    if (guard.near_nonpositive_integer(x))
        throw PoleError(x, "log_gamma_signed");

    if (x > 0.0)
        return {std::lgamma(x), +1};

    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), with 1 - x > 1.
    // sin(pi x) is reduced as sin(pi (n + r)) = (-1)^n sin(pi r), |r| <= 1/2,
    // which keeps the sign exact and the magnitude accurate near the poles.
    double n = std::nearbyint(x);
    double r = x - n;
    double sin_r = std::sin(std::numbers::pi * r);
    int sign = sin_r >= 0.0 ? +1 : -1;
    if (std::fmod(n, 2.0) != 0.0) sign = -sign;
    double log_abs = std::log(std::numbers::pi) - std::log(std::abs(sin_r))
                     - std::lgamma(1.0 - x);
    return {log_abs, sign};
}

double gamma_ratio(std::span<const double> numerators,
                   std::span<const double> denominators,
                   const PoleGuard& guard) {
    guard.validate();
    const double* num_pole = nullptr;
    const double* den_pole = nullptr;
    for (const double& x : numerators)
        if (guard.near_nonpositive_integer(x)) { num_pole = &x; break; }
    for (const double& x : denominators)
        if (guard.near_nonpositive_integer(x)) { den_pole = &x; break; }

    if (num_pole && den_pole)
        throw IndeterminateError("gamma_ratio: 0/0 form, numerator pole at " +
                                 std::to_string(*num_pole) + " against denominator pole at " +
                                 std::to_string(*den_pole));
    if (num_pole)
        throw PoleError(*num_pole, "gamma_ratio numerator");
    if (den_pole)
        return 0.0;

    CompensatedSum log_sum;
    int sign = 1;
    for (double x : numerators) {
        SignedLogGamma g = log_gamma_signed(x, guard);
        log_sum.add(g.log_abs);
        sign *= g.sign;
    }
    for (double x : denominators) {
        SignedLogGamma g = log_gamma_signed(x, guard);
        log_sum.add(-g.log_abs);
        sign *= g.sign;
    }
    return sign * std::exp(log_sum.value());
}

double pochhammer(double alpha, long n) {
    if (n < 0)
        throw DomainError("pochhammer: order must be non-negative");
    double product = 1.0;
    for (long k = 0; k < n; ++k)
        product *= alpha + static_cast<double>(k);
    return product;
}

double compensated_sum(std::span<const double> terms) noexcept {
    CompensatedSum acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

} // namespace pfq
