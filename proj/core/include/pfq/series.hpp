#pragma once

#include <vector>

#include "pfq/errors.hpp"
#include "pfq/scalar.hpp"

namespace pfq {

/// Parameters of a generalized hypergeometric series pFq: the series
/// sum_n prod(numerator)_n / prod(denominator)_n * z^n / n!.
struct PFQParams {
    std::vector<double> numerator;
    std::vector<double> denominator;
};

enum class SeriesStatus {
    Converged,        // tolerance-based stop
    Terminated,       // a numerator parameter is a non-positive integer -m
    MaxTermsExceeded, // partial sum only; not usable as ground truth
};

struct SeriesResult {
    double value = 0.0;
    long terms_used = 0;
    SeriesStatus status = SeriesStatus::Converged;

    bool trustworthy() const noexcept { return status != SeriesStatus::MaxTermsExceeded; }
};

struct SeriesControl {
    double rel_tol = 1e-13;
    long max_terms = 200000;
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0.0) || max_terms < 1 || consecutive_small < 1)
            throw ConfigError("series control: rel_tol > 0, max_terms >= 1, consecutive_small >= 1 required");
    }
};

const char* to_string(SeriesStatus s) noexcept;

/// Term-by-term evaluation of the pFq series via the running ratio
/// term_{n+1} = term_n * prod(alpha_k + n) / prod(beta_k + n) * z / (n + 1)
/// with compensated accumulation.
///
/// Stops at the exact term count of a terminating series, or after
/// consecutive_small successive terms with |term| <= rel_tol * max(1, |sum|),
/// or at max_terms. At the boundary |z| = 1 of a p = q+1 series the result
/// additionally carries an analytic tail estimate for z = +1, so slowly
/// converging unit-argument sums still reach the requested tolerance.
SeriesResult eval_pfq(const PFQParams& params, double z, const SeriesControl& control = {});

/// Exact finite sum of a terminating series: m+1 terms where -m is the
/// numerator's non-positive integer closest to zero. No tolerance logic.
double eval_pfq_terminating(const PFQParams& params, double z);

} // namespace pfq
