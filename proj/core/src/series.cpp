#include "pfq/series.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace pfq {
namespace {

void check_finite(const PFQParams& params, double z) {
    for (double a : params.numerator)
        if (!std::isfinite(a)) throw DomainError("pFq: non-finite numerator parameter");
    for (double b : params.denominator)
        if (!std::isfinite(b)) throw DomainError("pFq: non-finite denominator parameter");
    if (!std::isfinite(z)) throw DomainError("pFq: non-finite argument");
}

// Largest (closest to zero) non-positive integer among the numerator
// parameters, detected by exact floating-point equality.
std::optional<long> termination_order(const PFQParams& params) {
    std::optional<long> m;
    for (double a : params.numerator) {
        if (!is_nonpositive_integer(a)) continue;
        long k = static_cast<long>(-a);
        if (!m || k < *m) m = k;
    }
    return m;
}

// First denominator zero: smallest r >= 0 with some beta = -r.
std::optional<long> first_denominator_zero(const PFQParams& params) {
    std::optional<long> r;
    for (double b : params.denominator) {
        if (!is_nonpositive_integer(b)) continue;
        long k = static_cast<long>(-b);
        if (!r || k < *r) r = k;
    }
    return r;
}

double term_ratio(const PFQParams& params, long n, double z) {
    double num = z;
    for (double a : params.numerator) num *= a + static_cast<double>(n);
    double den = static_cast<double>(n) + 1.0;
    for (double b : params.denominator) den *= b + static_cast<double>(n);
    return num / den;
}

// --- analytic tail for p = q+1 series at z = +1 ---------------------------
//
// The terms behave as t_u = A u^{-1-sigma} exp(c1/u + c2/u^2 + c3/u^3 + ...)
// with sigma = sum(beta) - sum(alpha); the coefficients come from the
// Stirling expansion of log Gamma(u + a) via Bernoulli polynomials. Summing
// the model over u >= N reduces to Hurwitz zeta values, each evaluated by
// Euler-Maclaurin. The model error decays like N^-2 relative to the tail,
// so a few thousand explicit terms deliver near machine-level accuracy even
// for sigma close to 0.

double bern2(double x) { return (x - 1.0) * x + 1.0 / 6.0; }
double bern3(double x) { return ((x - 1.5) * x + 0.5) * x; }
double bern4(double x) { return ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0; }

// sum_{k>=0} (N+k)^(-s) for s > 1 and large N
double hurwitz_tail(double s, double N) {
    double Ns = std::pow(N, -s);
    return N * Ns / (s - 1.0) + 0.5 * Ns + s * Ns / (12.0 * N)
         - s * (s + 1.0) * (s + 2.0) * Ns / (720.0 * N * N * N)
         + s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * Ns / (30240.0 * std::pow(N, 5));
}

struct TailEstimate {
    double tail;      // estimated remainder sum_{u>=N} t_u
    double last_term; // magnitude of the highest-order model contribution
};

TailEstimate unit_argument_tail(const PFQParams& params, double sigma,
                                double term_N, long n_terms) {
    // with a large excess the tail is far below double rounding and the
    // N^(1+sigma) rescaling would overflow
    if (sigma > 60.0) return {0.0, 0.0};
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    for (double a : params.numerator) {
        c1 += bern2(a);
        c2 += bern3(a);
        c3 += bern4(a);
    }
    for (double b : params.denominator) {
        c1 -= bern2(b);
        c2 -= bern3(b);
        c3 -= bern4(b);
    }
    c1 = 0.5 * (c1 - bern2(1.0));
    c2 = -(c2 - bern3(1.0)) / 6.0;
    c3 = (c3 - bern4(1.0)) / 12.0;

    double N = static_cast<double>(n_terms);
    double d2 = c2 + 0.5 * c1 * c1;
    double d3 = c3 + c1 * c2 + c1 * c1 * c1 / 6.0;
    double amp = term_N * std::pow(N, 1.0 + sigma)
               * std::exp(-c1 / N - c2 / (N * N) - c3 / (N * N * N));
    double z1 = hurwitz_tail(1.0 + sigma, N);
    double z2 = hurwitz_tail(2.0 + sigma, N);
    double z3 = hurwitz_tail(3.0 + sigma, N);
    double z4 = hurwitz_tail(4.0 + sigma, N);
    return {amp * (z1 + c1 * z2 + d2 * z3 + d3 * z4), std::abs(amp * d3 * z4)};
}

constexpr long kUnitTailMinTerms = 1500;
constexpr long kUnitTailCheckEvery = 500;

} // namespace

const char* to_string(SeriesStatus s) noexcept {
    switch (s) {
        case SeriesStatus::Converged: return "Converged";
        case SeriesStatus::Terminated: return "Terminated";
        case SeriesStatus::MaxTermsExceeded: return "MaxTermsExceeded";
    }
    return "?";
}

SeriesResult eval_pfq(const PFQParams& params, double z, const SeriesControl& control) {
    control.validate();
    check_finite(params, z);

    if (z == 0.0) {
        // only the n = 0 term survives
        return {1.0, 1, SeriesStatus::Converged};
    }

    const auto m = termination_order(params);
    const auto p = params.numerator.size();
    const auto q = params.denominator.size();

    double sigma = 0.0;
    bool unit_tail = false;
    if (!m) {
        if (p > q + 1)
            throw DomainError("pFq with p > q+1 diverges unless a numerator parameter terminates it");
        if (p == q + 1 && std::abs(z) >= 1.0) {
            if (std::abs(z) > 1.0)
                throw DomainError("pFq with p = q+1 requires |z| < 1 (or |z| = 1 with convergent parameter excess)");
            for (double b : params.denominator) sigma += b;
            for (double a : params.numerator) sigma -= a;
            if (z == 1.0 && !(sigma > 0.0))
                throw DomainError("pFq at z = 1 requires sum(denominator) - sum(numerator) > 0");
            if (z == -1.0 && !(sigma > -1.0))
                throw DomainError("pFq at z = -1 requires sum(denominator) - sum(numerator) > -1");
            unit_tail = (z == 1.0);
        }
    }
    if (const auto r = first_denominator_zero(params)) {
        if (!m || *r < *m)
            throw DivisionByZeroError("pFq: denominator Pochhammer factor reaches zero at n = " +
                                      std::to_string(*r + 1) + " before termination");
    }

    CompensatedSum partial;
    double term = 1.0;
    long n = 0;
    int small_run = 0;

    if (m) {
        // exact polynomial: m+1 terms, never computing the ratio past n = m-1
        long last = *m;
        if (last + 1 > control.max_terms) {
            for (; n <= last && n < control.max_terms; ++n) {
                partial.add(term);
                if (n < last) term *= term_ratio(params, n, z);
            }
            return {partial.value(), n, SeriesStatus::MaxTermsExceeded};
        }
        for (n = 0; n <= last; ++n) {
            partial.add(term);
            if (n < last) term *= term_ratio(params, n, z);
        }
        return {partial.value(), last + 1, SeriesStatus::Terminated};
    }

    while (true) {
        partial.add(term);
        ++n;
        double next = term * term_ratio(params, n - 1, z);

        if (!unit_tail) {
            if (std::abs(next) <= control.rel_tol * std::max(1.0, std::abs(partial.value())))
                ++small_run;
            else
                small_run = 0;
            if (small_run >= control.consecutive_small)
                return {partial.value(), n, SeriesStatus::Converged};
        } else if (n >= kUnitTailMinTerms && n % kUnitTailCheckEvery == 0) {
            TailEstimate est = unit_argument_tail(params, sigma, next, n);
            double total = partial.value() + est.tail;
            if (est.last_term <= control.rel_tol * std::max(1.0, std::abs(total)))
                return {total, n, SeriesStatus::Converged};
        }

        if (n >= control.max_terms) {
            double value = partial.value();
            if (unit_tail) value += unit_argument_tail(params, sigma, next, n).tail;
            return {value, n, SeriesStatus::MaxTermsExceeded};
        }
        term = next;
    }
}

double eval_pfq_terminating(const PFQParams& params, double z) {
    check_finite(params, z);
    const auto m = termination_order(params);
    if (!m)
        throw NotTerminatingError("eval_pfq_terminating: no non-positive-integer numerator parameter");
    if (const auto r = first_denominator_zero(params)) {
        if (*r < *m)
            throw DivisionByZeroError("pFq: denominator Pochhammer factor reaches zero at n = " +
                                      std::to_string(*r + 1) + " before termination");
    }

    CompensatedSum sum;
    double term = 1.0;
    for (long n = 0; n <= *m; ++n) {
        sum.add(term);
        if (n < *m) term *= term_ratio(params, n, z);
    }
    return sum.value();
}

} // namespace pfq
