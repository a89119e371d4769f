#include "pfq/dixon.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>

namespace pfq {
namespace {

// floor(n / 2) for possibly negative n; the bracket [x] in the coefficient
// formulas is mathematical floor, not truncation.
constexpr int fdiv2(int n) noexcept {
    return n >= 0 ? n / 2 : -((-n + 1) / 2);
}

// The A/B branches cancel against each other by several orders of magnitude
// for terminating parameters, so the closed form is assembled in extended
// precision and rounded once at the end.

template <typename Real>
Real coeff_a_impl(int i, int j, Real a, Real b, Real c) {
    const Real half = Real(1) / Real(2);
    switch ((i + 3) * 4 + j) {
        case 24: // (3,0)
            return 5*a - b*b + (a+1)*(a+1) - (2*a - b + 1)*(b + c);
        case 20: // (2,0)
            return half*(a-1)*(a-4) - (b*b - 5*a + 1) - (a - b + 1)*(b + c);
        case 21: // (2,1)
            return (b-1)*(b-2) - (a - b + 1)*(a - b - c + 3);
        case 22: // (2,2)
            return half*(a - c + 2)*(a - 2*b - c + 5)*((a - c + 2)*(a - 2*b + 2) - a*(c - 3))
                 - (b-1)*(b-2)*(c-2)*(c-3);
        case 16: // (1,0)
            return Real(1);
        case 17: // (1,1)
            return c - a - 1;
        case 18: // (1,2)
            return a*(a-1) + (b + c - 3)*(c - 2*a - 1);
        case 12: // (0,0)
            return Real(1);
        case 13: // (0,1)
            return Real(-1);
        case 14: // (0,2)
            return half*((a - b - c + 1)*(a - b - c + 1) + (c-1)*(c-3) - b*b + a);
        case 15: // (0,3)
            return c*(a - b - c + 4) - (a+1)*(a+2) - (a-1)*(b-1) + 3*a*b;
        case 8: // (-1,0)
            return Real(1);
        case 9: // (-1,1)
            return Real(1);
        case 10: // (-1,2)
            return b + c - 1;
        case 11: // (-1,3)
            return (c-1)*(c-2) - b*(a - c + 1);
        case 4: // (-2,0)
            return half*(a-1)*(a - 2*b - 2) - c*(a - b - 1);
        case 5: // (-2,1)
            return a - b - 1;
        case 6: // (-2,2)
            return half*(a-1)*(a - 2*b - 2*c) + b*(b + c);
        case 7: // (-2,3)
            return (a - b - 1)*(c - 1) - b*(b + 1);
        case 0: // (-3,0)
            return (a-1)*(a - 2*b - 2*c - 4) + b*c;
        case 1: // (-3,1)
            return (a - b - 2)*(a - c - 1) - a*c;
        case 2: // (-3,2)
            return (a - b - 1)*(a - b - 2*c - 2) - b*c;
        case 3: // (-3,3)
            return b*(b+1) + (a-1)*(a - b) - c*(2*a - b - 2);
    }
    throw UnsupportedPairError(i, j);
}

template <typename Real>
Real coeff_b_impl(int i, int j, Real a, Real b, Real c) {
    switch ((i + 3) * 4 + j) {
        case 24: // (3,0)
            return -a + 3*b*b - (a+3)*(a+3) + (2*a - 3*b + 5)*(b + c);
        case 20: // (2,0)
            return Real(-2);
        case 21: // (2,1)
            return (a - b - 2*c + 5)*(a - b - c + 3) - (b-1)*(b-2);
        case 22: // (2,2)
            return -2*(a - c + 2)*(a - 2*b - c + 5);
        case 16: // (1,0)
            return Real(-1);
        case 17: // (1,1)
            return a - 2*b - c + 3;
        case 18: // (1,2)
            return (b-1)*(b - c + 1) - (a - b - c + 2)*(a - b - c + 3);
        case 12: // (0,0)
            return Real(0);
        case 13: // (0,1)
            return Real(1);
        case 14: // (0,2)
            return Real(-2);
        case 15: // (0,3)
            return (a+2)*(a+4) - b*(2*a + 5) - 3*c*(a - b - c + 4) + 3;
        case 8: // (-1,0)
            return Real(1);
        case 9: // (-1,1)
            return Real(1);
        case 10: // (-1,2)
            return -(b - c + 1);
        case 11: // (-1,3), corrected reading of an unbalanced printed form
            return (c-1)*(c-2) + b*(a - 2*b - c + 1);
        case 4: // (-2,0)
            return Real(2);
        case 5: // (-2,1)
            return a - b - 2*c - 1;
        case 6: // (-2,2)
            return Real(2);
        case 7: // (-2,3)
            return b*(a - 2*c + 2) - (b - c + 1)*(a - b - 2*c + 1);
        case 0: // (-3,0)
            return (a-2)*(a - 2*b - 2*c - 3) + 3*b*c;
        case 1: // (-3,1)
            return (a - b - 2)*(a - 2*b - 2*c - 3) + b*c;
        case 2: // (-3,2)
            return (a - b - 2)*(a - b - 2*c - 1) + b*c;
        case 3: // (-3,3)
            return (a-1)*(a-2) - 3*b*(a - b - 2) - c*(2*a - 3*b - 4);
    }
    throw UnsupportedPairError(i, j);
}

struct SignedLogGammaExt {
    long double log_abs;
    int sign;
};

SignedLogGammaExt log_gamma_signed_ext(long double x, const PoleGuard& guard, const char* where) {
    if (guard.near_nonpositive_integer(static_cast<double>(x)))
        throw PoleError(static_cast<double>(x), where);
    if (x > 0.0L) return {std::lgamma(x), +1};
    const long double pi = std::numbers::pi_v<long double>;
    long double n = std::nearbyint(x);
    long double r = x - n;
    long double sin_r = std::sin(pi * r);
    int sign = sin_r >= 0.0L ? +1 : -1;
    if (std::fmod(n, 2.0L) != 0.0L) sign = -sign;
    return {std::log(pi) - std::log(std::abs(sin_r)) - std::lgamma(1.0L - x), sign};
}

// same pole semantics as gamma_ratio, carried out in extended precision
long double gamma_ratio_ext(std::initializer_list<long double> numerators,
                            std::initializer_list<long double> denominators,
                            const PoleGuard& guard, const char* where) {
    const long double* num_pole = nullptr;
    const long double* den_pole = nullptr;
    for (const long double& x : numerators)
        if (guard.near_nonpositive_integer(static_cast<double>(x))) { num_pole = &x; break; }
    for (const long double& x : denominators)
        if (guard.near_nonpositive_integer(static_cast<double>(x))) { den_pole = &x; break; }
    if (num_pole && den_pole)
        throw IndeterminateError(std::string("gamma_ratio: 0/0 form in ") + where);
    if (num_pole)
        throw PoleError(static_cast<double>(*num_pole), where);
    if (den_pole)
        return 0.0L;

    long double log_sum = 0.0L;
    int sign = 1;
    for (long double x : numerators) {
        SignedLogGammaExt g = log_gamma_signed_ext(x, guard, where);
        log_sum += g.log_abs;
        sign *= g.sign;
    }
    for (long double x : denominators) {
        SignedLogGammaExt g = log_gamma_signed_ext(x, guard, where);
        log_sum -= g.log_abs;
        sign *= g.sign;
    }
    return sign * std::exp(log_sum);
}

// Gamma(x - k) / Gamma(x) = 1 / ((x-1)(x-2)...(x-k)) for integer k >= 0.
// The rational form is the analytic continuation of the quotient and stays
// finite at the non-positive integers where both gammas pole, which is what
// makes terminating parameters (b = -n) evaluable.
long double shifted_gamma_quotient_ext(long double x, int k, const PoleGuard& guard,
                                       const char* where) {
    long double q = 1.0L;
    for (int l = 1; l <= k; ++l) {
        long double factor = x - static_cast<long double>(l);
        if (std::abs(static_cast<double>(factor)) <= guard.tolerance)
            throw PoleError(static_cast<double>(x - k), where);
        q /= factor;
    }
    return q;
}

} // namespace

bool pair_is_gap(int i, int j) noexcept {
    return (i == 3 && j >= 1) || (i == 2 && j == 3) || (i == 1 && j == 3);
}

bool pair_in_table(int i, int j) noexcept {
    return i >= -3 && i <= 3 && j >= 0 && j <= 3 && !pair_is_gap(i, j);
}

bool pair_supported(int i, int j) noexcept {
    if (j >= 0) return pair_in_table(i, j);
    return j >= -3 && pair_in_table(i + j, -j);
}

double coeff_A(int i, int j, double a, double b, double c) {
    if (!pair_in_table(i, j)) throw UnsupportedPairError(i, j);
    return coeff_a_impl(i, j, a, b, c);
}

double coeff_B(int i, int j, double a, double b, double c) {
    if (!pair_in_table(i, j)) throw UnsupportedPairError(i, j);
    return coeff_b_impl(i, j, a, b, c);
}

DixonCoefficients dixon_coefficients(int i, int j, double a, double b, double c) {
    return {coeff_A(i, j, a, b, c), coeff_B(i, j, a, b, c)};
}

double dixon_validity_excess(const DixonCase& cs) noexcept {
    return cs.a - 2.0 * cs.b - 2.0 * cs.c + 2.0 + 2.0 * cs.i + cs.j;
}

PFQParams dixon_series_params(const DixonCase& cs) {
    return {{cs.a, cs.b, cs.c},
            {1.0 + cs.a - cs.b + cs.i, 1.0 + cs.a - cs.c + cs.i + cs.j}};
}

double dixon_general(const DixonCase& cs, const PoleGuard& guard) {
    guard.validate();
    if (cs.j < 0 || !pair_in_table(cs.i, cs.j))
        throw UnsupportedPairError(cs.i, cs.j);

    const long double a = cs.a, b = cs.b, c = cs.c;
    const int i = cs.i, j = cs.j;

    const bool terminating = is_nonpositive_integer(cs.b) || is_nonpositive_integer(cs.c);
    if (!terminating && !(dixon_validity_excess(cs) > 0.0))
        throw DomainError("dixon_general: a - 2b - 2c > -2 - 2i - j violated and series does not terminate");

    // Gamma(b - (i+|i|)/2) / Gamma(b) and Gamma(c - (i+j+|i+j|)/2) / Gamma(c)
    // reduce to rational factors; everything else stays a gamma quotient.
    long double prefactor = std::pow(2.0L, -2 * c + i + j);
    prefactor *= shifted_gamma_quotient_ext(b, std::max(i, 0), guard,
                                            "dixon_general prefactor (b branch)");
    prefactor *= shifted_gamma_quotient_ext(c, std::max(i + j, 0), guard,
                                            "dixon_general prefactor (c branch)");
    prefactor *= gamma_ratio_ext({1 + a - b + i, 1 + a - c + i + j},
                                 {a - 2*c + i + j + 1, a - b - c + i + j + 1},
                                 guard, "dixon_general prefactor");

    const long double ha = a / 2;
    const long double half = 0.5L;
    const long double A = coeff_a_impl(i, j, a, b, c);
    const long double B = coeff_b_impl(i, j, a, b, c);

    long double branch_a = 0.0L;
    if (A != 0.0L)
        branch_a = A * gamma_ratio_ext({ha - c + half + fdiv2(i + j + 1),
                                        ha - b - c + 1 + i + fdiv2(j + 1)},
                                       {ha + half, ha - b + 1 + fdiv2(i)},
                                       guard, "dixon_general A branch");
    long double branch_b = 0.0L;
    if (B != 0.0L)
        branch_b = B * gamma_ratio_ext({ha - c + 1 + fdiv2(i + j),
                                        ha - b - c + 3 * half + i + fdiv2(j)},
                                       {ha, ha - b + half + fdiv2(i + 1)},
                                       guard, "dixon_general B branch");

    return static_cast<double>(prefactor * (branch_a + branch_b));
}

DixonCase symmetry_extend(const DixonCase& cs) {
    if (cs.j >= 0 || cs.j < -3 || !pair_in_table(cs.i + cs.j, -cs.j))
        throw UnsupportedPairError(cs.i, cs.j);
    return {cs.a, cs.c, cs.b, cs.i + cs.j, -cs.j};
}

std::span<const CoefficientCellText> coefficient_table_text() noexcept {
    static constexpr std::array<CoefficientCellText, 28> cells = {{
        {3, 0, "5a - b^2 + (a+1)^2 - (2a-b+1)(b+c)",
               "-a + 3b^2 - (a+3)^2 + (2a-3b+5)(b+c)", nullptr},
        {3, 1, nullptr, nullptr, nullptr},
        {3, 2, nullptr, nullptr, nullptr},
        {3, 3, nullptr, nullptr, nullptr},
        {2, 0, "(1/2)(a-1)(a-4) - (b^2-5a+1) - (a-b+1)(b+c)", "-2", nullptr},
        {2, 1, "(b-1)(b-2) - (a-b+1)(a-b-c+3)",
               "(a-b-2c+5)(a-b-c+3) - (b-1)(b-2)", nullptr},
        {2, 2, "(1/2)(a-c+2)(a-2b-c+5){(a-c+2)(a-2b+2) - a(c-3)} - (b-1)(b-2)(c-2)(c-3)",
               "-2(a-c+2)(a-2b-c+5)", nullptr},
        {2, 3, nullptr, nullptr, nullptr},
        {1, 0, "1", "-1", nullptr},
        {1, 1, "c-a-1", "a-2b-c+3", nullptr},
        {1, 2, "a(a-1) + (b+c-3)(c-2a-1)",
               "(b-1)(b-c+1) - (a-b-c+2)(a-b-c+3)", nullptr},
        {1, 3, nullptr, nullptr, nullptr},
        {0, 0, "1", "0", nullptr},
        {0, 1, "-1", "1", nullptr},
        {0, 2, "(1/2){(a-b-c+1)^2 + (c-1)(c-3) - b^2 + a}", "-2", nullptr},
        {0, 3, "c(a-b-c+4) - (a+1)(a+2) - (a-1)(b-1) + 3ab",
               "(a+2)(a+4) - b(2a+5) - 3c(a-b-c+4) + 3", nullptr},
        {-1, 0, "1", "1", nullptr},
        {-1, 1, "1", "1", nullptr},
        {-1, 2, "b+c-1", "-(b-c+1)", nullptr},
        {-1, 3, "(c-1)(c-2) - b(a-c+1)", "(c-1)(c-2) + b(a-2b-c+1)",
                "B cell printed with an unbalanced parenthesis \"(c-1(c-2\"; "
                "read as (c-1)(c-2), confirmed by series-oracle equivalence"},
        {-2, 0, "(1/2)(a-1)(a-2b-2) - c(a-b-1)", "2", nullptr},
        {-2, 1, "a-b-1", "a-b-2c-1", nullptr},
        {-2, 2, "(1/2)(a-1)(a-2b-2c) + b(b+c)", "2", nullptr},
        {-2, 3, "(a-b-1)(c-1) - b(b+1)", "b(a-2c+2) - (b-c+1)(a-b-2c+1)", nullptr},
        {-3, 0, "(a-1)(a-2b-2c-4) + bc", "(a-2)(a-2b-2c-3) + 3bc", nullptr},
        {-3, 1, "(a-b-2)(a-c-1) - ac", "(a-b-2)(a-2b-2c-3) + bc", nullptr},
        {-3, 2, "(a-b-1)(a-b-2c-2) - bc", "(a-b-2)(a-b-2c-1) + bc", nullptr},
        {-3, 3, "b(b+1) + (a-1)(a-b) - c(2a-b-2)",
                "(a-1)(a-2) - 3b(a-b-2) - c(2a-3b-4)", nullptr},
    }};
    return cells;
}

} // namespace pfq
