#pragma once

#include <vector>

#include "pfq/dixon.hpp"
#include "pfq/series.hpp"

namespace pfq {

/// Evaluation point of the extended quadratic transformation: the identity
/// relating a 3F2 of argument -x/(1+sqrt(1-x))^2 to a closed-form expansion
/// in powers of x, addressed by the same (i, j) offsets as the coefficient
/// tables.
struct TransformPoint {
    double b, d;
    int i, j;
    double x; // in (-1, 1)
};

/// Specification of the general transform: prefactor(d, x) times
/// A+1FH+1[(a), d-1/2; (h), d+1/2; y * quadratic_argument(x)] against its
/// expansion in powers of x with terminating inner series.
struct GeneralTransformSpec {
    std::vector<double> a_list;
    std::vector<double> h_list;
    double d;
    double x; // in (-1, 1)
    double y; // |x*y| < 1
};

/// Two independently computed sides of an identity plus their residual
/// |lhs - rhs| / max(1, |rhs|); meaningful only when both statuses are
/// trustworthy.
struct IdentityPair {
    SeriesResult lhs, rhs;
    double rel_residual;
};

IdentityPair make_identity_pair(SeriesResult lhs, SeriesResult rhs) noexcept;

/// -x / (1 + sqrt(1-x))^2 for x in (-1, 1); magnitude < 1, sign opposite to x.
double quadratic_argument(double x);

/// ((1 + sqrt(1-x)) / 2)^(1-2d) for x in (-1, 1).
double exton_prefactor(double d, double x);

/// Checks the binomial-type identity prefactor(a, x) = 2F1(a-1/2, a; 2a; x):
/// lhs analytic, rhs by series.
IdentityPair srivastava_identity_check(double a, double x, const SeriesControl& control = {});

/// Left side of the general transform: prefactor times the series at the
/// quadratically transformed argument.
SeriesResult exton_general_lhs(const GeneralTransformSpec& spec, const SeriesControl& control = {});

/// Right side of the general transform: outer series over m with weight
/// (d-1/2)_m (d)_m x^m / ((2d)_m m!) and terminating inner series
/// A+1FH+1[(a), -m; (h), 2d+m; y].
SeriesResult exton_general_rhs(const GeneralTransformSpec& spec, const SeriesControl& control = {});

/// Mid-level form of the transform at (i, j): outer series over n with inner
/// terminating 3F2[2d-1-i, b, -n; 2d-b+j, 2d+n; 1], i.e. the general right
/// side specialized to a = (2d-1-i, b), h = (2d-b+j), y = 1.
SeriesResult reduction_2_2_rhs(const TransformPoint& pt, const SeriesControl& control = {});

/// Left side of the main identity:
/// prefactor(d, x) * 3F2[b, d-1/2, 2d-1-i; d+1/2, 2d-b+j; quadratic_argument(x)].
SeriesResult exton_lhs_theorem(const TransformPoint& pt, const SeriesControl& control = {});

/// Closed-form right side of the main identity: a global gamma prefactor
/// times a series in x whose brace coefficients come from the Dixon tables
/// with the substitution a -> 2d-1-i, b -> -n, c -> b, re-evaluated per term.
SeriesResult exton_rhs_theorem(const TransformPoint& pt, const SeriesControl& control = {},
                               const PoleGuard& guard = {});

enum class SpecialCase { E31, E32, E33, E34, E35, E36, E37 };
enum class LimitingCase { E41, E42, E43, E44 };

const char* to_string(SpecialCase c) noexcept;
const char* to_string(LimitingCase c) noexcept;

/// (i, j) offsets addressed by a special case.
void special_case_offsets(SpecialCase c, int& i, int& j) noexcept;

/// One of the printed specializations of the main identity: lhs is the
/// transform left side at the case's (i, j), rhs the printed combination of
/// lower-order series, both by independent summation.
IdentityPair special_case(SpecialCase c, double b, double d, double x,
                          const SeriesControl& control = {});

/// One of the b -> infinity limit identities. The limiting 2F1 on the left
/// is evaluated at +x/(1+sqrt(1-x))^2: the limit of the b-dependent factors
/// absorbs the sign of the quadratic argument.
IdentityPair limiting_case(LimitingCase c, double d, double x,
                           const SeriesControl& control = {});

} // namespace pfq
