#include "pfq/exton.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pfq {
namespace {

constexpr int fdiv2(int n) noexcept {
    return n >= 0 ? n / 2 : -((-n + 1) / 2);
}

void check_open_unit_interval(double x, const char* what) {
    if (!(std::abs(x) < 1.0))
        throw DomainError(std::string(what) + " requires |x| < 1");
}

void check_transform_point(const TransformPoint& pt, const PoleGuard& guard) {
    check_open_unit_interval(pt.x, "transform point");
    if (!(pt.d > 0.0))
        throw DomainError("transform point requires d > 0");
    if (pt.j < 0 || !pair_in_table(pt.i, pt.j))
        throw UnsupportedPairError(pt.i, pt.j);
    const double beta = 2.0 * pt.d - pt.b + pt.j;
    if (guard.near_nonpositive_integer(beta))
        throw PoleError(beta, "transform point series denominator 2d-b+j");
}

double shifted_gamma_quotient(double x, int k, const PoleGuard& guard, const char* where) {
    double q = 1.0;
    for (int l = 1; l <= k; ++l) {
        double factor = x - static_cast<double>(l);
        if (std::abs(factor) <= guard.tolerance)
            throw PoleError(x - k, where);
        q /= factor;
    }
    return q;
}

SeriesResult scaled(double factor, SeriesResult r) noexcept {
    r.value *= factor;
    return r;
}

// weighted sum of independently evaluated series, for the printed right-hand
// sides of the special and limiting cases
SeriesResult linear_combination(std::initializer_list<std::pair<double, SeriesResult>> parts) noexcept {
    CompensatedSum value;
    long terms = 0;
    SeriesStatus status = SeriesStatus::Converged;
    for (const auto& [coeff, r] : parts) {
        value.add(coeff * r.value);
        terms += r.terms_used;
        if (r.status == SeriesStatus::MaxTermsExceeded) status = SeriesStatus::MaxTermsExceeded;
    }
    return {value.value(), terms, status};
}

} // namespace

IdentityPair make_identity_pair(SeriesResult lhs, SeriesResult rhs) noexcept {
    double residual = std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(rhs.value));
    return {lhs, rhs, residual};
}

double quadratic_argument(double x) {
    check_open_unit_interval(x, "quadratic_argument");
    double s = 1.0 + std::sqrt(1.0 - x);
    return -x / (s * s);
}

double exton_prefactor(double d, double x) {
    check_open_unit_interval(x, "exton_prefactor");
    return std::pow(0.5 * (1.0 + std::sqrt(1.0 - x)), 1.0 - 2.0 * d);
}

IdentityPair srivastava_identity_check(double a, double x, const SeriesControl& control) {
    check_open_unit_interval(x, "srivastava_identity_check");
    if (!(a > 0.0))
        throw DomainError("srivastava_identity_check requires a > 0");
    SeriesResult lhs{exton_prefactor(a, x), 0, SeriesStatus::Converged};
    SeriesResult rhs = eval_pfq({{a - 0.5, a}, {2.0 * a}}, x, control);
    return make_identity_pair(lhs, rhs);
}

SeriesResult exton_general_lhs(const GeneralTransformSpec& spec, const SeriesControl& control) {
    check_open_unit_interval(spec.x, "general transform");
    if (!(std::abs(spec.x * spec.y) < 1.0))
        throw DomainError("general transform requires |x*y| < 1");
    PFQParams params;
    params.numerator = spec.a_list;
    params.numerator.push_back(spec.d - 0.5);
    params.denominator = spec.h_list;
    params.denominator.push_back(spec.d + 0.5);
    SeriesResult series = eval_pfq(params, spec.y * quadratic_argument(spec.x), control);
    return scaled(exton_prefactor(spec.d, spec.x), series);
}

SeriesResult exton_general_rhs(const GeneralTransformSpec& spec, const SeriesControl& control) {
    control.validate();
    check_open_unit_interval(spec.x, "general transform");
    if (!(std::abs(spec.x * spec.y) < 1.0))
        throw DomainError("general transform requires |x*y| < 1");

    PFQParams inner;
    inner.numerator = spec.a_list;
    inner.numerator.push_back(0.0); // slot for -m
    inner.denominator = spec.h_list;
    inner.denominator.push_back(0.0); // slot for 2d+m

    const double d = spec.d;
    CompensatedSum partial;
    double weight = 1.0; // (d-1/2)_m (d)_m x^m / ((2d)_m m!)
    int small_run = 0;
    long m = 0;
    while (true) {
        inner.numerator.back() = -static_cast<double>(m);
        inner.denominator.back() = 2.0 * d + static_cast<double>(m);
        double term = weight * eval_pfq_terminating(inner, spec.y);
        partial.add(term);
        ++m;

        if (std::abs(term) <= control.rel_tol * std::max(1.0, std::abs(partial.value())))
            ++small_run;
        else
            small_run = 0;
        if (small_run >= control.consecutive_small)
            return {partial.value(), m, SeriesStatus::Converged};
        if (m >= control.max_terms)
            return {partial.value(), m, SeriesStatus::MaxTermsExceeded};

        double dm = static_cast<double>(m) - 1.0;
        weight *= (d - 0.5 + dm) * (d + dm) * spec.x / ((2.0 * d + dm) * (dm + 1.0));
    }
}

SeriesResult reduction_2_2_rhs(const TransformPoint& pt, const SeriesControl& control) {
    check_transform_point(pt, PoleGuard{});
    GeneralTransformSpec spec;
    spec.a_list = {2.0 * pt.d - 1.0 - pt.i, pt.b};
    spec.h_list = {2.0 * pt.d - pt.b + pt.j};
    spec.d = pt.d;
    spec.x = pt.x;
    spec.y = 1.0;
    return exton_general_rhs(spec, control);
}

SeriesResult exton_lhs_theorem(const TransformPoint& pt, const SeriesControl& control) {
    check_transform_point(pt, PoleGuard{});
    PFQParams params{{pt.b, pt.d - 0.5, 2.0 * pt.d - 1.0 - pt.i},
                     {pt.d + 0.5, 2.0 * pt.d - pt.b + pt.j}};
    SeriesResult series = eval_pfq(params, quadratic_argument(pt.x), control);
    return scaled(exton_prefactor(pt.d, pt.x), series);
}

SeriesResult exton_rhs_theorem(const TransformPoint& pt, const SeriesControl& control,
                               const PoleGuard& guard) {
    control.validate();
    guard.validate();
    check_transform_point(pt, guard);

    const double b = pt.b, d = pt.d, x = pt.x;
    const int i = pt.i, j = pt.j;
    const int k_half = std::max(i, 0);      // (i + |i|) / 2
    const int k_pair = std::max(i + j, 0);  // (i + j + |i+j|) / 2

    // global prefactor; Gamma(b - k_pair)/Gamma(b) in rational form
    double prefactor = std::pow(2.0, i) * (k_half % 2 == 0 ? 1.0 : -1.0);
    prefactor *= shifted_gamma_quotient(b, k_pair, guard, "theorem prefactor (b branch)");
    const std::array<double, 2> pre_num = {d, d + 0.5};
    const std::array<double, 2> pre_den = {d - b + 0.5 * j, d - b + 0.5 * j + 0.5};
    prefactor *= gamma_ratio(pre_num, pre_den, guard);

    const double hi = 0.5 * i;
    // fixed gamma quotient and Pochhammer base of each brace branch
    const double pA = d - b + hi + 0.5 + fdiv2(j + 1);
    const double qA = d + 0.5 - hi + fdiv2(i);
    const double pB = d - b + hi + 1.0 + fdiv2(j);
    const double qB = d - hi + fdiv2(i + 1);

    const std::array<double, 2> qa_num = {d - b - hi + fdiv2(i + j + 1), pA};
    const std::array<double, 2> qa_den = {d - hi, qA};
    const double QA = gamma_ratio(qa_num, qa_den, guard);

    // B_{0,0} vanishes identically, so its branch is never evaluated there
    const bool b_branch_active = !(i == 0 && j == 0);
    double QB = 0.0;
    if (b_branch_active) {
        const std::array<double, 2> qb_num = {d - b + 0.5 - hi + fdiv2(i + j), pB};
        const std::array<double, 2> qb_den = {d - hi - 0.5, qB};
        QB = gamma_ratio(qb_num, qb_den, guard);
    }

    const double a_sub = 2.0 * d - 1.0 - i;
    const double beta = 2.0 * d - b + j;

    CompensatedSum partial;
    double weight = 1.0; // (d)_n (d-1/2)_n x^n / ((2d-b+j)_n n!)
    double ratio_a = 1.0;
    double ratio_b = 1.0;
    int small_run = 0;
    long n = 0;
    while (true) {
        const double dn = static_cast<double>(n);
        const double fall = 1.0 / pochhammer(dn + 1.0, k_half); // n!/(n + (i+|i|)/2)!
        const double An = coeff_A(i, j, a_sub, -dn, b);
        double brace = An * QA * ratio_a;
        if (b_branch_active) {
            const double Bn = coeff_B(i, j, a_sub, -dn, b);
            brace += Bn * QB * ratio_b;
        }
        const double term = weight * fall * brace;
        partial.add(term);
        ++n;

        if (std::abs(term) <= control.rel_tol * std::max(1.0, std::abs(partial.value())))
            ++small_run;
        else
            small_run = 0;
        if (small_run >= control.consecutive_small)
            return {prefactor * partial.value(), n, SeriesStatus::Converged};
        if (n >= control.max_terms)
            return {prefactor * partial.value(), n, SeriesStatus::MaxTermsExceeded};

        weight *= (d + dn) * (d - 0.5 + dn) * x / ((beta + dn) * (dn + 1.0));
        ratio_a *= (pA + dn) / (qA + dn);
        ratio_b *= (pB + dn) / (qB + dn);
    }
}

const char* to_string(SpecialCase c) noexcept {
    switch (c) {
        case SpecialCase::E31: return "E31";
        case SpecialCase::E32: return "E32";
        case SpecialCase::E33: return "E33";
        case SpecialCase::E34: return "E34";
        case SpecialCase::E35: return "E35";
        case SpecialCase::E36: return "E36";
        case SpecialCase::E37: return "E37";
    }
    return "?";
}

const char* to_string(LimitingCase c) noexcept {
    switch (c) {
        case LimitingCase::E41: return "E41";
        case LimitingCase::E42: return "E42";
        case LimitingCase::E43: return "E43";
        case LimitingCase::E44: return "E44";
    }
    return "?";
}

void special_case_offsets(SpecialCase c, int& i, int& j) noexcept {
    switch (c) {
        case SpecialCase::E31: i = 0;  j = 0; return;
        case SpecialCase::E32: i = 0;  j = 1; return;
        case SpecialCase::E33: i = 1;  j = 0; return;
        case SpecialCase::E34: i = 1;  j = 1; return;
        case SpecialCase::E35: i = -1; j = 0; return;
        case SpecialCase::E36: i = -1; j = 1; return;
        case SpecialCase::E37: i = -2; j = 1; return;
    }
}

IdentityPair special_case(SpecialCase c, double b, double d, double x,
                          const SeriesControl& control) {
    const PoleGuard guard{};
    int i = 0, j = 0;
    special_case_offsets(c, i, j);
    check_transform_point({b, d, i, j, x}, guard);

    switch (c) {
        case SpecialCase::E32:
        case SpecialCase::E33:
            if (std::abs(1.0 - b) <= guard.tolerance)
                throw CoefficientPoleError("coefficient denominator 1-b vanishes at b = 1");
            break;
        case SpecialCase::E34:
            if (std::abs(b - 1.0) <= guard.tolerance || std::abs(b - 2.0) <= guard.tolerance)
                throw CoefficientPoleError("coefficient denominator (b-1)(b-2) vanishes");
            break;
        case SpecialCase::E37:
            // the 3F2 pair (2d-2b+1, 2d-2b) degenerates at non-positive
            // integer 2d-2b; skip rather than sum through near-zero factors
            if (guard.near_nonpositive_integer(2.0 * d - 2.0 * b))
                throw PoleError(2.0 * d - 2.0 * b, "special case E37 parameter 2d-2b");
            break;
        default:
            break;
    }

    SeriesResult lhs = exton_lhs_theorem({b, d, i, j, x}, control);

    SeriesResult rhs;
    switch (c) {
        case SpecialCase::E31:
            rhs = eval_pfq({{d - 0.5, d, d - b + 0.5}, {2.0 * d - b, d + 0.5}}, x, control);
            break;
        case SpecialCase::E32: {
            auto s1 = eval_pfq({{d - 0.5, d, d - b + 1.5}, {2.0 * d - b + 1.0, d + 0.5}}, x, control);
            auto s2 = eval_pfq({{d - 0.5, d - b + 1.0}, {2.0 * d - b + 1.0}}, x, control);
            rhs = linear_combination({{(2.0 * d - 2.0 * b + 1.0) / (2.0 * (1.0 - b)), s1},
                                      {-(2.0 * d - 1.0) / (2.0 * (1.0 - b)), s2}});
            break;
        }
        case SpecialCase::E33: {
            auto s1 = eval_pfq({{d - 0.5, d - b + 1.0, 1.0}, {2.0 * d - b, 2.0}}, x, control);
            auto s2 = eval_pfq({{d, d - 0.5, d - b + 1.5, 1.0}, {2.0 * d - b, d + 0.5, 2.0}}, x, control);
            rhs = linear_combination({{(2.0 * d - 1.0) * (d - b) / (1.0 - b), s1},
                                      {-(d - 1.0) * (2.0 * d - 2.0 * b + 1.0) / (1.0 - b), s2}});
            break;
        }
        case SpecialCase::E34: {
            auto s1 = eval_pfq({{d - 0.5, d - b + 2.0, 1.0}, {2.0 * d - b + 1.0, 2.0}}, x, control);
            auto s2 = eval_pfq({{d - 0.5, d, d - b + 1.5, d - 0.5 * b + 1.5, 1.0},
                                {2.0 * d - b + 1.0, d + 0.5, d - 0.5 * b + 0.5, 2.0}}, x, control);
            const double den = (b - 1.0) * (b - 2.0);
            rhs = linear_combination(
                {{(2.0 * d - 1.0) * (d - b + 1.0) * (2.0 * d - b - 1.0) / den, s1},
                 {-(d - 1.0) * (2.0 * d - b + 1.0) * (2.0 * d - 2.0 * b + 1.0) / den, s2}});
            break;
        }
        case SpecialCase::E35: {
            auto s1 = eval_pfq({{d - 0.5, d - b}, {2.0 * d - b}}, x, control);
            auto s2 = eval_pfq({{d, d - 0.5, d - b + 0.5}, {2.0 * d - b, d + 0.5}}, x, control);
            rhs = linear_combination({{0.5, s1}, {0.5, s2}});
            break;
        }
        case SpecialCase::E36: {
            auto s1 = eval_pfq({{d - 0.5, d - b + 1.0}, {2.0 * d - b + 1.0}}, x, control);
            auto s2 = eval_pfq({{d, d - 0.5, d - b + 0.5}, {2.0 * d - b + 1.0, d + 0.5}}, x, control);
            rhs = linear_combination({{0.5, s1}, {0.5, s2}});
            break;
        }
        case SpecialCase::E37: {
            auto s1 = eval_pfq({{d, d - 0.5, 2.0 * d + 1.0, d - b + 0.5},
                                {2.0 * d, d + 0.5, 2.0 * d - b + 1.0}}, x, control);
            auto s2 = eval_pfq({{d - b, d - 0.5, 2.0 * d - 2.0 * b + 1.0},
                                {2.0 * d - b + 1.0, 2.0 * d - 2.0 * b}}, x, control);
            rhs = linear_combination({{0.5, s1}, {0.5, s2}});
            break;
        }
    }
    return make_identity_pair(lhs, rhs);
}

IdentityPair limiting_case(LimitingCase c, double d, double x, const SeriesControl& control) {
    check_open_unit_interval(x, "limiting case");
    if (!(d > 0.0))
        throw DomainError("limiting case requires d > 0");

    int i = 0;
    switch (c) {
        case LimitingCase::E41: i = 0;  break;
        case LimitingCase::E42: i = 1;  break;
        case LimitingCase::E43: i = -1; break;
        case LimitingCase::E44: i = -2; break;
    }

    // b -> infinity limit: the 2F1 on the left takes the positive argument
    const double u = -quadratic_argument(x);
    SeriesResult series = eval_pfq({{2.0 * d - 1.0 - i, d - 0.5}, {d + 0.5}}, u, control);
    SeriesResult lhs = scaled(exton_prefactor(d, x), series);

    SeriesResult rhs;
    switch (c) {
        case LimitingCase::E41:
            rhs = eval_pfq({{d - 0.5, d}, {d + 0.5}}, x, control);
            break;
        case LimitingCase::E42: {
            auto s1 = eval_pfq({{d - 0.5, 1.0}, {2.0}}, x, control);
            auto s2 = eval_pfq({{d - 0.5, d, 1.0}, {d + 0.5, 2.0}}, x, control);
            rhs = linear_combination({{2.0 * d - 1.0, s1}, {-2.0 * (d - 1.0), s2}});
            break;
        }
        case LimitingCase::E43: {
            auto s1 = eval_pfq({{d - 0.5}, {}}, x, control);
            auto s2 = eval_pfq({{d - 0.5, d}, {d + 0.5}}, x, control);
            rhs = linear_combination({{0.5, s1}, {0.5, s2}});
            break;
        }
        case LimitingCase::E44: {
            auto s1 = eval_pfq({{d - 0.5}, {}}, x, control);
            auto s2 = eval_pfq({{d - 0.5, d, 2.0 * d + 1.0}, {d + 0.5, 2.0 * d}}, x, control);
            rhs = linear_combination({{0.5, s1}, {0.5, s2}});
            break;
        }
    }
    return make_identity_pair(lhs, rhs);
}

} // namespace pfq
