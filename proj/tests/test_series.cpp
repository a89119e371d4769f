#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pfq/scalar.hpp"
#include "pfq/series.hpp"

using namespace pfq;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// test-only oracle: terms by direct Pochhammer products, no running ratio
double dumb_pfq(const PFQParams& p, double z, long n_terms) {
    double sum = 0.0;
    double zn = 1.0;
    double fact = 1.0;
    for (long n = 0; n < n_terms; ++n) {
        double t = zn / fact;
        for (double a : p.numerator) t *= pochhammer(a, n);
        for (double b : p.denominator) t /= pochhammer(b, n);
        sum += t;
        zn *= z;
        fact *= static_cast<double>(n + 1);
    }
    return sum;
}

} // namespace

TEST_CASE("geometric series 2F1(1,1;1;z) = 1/(1-z)") {
    auto r = eval_pfq({{1.0, 1.0}, {1.0}}, 0.5);
    CHECK(r.status == SeriesStatus::Converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("z = 0 sums to exactly 1 for any parameters") {
    auto r = eval_pfq({{0.37, -2.25, 9.0}, {1e-3}}, 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.status == SeriesStatus::Converged);
    CHECK(r.terms_used <= 4);
}

TEST_CASE("terminating 3F2(-2,1,1;2,2;1) = 11/18") {
    auto r = eval_pfq({{-2.0, 1.0, 1.0}, {2.0, 2.0}}, 1.0);
    CHECK(r.status == SeriesStatus::Terminated);
    CHECK(r.terms_used == 3);
    CHECK(r.value == doctest::Approx(11.0 / 18.0).epsilon(1e-15));
}

TEST_CASE("binomial series 1F0(1;;x) = 1/(1-x)") {
    double d = 1.5;
    auto r = eval_pfq({{d - 0.5}, {}}, 0.5);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("eval_pfq_terminating reference sums") {
    // 1 + (2)(-1)(0.5)/((4)(2.5)(1)) = 1 - 1/10
    CHECK(eval_pfq_terminating({{2.0, -1.0, 0.5}, {4.0, 2.5}}, 1.0) ==
          doctest::Approx(0.9).epsilon(1e-15));
    // numerator containing -0.0 gives the single term 1
    CHECK(eval_pfq_terminating({{-0.0, 3.3}, {1.7}}, 0.9) == 1.0);
    // (1-1)^2 by the binomial theorem
    CHECK(eval_pfq_terminating({{-2.0, 1.0}, {1.0}}, 1.0) == 0.0);

    CHECK_THROWS_AS(eval_pfq_terminating({{0.5, 1.0}, {2.0}}, 0.5), NotTerminatingError);
}

TEST_CASE("running-ratio engine matches the direct-product oracle") {
    std::mt19937_64 rng{31};
    for (int trial = 0; trial < 30; ++trial) {
        PFQParams p{{uniform(rng, 0.2, 2.0), uniform(rng, 0.2, 2.0)},
                    {uniform(rng, 0.5, 3.0)}};
        double z = uniform(rng, -0.5, 0.5);
        auto r = eval_pfq(p, z);
        CHECK(r.value == doctest::Approx(dumb_pfq(p, z, 90)).epsilon(1e-12));
    }
}

TEST_CASE("terminating path agrees with the general engine to 1e-14") {
    std::mt19937_64 rng{37};
    for (int trial = 0; trial < 50; ++trial) {
        double m = -static_cast<double>(rng() % 9);
        PFQParams p{{m, uniform(rng, 0.2, 3.0), uniform(rng, 0.2, 3.0)},
                    {uniform(rng, 0.5, 4.0), uniform(rng, 0.5, 4.0)}};
        double z = uniform(rng, -1.0, 1.0);
        double exact = eval_pfq_terminating(p, z);
        auto r = eval_pfq(p, z);
        CHECK(r.status == SeriesStatus::Terminated);
        CHECK(r.terms_used == static_cast<long>(-m) + 1);
        CHECK(std::abs(r.value - exact) <= 1e-14 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("Gauss summation at z = 1") {
    std::mt19937_64 rng{41};
    for (int trial = 0; trial < 25; ++trial) {
        double a = uniform(rng, 0.0, 2.0);
        double b = uniform(rng, 0.0, 2.0);
        double c = a + b + 0.7;
        auto r = eval_pfq({{a, b}, {c}}, 1.0);
        REQUIRE(r.status == SeriesStatus::Converged);
        double expected = gamma_ratio(std::array{c, c - a - b}, std::array{c - a, c - b});
        CHECK(std::abs(r.value - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("z = 1 tail handles small convergence excess") {
    // excess sigma = 0.4: hopeless by direct summation, fine with the tail
    double a = 1.3, b = 0.7, c = a + b + 0.4;
    auto r = eval_pfq({{a, b}, {c}}, 1.0);
    REQUIRE(r.status == SeriesStatus::Converged);
    double expected = gamma_ratio(std::array{c, c - a - b}, std::array{c - a, c - b});
    CHECK(std::abs(r.value - expected) <= 1e-11 * std::abs(expected));
}

TEST_CASE("halving rel_tol moves a Converged value by at most 10 rel_tol") {
    std::mt19937_64 rng{43};
    for (int trial = 0; trial < 20; ++trial) {
        PFQParams p{{uniform(rng, 0.2, 2.0), uniform(rng, 0.2, 2.0)},
                    {uniform(rng, 0.5, 3.0)}};
        double z = uniform(rng, -0.9, 0.9);
        SeriesControl loose;
        loose.rel_tol = 1e-8;
        SeriesControl tight = loose;
        tight.rel_tol = 5e-9;
        auto rl = eval_pfq(p, z, loose);
        auto rt = eval_pfq(p, z, tight);
        REQUIRE(rl.status == SeriesStatus::Converged);
        CHECK(std::abs(rl.value - rt.value) <=
              10.0 * loose.rel_tol * std::max(1.0, std::abs(rl.value)));
    }
}

TEST_CASE("domain preconditions on z versus p, q") {
    CHECK_THROWS_AS(eval_pfq({{0.5, 0.5}, {0.5}}, 1.5), DomainError);
    CHECK_THROWS_AS(eval_pfq({{0.5, 0.5}, {0.5}}, -1.0 - 1e-9), DomainError);
    // z = 1 with non-positive parameter excess diverges
    CHECK_THROWS_AS(eval_pfq({{1.0, 1.0}, {1.5}}, 1.0), DomainError);
    // z = -1 needs excess > -1; just above the line it converges (slowly)
    CHECK_THROWS_AS(eval_pfq({{1.0, 1.0}, {0.5}}, -1.0), DomainError);
    SeriesControl quick;
    quick.max_terms = 500;
    CHECK(eval_pfq({{0.5, 0.5}, {0.9}}, -1.0, quick).status == SeriesStatus::MaxTermsExceeded);
    // p > q+1 without termination
    CHECK_THROWS_AS(eval_pfq({{0.5, 0.5, 0.5}, {}}, 0.1), DomainError);
    // p > q+1 terminating is fine
    CHECK(eval_pfq({{-2.0, 0.5, 0.5}, {}}, 0.1).status == SeriesStatus::Terminated);
    // p <= q converges for any finite z
    CHECK(eval_pfq({{0.5}, {1.0, 2.0}}, 30.0).status == SeriesStatus::Converged);
}

TEST_CASE("denominator Pochhammer zero before termination") {
    CHECK_THROWS_AS(eval_pfq({{0.5, 0.5}, {-1.0}}, 0.5), DivisionByZeroError);
    CHECK_THROWS_AS(eval_pfq({{-5.0, 0.5}, {-3.0}}, 0.5), DivisionByZeroError);
    CHECK_THROWS_AS(eval_pfq_terminating({{-5.0, 0.5}, {-3.0}}, 0.5), DivisionByZeroError);
    // denominator zero beyond the termination order never fires
    CHECK(eval_pfq({{-3.0, 0.5}, {-5.0}}, 0.5).status == SeriesStatus::Terminated);
    CHECK(eval_pfq_terminating({{-3.0, 0.5}, {-5.0}}, 0.5) ==
          doctest::Approx(dumb_pfq({{-3.0, 0.5}, {-5.0}}, 0.5, 4)).epsilon(1e-14));
    // equal magnitude: termination wins, the zero factor is never reached
    auto equal = eval_pfq({{-3.0, 0.5}, {-3.0}}, 0.5);
    CHECK(equal.status == SeriesStatus::Terminated);
    CHECK(equal.terms_used == 4);
}

TEST_CASE("max_terms yields MaxTermsExceeded, not an error") {
    SeriesControl ctl;
    ctl.max_terms = 10;
    auto r = eval_pfq({{1.0, 1.0}, {1.0}}, 0.99, ctl);
    CHECK(r.status == SeriesStatus::MaxTermsExceeded);
    CHECK(r.terms_used == 10);
    CHECK_FALSE(r.trustworthy());
}

TEST_CASE("control validation") {
    SeriesControl bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(eval_pfq({{1.0}, {1.0}}, 0.5, bad), ConfigError);
}
