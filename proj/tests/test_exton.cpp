#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "pfq/exton.hpp"

using namespace pfq;

TEST_CASE("quadratic argument mapping") {
    CHECK(quadratic_argument(0.0) == 0.0);
    CHECK(quadratic_argument(0.75) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(quadratic_argument(-0.9) > 0.0);
    CHECK(std::abs(quadratic_argument(0.999)) < 1.0);
    CHECK_THROWS_AS(quadratic_argument(-3.0), DomainError);
    CHECK_THROWS_AS(quadratic_argument(1.0), DomainError);
}

TEST_CASE("prefactor reference values") {
    CHECK(exton_prefactor(2.2, 0.0) == 1.0);
    CHECK(exton_prefactor(0.5, 0.63) == 1.0);
    CHECK(exton_prefactor(1.0, 0.75) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(exton_prefactor(1.0, 1.2), DomainError);
}

TEST_CASE("binomial-type prefactor identity") {
    auto p1 = srivastava_identity_check(1.0, 0.75);
    CHECK(p1.lhs.value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(p1.rhs.value == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(p1.rel_residual <= 1e-12);

    auto p2 = srivastava_identity_check(0.5, 0.4);
    CHECK(p2.lhs.value == 1.0);
    CHECK(p2.rhs.value == doctest::Approx(1.0).epsilon(1e-14));

    auto p3 = srivastava_identity_check(1.7, 0.0);
    CHECK(p3.lhs.value == 1.0);
    CHECK(p3.rhs.value == 1.0);

    for (double a : {0.6, 1.0, 1.8})
        for (double x : {-0.6, -0.2, 0.2, 0.6, 0.9}) {
            CAPTURE(a);
            CAPTURE(x);
            CHECK(srivastava_identity_check(a, x).rel_residual <= 1e-11);
        }

    CHECK_THROWS_AS(srivastava_identity_check(-0.5, 0.3), DomainError);
    CHECK_THROWS_AS(srivastava_identity_check(1.0, 1.0), DomainError);
}

TEST_CASE("general transform left side degenerate arguments") {
    GeneralTransformSpec spec{{1.4, 0.8}, {2.1}, 1.3, 0.5, 0.0};
    auto at_y0 = exton_general_lhs(spec);
    CHECK(at_y0.value == doctest::Approx(exton_prefactor(1.3, 0.5)).epsilon(1e-13));

    spec.x = 0.0;
    spec.y = 0.7;
    auto at_x0 = exton_general_lhs(spec);
    CHECK(at_x0.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("general transform right side degenerate arguments") {
    GeneralTransformSpec spec{{1.4, 0.8}, {2.1}, 1.3, 0.0, 0.7};
    CHECK(exton_general_rhs(spec).value == doctest::Approx(1.0).epsilon(1e-14));

    // y = 0: the outer sum collapses to the prefactor series
    spec.x = 0.5;
    spec.y = 0.0;
    CHECK(exton_general_rhs(spec).value ==
          doctest::Approx(exton_prefactor(1.3, 0.5)).epsilon(1e-12));
}

TEST_CASE("general transform identity at the theorem substitution") {
    // a = (2d-1-i, b), h = (2d-b+j), y = 1 at d=1.1, b=0.4, i=1, j=1, x=0.5
    GeneralTransformSpec spec;
    spec.a_list = {2.0 * 1.1 - 1.0 - 1.0, 0.4};
    spec.h_list = {2.0 * 1.1 - 0.4 + 1.0};
    spec.d = 1.1;
    spec.x = 0.5;
    spec.y = 1.0;
    auto lhs = exton_general_lhs(spec);
    auto rhs = exton_general_rhs(spec);
    CHECK(make_identity_pair(lhs, rhs).rel_residual <= 1e-9);
}

TEST_CASE("general transform domain requirements") {
    GeneralTransformSpec bad{{1.0}, {}, 1.0, 0.5, 2.5}; // |x*y| >= 1... 1.25
    CHECK_THROWS_AS(exton_general_lhs(bad), DomainError);
    CHECK_THROWS_AS(exton_general_rhs(bad), DomainError);
}

TEST_CASE("mid-level double sum against both sides") {
    TransformPoint p1{0.4, 1.1, 0, 0, 0.5};
    auto lhs = exton_lhs_theorem(p1);
    auto mid = reduction_2_2_rhs(p1);
    CHECK(std::abs(lhs.value - mid.value) <= 1e-9 * std::max(1.0, std::abs(mid.value)));

    TransformPoint p2{0.4, 1.1, 2, 1, -0.5};
    auto mid2 = reduction_2_2_rhs(p2);
    auto rhs2 = exton_rhs_theorem(p2);
    CHECK(std::abs(mid2.value - rhs2.value) <= 1e-9 * std::max(1.0, std::abs(rhs2.value)));

    TransformPoint p0{0.4, 1.1, 1, 2, 0.0};
    CHECK(reduction_2_2_rhs(p0).value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("transform left side degenerate values") {
    CHECK(exton_lhs_theorem({0.4, 1.1, 1, 1, 0.0}).value == doctest::Approx(1.0).epsilon(1e-14));
    // b = 0 kills every series term past n = 0
    CHECK(exton_lhs_theorem({0.0, 1.3, 1, 1, 0.5}).value ==
          doctest::Approx(exton_prefactor(1.3, 0.5)).epsilon(1e-13));
}

TEST_CASE("closed-form right side reduces to the plain 3F2 at (0,0)") {
    for (double x : {-0.5, 0.2, 0.75}) {
        for (double b : {0.3, 1.6}) {
            for (double d : {0.6, 2.35}) {
                if (b == 1.6 && d == 0.6) continue; // d-b = -1 poles the quotients
                CAPTURE(b);
                CAPTURE(d);
                CAPTURE(x);
                auto direct = eval_pfq({{d - 0.5, d, d - b + 0.5}, {2.0 * d - b, d + 0.5}}, x);
                auto rhs = exton_rhs_theorem({b, d, 0, 0, x});
                CHECK(std::abs(rhs.value - direct.value) <=
                      1e-12 * std::max(1.0, std::abs(direct.value)));
            }
        }
    }
}

TEST_CASE("closed-form right side equals 1 at x = 0") {
    for (int i = 3; i >= -3; --i)
        for (int j = 0; j <= 3; ++j) {
            if (!pair_in_table(i, j)) continue;
            CAPTURE(i);
            CAPTURE(j);
            auto rhs = exton_rhs_theorem({0.4, 1.1, i, j, 0.0});
            CHECK(std::abs(rhs.value - 1.0) <= 1e-12);
        }
}

TEST_CASE("theorem identity at spot points for every cell") {
    const std::array<std::array<double, 3>, 2> points = {{{0.4, 1.1, 0.5}, {0.8, 1.7, -0.5}}};
    for (int i = 3; i >= -3; --i)
        for (int j = 0; j <= 3; ++j) {
            if (!pair_in_table(i, j)) continue;
            for (const auto& [b, d, x] : points) {
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(b);
                TransformPoint pt{b, d, i, j, x};
                auto lhs = exton_lhs_theorem(pt);
                auto rhs = exton_rhs_theorem(pt);
                CHECK(make_identity_pair(lhs, rhs).rel_residual <= 1e-8);
            }
        }
}

TEST_CASE("spot check at i = -2, j = 1 from the contract") {
    TransformPoint pt{0.4, 1.1, -2, 1, 0.3};
    auto pair = make_identity_pair(exton_lhs_theorem(pt), exton_rhs_theorem(pt));
    CHECK(pair.rel_residual <= 1e-8);
}

TEST_CASE("transform point validation") {
    CHECK_THROWS_AS(exton_lhs_theorem({0.4, 1.1, 0, 0, 1.5}), DomainError);
    CHECK_THROWS_AS(exton_rhs_theorem({0.4, -1.0, 0, 0, 0.5}), DomainError);
    CHECK_THROWS_AS(exton_rhs_theorem({0.4, 1.1, 3, 2, 0.5}), UnsupportedPairError);
    // 2d - b + j collides with a non-positive integer: d=0.5, b=2, j=1 -> 0
    CHECK_THROWS_AS(exton_lhs_theorem({2.0, 0.5, 0, 1, 0.5}), PoleError);
}

TEST_CASE("special cases hold on sample points") {
    CHECK(special_case(SpecialCase::E31, 0.7, 1.4, 0.3).rel_residual <= 1e-9);
    CHECK(special_case(SpecialCase::E34, 0.4, 1.3, 0.6).rel_residual <= 1e-8);

    auto e35 = special_case(SpecialCase::E35, 0.9, 0.8, 0.0);
    CHECK(e35.lhs.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e35.rhs.value == doctest::Approx(1.0).epsilon(1e-14));

    for (auto c : {SpecialCase::E31, SpecialCase::E32, SpecialCase::E33, SpecialCase::E34,
                   SpecialCase::E35, SpecialCase::E36, SpecialCase::E37}) {
        CAPTURE(to_string(c));
        CHECK(special_case(c, 0.4, 1.3, -0.6).rel_residual <= 1e-8);
        CHECK(special_case(c, 1.6, 2.35, 0.5).rel_residual <= 1e-8);
    }
}

TEST_CASE("special-case coefficient poles are rejected") {
    CHECK_THROWS_AS(special_case(SpecialCase::E32, 1.0, 1.4, 0.3), CoefficientPoleError);
    CHECK_THROWS_AS(special_case(SpecialCase::E33, 1.0, 1.4, 0.3), CoefficientPoleError);
    CHECK_THROWS_AS(special_case(SpecialCase::E34, 2.0, 1.4, 0.3), CoefficientPoleError);
    // E37 pair (2d-2b+1, 2d-2b) degenerates when 2d-2b is a non-positive integer
    CHECK_THROWS_AS(special_case(SpecialCase::E37, 1.6, 0.6, 0.3), PoleError);
}

TEST_CASE("limiting cases hold on sample points") {
    auto e41 = limiting_case(LimitingCase::E41, 1.3, 0.0);
    CHECK(e41.lhs.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e41.rhs.value == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(limiting_case(LimitingCase::E43, 1.2, 0.5).rel_residual <= 1e-9);
    CHECK(limiting_case(LimitingCase::E41, 0.9, -0.7).rel_residual <= 1e-9);

    for (auto c : {LimitingCase::E41, LimitingCase::E42, LimitingCase::E43, LimitingCase::E44}) {
        CAPTURE(to_string(c));
        CHECK(limiting_case(c, 0.6, 0.75).rel_residual <= 1e-8);
        CHECK(limiting_case(c, 2.35, -0.9).rel_residual <= 1e-8);
    }
}

TEST_CASE("growing b drives the i = 0 case toward its limit") {
    const double d = 1.1, x = 0.5;
    auto gap_at = [&](double b) {
        auto lhs = exton_lhs_theorem({b, d, 0, 0, x});
        auto lim = limiting_case(LimitingCase::E41, d, x);
        return std::abs(lhs.value - lim.lhs.value);
    };
    double g2 = gap_at(1e2), g3 = gap_at(1e3), g4 = gap_at(1e4);
    CHECK(g2 > g3);
    CHECK(g3 > g4);
}
