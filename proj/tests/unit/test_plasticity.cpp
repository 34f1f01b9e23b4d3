#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecm/errors.hpp"
#include "ecm/plasticity1d.hpp"

using namespace ecm;

namespace {
const PlasticMetalLaw kUnitLaw{1.0, 1.0, 1.0};
}

TEST_CASE("metal law evaluates both branches") {
    CHECK(kUnitLaw.force(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(kUnitLaw.force(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(kUnitLaw.force(2.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(kUnitLaw.force(1.25) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(kUnitLaw.yield_force() == doctest::Approx(1.0));
    CHECK_THROWS_AS(kUnitLaw.force(-0.1), InvalidArgument);
    CHECK_THROWS_AS(kUnitLaw.strain(-0.1), InvalidArgument);
}

TEST_CASE("strain inverts force for any beta") {
    const PlasticMetalLaw laws[] = {kUnitLaw, {1.5, 2.0, 0.8}, {0.7, 0.3, 2.5}};
    for (const auto& law : laws) {
        CAPTURE(law.beta);
        for (double s : {0.3, 0.8, 1.0, 1.5, 3.0, 10.0}) {
            CHECK(law.strain(law.force(s)) == doctest::Approx(s).epsilon(1e-12));
        }
    }
}

TEST_CASE("law validation") {
    PlasticMetalLaw bad = kUnitLaw;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = kUnitLaw;
    bad.beta = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = kUnitLaw;
    bad.strain_crit = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("direct series mixture") {
    SUBCASE("junction point") {
        CHECK(solve_plastic_direct(0.75, 2.0, kUnitLaw) == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("elastic branch") {
        CHECK(solve_plastic_direct(0.5, 2.0, kUnitLaw) ==
              doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("plastic branch has the quadratic root") {
        // (F/2 + 1 + (F-1)^2) / 2 = 1.25 solves to (3 + sqrt(17)) / 4
        CHECK(solve_plastic_direct(1.25, 2.0, kUnitLaw) ==
              doctest::Approx((3.0 + std::sqrt(17.0)) / 4.0).epsilon(1e-9));
    }
    SUBCASE("zero stretch") {
        CHECK(solve_plastic_direct(0.0, 2.0, kUnitLaw) == doctest::Approx(0.0));
    }
    SUBCASE("solution inverts back to l") {
        for (double l : {0.1, 0.6, 0.75, 0.9, 1.25, 7.0, 50.0}) {
            const double F = solve_plastic_direct(l, 2.0, kUnitLaw);
            const double back = 0.5 * (F / 2.0 + kUnitLaw.strain(F));
            CHECK(back == doctest::Approx(l).epsilon(1e-10));
        }
    }
    SUBCASE("continuity across the yield point") {
        const double lo = solve_plastic_direct(0.75 - 1e-9, 2.0, kUnitLaw);
        const double hi = solve_plastic_direct(0.75 + 1e-9, 2.0, kUnitLaw);
        CHECK(std::abs(lo - 1.0) <= 1e-7);
        CHECK(std::abs(hi - 1.0) <= 1e-7);
        CHECK(lo <= 1.0 + 1e-12);
        CHECK(hi >= 1.0 - 1e-12);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(solve_plastic_direct(-0.1, 2.0, kUnitLaw), InvalidArgument);
        CHECK_THROWS_AS(solve_plastic_direct(0.5, 0.0, kUnitLaw), InvalidArgument);
    }
}

TEST_CASE("plastic embedded cell reaches the direct mixture") {
    EcmOptions opt;
    opt.tol = 1e-11;
    opt.max_iter = 400;
    for (double l : {0.4, 0.75, 1.25, 3.0}) {
        CAPTURE(l);
        const double direct = solve_plastic_direct(l, 2.0, kUnitLaw);
        const EcmTrace t = run_ecm_plastic(l, 2.0, kUnitLaw, opt);
        CHECK(t.converged);
        CHECK(t.dummy_values[0] == doctest::Approx(0.5 * 2.0 + 0.5 * 1.0).epsilon(1e-14));
        CHECK(t.forces.back() == doctest::Approx(direct).epsilon(1e-8));
        CHECK(t.limit() * l == doctest::Approx(t.forces.back()).epsilon(1e-12));
    }
}

TEST_CASE("huge yield strain reduces the cell to the elastic one") {
    PlasticMetalLaw law{1.5, 1.0, 1e12};
    EcmOptions opt;
    opt.tol = 1e-12;
    opt.max_iter = 500;
    const double l = 0.8;
    const EcmTrace t = run_ecm_plastic(l, 2.0, law, opt);
    const double kappa_series = 1.0 / (0.5 / 2.0 + 0.5 / 1.5);
    CHECK(t.forces.back() == doctest::Approx(kappa_series * l).epsilon(1e-9));
    CHECK(solve_plastic_direct(l, 2.0, law) == doctest::Approx(kappa_series * l).epsilon(1e-10));
}

TEST_CASE("stress strain curve") {
    const std::vector<double> grid = {0.2, 0.5, 0.75, 1.0, 1.25, 2.0};
    EcmOptions opt;
    opt.tol = 1e-11;
    opt.max_iter = 400;
    const auto curve = stress_strain_curve(grid, 2.0, kUnitLaw, opt);
    REQUIRE(curve.size() == grid.size());

    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].l == grid[i]);
        CHECK(curve[i].ecm_converged);
        CHECK(curve[i].force_ecm == doctest::Approx(curve[i].force_direct).epsilon(1e-8));
        if (i > 0) CHECK(curve[i].force_direct > curve[i - 1].force_direct);
    }
    // metal goes plastic strictly beyond l = 0.75
    CHECK_FALSE(curve[0].plastic);
    CHECK_FALSE(curve[1].plastic);
    CHECK_FALSE(curve[2].plastic);
    CHECK(curve[3].plastic);
    CHECK(curve[4].plastic);
    CHECK(curve[5].plastic);
}
