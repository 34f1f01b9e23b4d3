#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecm/ecm_iteration.hpp"
#include "ecm/errors.hpp"
#include "ecm/material2d.hpp"

using namespace ecm;

namespace {

// closed-form update of the three-phase 1D compliance chain, the test oracle
// for the production path (which re-solves the BVP each step)
double map_1d(const PhaseParams& p, double dummy) {
    return 1.0 / (p.vol_cer / (5.0 * p.kappa_cer) + p.vol_met / (5.0 * p.kappa_met) +
                  4.0 / (5.0 * dummy));
}

}  // namespace

TEST_CASE("lambda_equiv closed form") {
    CHECK(lambda_equiv(0.03, 1.0, 0.01) == doctest::Approx(2.0).epsilon(1e-14));
    // F = 2 mu l is the mu-only response, so lambda vanishes
    CHECK(lambda_equiv(0.02, 1.0, 0.01) == doctest::Approx(0.0));
    CHECK_THROWS_AS(lambda_equiv(0.04, 1.0, 0.01), SingularExtraction);
    CHECK_THROWS_AS(lambda_equiv(0.03, 1.0, 0.0), SingularExtraction);
    CHECK_THROWS_AS(lambda_equiv(0.03, 0.0, 0.01), InvalidArgument);
}

TEST_CASE("1d fixed point walks the compliance map to the harmonic mean") {
    const PhaseParams p = PhaseParams::elastic1d(2.0, 6.0, 0.5);
    EcmOptions opt = EcmOptions::defaults_1d();
    const EcmTrace t = run_ecm_1d(p, 1.0, opt);

    REQUIRE(t.dummy_values.size() >= 3);
    CHECK(t.dummy_values[0] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(t.dummy_values[1] == doctest::Approx(3.75).epsilon(1e-12));
    CHECK(t.dummy_values[2] == doctest::Approx(25.0 / 7.0).epsilon(1e-12));

    CHECK(t.converged);
    CHECK(t.stop_reason == StopReason::tolerance);
    CHECK(t.iterations == static_cast<int>(t.dummy_values.size()) - 1);
    CHECK(t.forces.size() == t.dummy_values.size() - 1);
    CHECK(t.limit() == doctest::Approx(3.0).epsilon(2e-9));

    // forces and dummies are linked by the extraction
    for (std::size_t k = 0; k < t.forces.size(); ++k)
        CHECK(t.dummy_values[k + 1] == doctest::Approx(t.forces[k] / 1.0).epsilon(1e-15));

    // the dummy occupies 4/5 of the bar, which fixes the contraction rate
    for (std::size_t k = 0; k + 1 < 5; ++k) {
        const double r = std::abs(t.dummy_values[k + 1] - 3.0) / std::abs(t.dummy_values[k] - 3.0);
        CHECK(r > 0.75);
        CHECK(r < 0.85);
    }

    const MonotoneReport m = check_monotone(t, 2.0, 6.0);
    CHECK(m.classification == MonotoneClass::decreasing);
    CHECK(m.within_bounds);
}

TEST_CASE("1d production path agrees with the closed-form map step by step") {
    const struct {
        double km, kc, vol, l;
    } cases[] = {{0.5, 9.0, 0.25, 0.37},
                 {3.0, 1.0, 0.7, 1.0},
                 {1.0, 1.0, 0.5, 2.0},
                 {8.0, 2.5, 0.9, 0.01},
                 {2.0, 6.0, 0.1, 5.0}};
    for (const auto& c : cases) {
        CAPTURE(c.km);
        CAPTURE(c.kc);
        const PhaseParams p = PhaseParams::elastic1d(c.km, c.kc, c.vol);
        EcmOptions opt;
        opt.tol = 1e-10;
        opt.max_iter = 300;
        const EcmTrace t = run_ecm_1d(p, c.l, opt);
        CHECK(t.converged);

        double dummy = p.vol_cer * p.kappa_cer + p.vol_met * p.kappa_met;
        CHECK(t.dummy_values[0] == doctest::Approx(dummy).epsilon(1e-14));
        for (std::size_t k = 1; k < t.dummy_values.size(); ++k) {
            dummy = map_1d(p, dummy);
            CHECK(t.dummy_values[k] == doctest::Approx(dummy).epsilon(1e-12));
        }
        CHECK(t.limit() == doctest::Approx(kappa_hom(p)).epsilon(2e-9));
    }
}

TEST_CASE("1d trace is scale invariant and stops on max_iter") {
    const PhaseParams p = PhaseParams::elastic1d(2.0, 6.0, 0.5);
    EcmOptions opt;
    opt.tol = 1e-10;
    opt.max_iter = 300;
    const double a = run_ecm_1d(p, 1.0, opt).limit();
    const double b = run_ecm_1d(p, 0.01, opt).limit();
    CHECK(a == doctest::Approx(b).epsilon(1e-12));

    EcmOptions tight;
    tight.tol = 1e-10;
    tight.max_iter = 3;
    const EcmTrace t = run_ecm_1d(p, 1.0, tight);
    CHECK_FALSE(t.converged);
    CHECK(t.stop_reason == StopReason::max_iter);
    CHECK(t.iterations == 3);
    CHECK(t.dummy_values.size() == 4);

    CHECK_THROWS_AS(run_ecm_1d(p, 0.0, opt), InvalidArgument);
    EcmOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(run_ecm_1d(p, 1.0, bad), InvalidArgument);
    bad = EcmOptions();
    bad.max_iter = 0;
    CHECK_THROWS_AS(run_ecm_1d(p, 1.0, bad), InvalidArgument);
}

TEST_CASE("uniform phases converge immediately") {
    const PhaseParams p = PhaseParams::elastic1d(5.0, 5.0, 0.25);
    const EcmTrace t = run_ecm_1d(p, 1.0);
    CHECK(t.converged);
    CHECK(t.iterations == 1);
    CHECK(t.limit() == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("2d embedded cell iteration") {
    const PhaseParams p = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 0.5);
    EcmOptions opt;
    opt.tol = 1e-7;
    opt.max_iter = 400;
    opt.solver_rtol = 1e-11;
    const EcmTrace t = run_ecm_2d(p, 0.01, 32, opt);

    CHECK(t.converged);
    CHECK(t.dummy_values[0] == doctest::Approx(1.05).epsilon(1e-14));
    CHECK(t.limit() > 1.0);
    CHECK(t.limit() < 1.1);
    // the raster keeps the exact 1:1 phase split at n = 32, so the limit sits
    // first-order at lambda_met + eps * 1/2 with an O(eps^2) remainder
    CHECK(t.limit() == doctest::Approx(1.05).epsilon(5e-3));

    const MonotoneReport m = check_monotone(t, 1.0, 1.1);
    CHECK(m.classification != MonotoneClass::violated);
    CHECK(m.within_bounds);

    for (std::size_t k = 0; k < t.forces.size(); ++k)
        CHECK(t.dummy_values[k + 1] ==
              doctest::Approx(lambda_equiv(t.forces[k], p.mu, 0.01)).epsilon(1e-14));
}

TEST_CASE("2d iteration is independent of the pull magnitude") {
    const PhaseParams p = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 0.5);
    EcmOptions opt;
    opt.tol = 1e-7;
    opt.max_iter = 400;
    opt.solver_rtol = 1e-11;
    const double a = run_ecm_2d(p, 0.01, 32, opt).limit();
    const double b = run_ecm_2d(p, 0.02, 32, opt).limit();
    CHECK(a == doctest::Approx(b).epsilon(1e-5));
}

TEST_CASE("2d degenerate volume fractions collapse to one phase") {
    EcmOptions opt;
    opt.tol = 1e-9;
    opt.max_iter = 50;
    const PhaseParams met_only = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 0.0);
    const EcmTrace tm = run_ecm_2d(met_only, 0.01, 32, opt);
    CHECK(tm.converged);
    CHECK(tm.iterations <= 3);
    CHECK(tm.limit() == doctest::Approx(1.0).epsilon(1e-6));

    const PhaseParams cer_only = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 1.0);
    const EcmTrace tc = run_ecm_2d(cer_only, 0.01, 32, opt);
    CHECK(tc.converged);
    CHECK(tc.iterations <= 3);
    CHECK(tc.limit() == doctest::Approx(1.1).epsilon(1e-6));
}

TEST_CASE("2d propagates resolution failures") {
    const PhaseParams p = PhaseParams::plane2d(1.0, 1.0, 0.1, 1.0, 0.5);
    CHECK_THROWS_AS(run_ecm_2d(p, 0.01, 16, EcmOptions::defaults_2d()), ResolutionError);
}

TEST_CASE("monotone classification") {
    CHECK(check_monotone({1.0, 2.0, 3.0}).classification == MonotoneClass::increasing);
    CHECK(check_monotone({3.0, 2.0, 2.0, 1.0}).classification == MonotoneClass::decreasing);
    CHECK(check_monotone({5.0, 5.0, 5.0}).classification == MonotoneClass::constant);

    const MonotoneReport v = check_monotone({1.0, 1.2, 1.1});
    CHECK(v.classification == MonotoneClass::violated);
    CHECK(v.first_violation == 2);

    const MonotoneReport w = check_monotone({2.0, 1.0, 1.0, 3.0});
    CHECK(w.classification == MonotoneClass::violated);
    CHECK(w.first_violation == 3);

    CHECK(check_monotone({1.0, 1.0}).classification == MonotoneClass::constant);
    CHECK_THROWS_AS(check_monotone({1.0}), InvalidArgument);
    CHECK_THROWS_AS(check_monotone({}), InvalidArgument);

    EcmTrace t;
    t.dummy_values = {1.05, 1.04, 1.03};
    CHECK(check_monotone(t, 1.0, 1.1).within_bounds);
    CHECK_FALSE(check_monotone(t, 1.06, 1.1).within_bounds);
    CHECK(check_monotone(t, 1.06, 1.1, 0.06).within_bounds);

    CHECK(to_string(MonotoneClass::increasing) == "increasing");
    CHECK(to_string(MonotoneClass::violated) == "violated");
    CHECK(to_string(StopReason::tolerance) == "tolerance");
    CHECK(to_string(StopReason::max_iter) == "max_iter");
}
