#include "ecm/ecm_iteration.hpp"

#include <cmath>

#include "ecm/errors.hpp"
#include "ecm/material2d.hpp"

namespace ecm {

double lambda_equiv(double force, double mu, double l) {
    if (l == 0.0) throw SingularExtraction("lambda_equiv undefined for l = 0");
    if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
    const double denom = 2.0 * l - force / (2.0 * mu);
    if (std::abs(denom) <= 1e-14 * (std::abs(l) + std::abs(force)))
        throw SingularExtraction("lambda_equiv denominator is singular");
    return (force - 2.0 * mu * l) / denom;
}

namespace {

template <typename ForceFn>
EcmTrace iterate(double initial, double tol, int max_iter, ForceFn&& force_of_dummy) {
    EcmTrace t;
    t.dummy_values.push_back(initial);
    for (int it = 0; it < max_iter; ++it) {
        const auto [force, next] = force_of_dummy(t.dummy_values.back());
        t.forces.push_back(force);
        const double prev = t.dummy_values.back();
        t.dummy_values.push_back(next);
        t.iterations = it + 1;
        if (std::abs(next - prev) <= tol * std::abs(prev)) {
            t.converged = true;
            t.stop_reason = StopReason::tolerance;
            return t;
        }
    }
    t.converged = false;
    t.stop_reason = StopReason::max_iter;
    return t;
}

}  // namespace

EcmTrace run_ecm_1d(const PhaseParams& p, double l, const EcmOptions& opt) {
    p.validate();
    if (l == 0.0) throw InvalidArgument("run_ecm_1d needs l != 0");
    if (opt.max_iter < 1 || !(opt.tol > 0.0)) throw InvalidArgument("bad ECM options");

    const double initial = p.vol_cer * p.kappa_cer + p.vol_met * p.kappa_met;
    return iterate(initial, opt.tol, opt.max_iter, [&](double dummy) {
        const MaterialField1D kappa = build_ecm_kappa_1d(p, dummy);
        const double force = tensile_force_1d(solve_tensile_1d(kappa, l));
        return std::pair<double, double>(force, kappa_equiv(force, l));
    });
}

EcmTrace run_ecm_2d(const PhaseParams& p, double l, int mesh_n, const EcmOptions& opt) {
    p.validate();
    if (l == 0.0) throw InvalidArgument("run_ecm_2d needs l != 0");
    if (opt.max_iter < 1 || !(opt.tol > 0.0)) throw InvalidArgument("bad ECM options");

    const Mesh2D mesh(mesh_n);
    // vol_cer of 0 or 1 degenerates to a single-phase cell (r1 = 0 or r1 = r2)
    EmbeddedCellGeometry2D geom;
    if (p.vol_cer <= 0.0 || p.vol_cer >= 1.0) {
        geom.r2 = 0.1;
        geom.r1 = p.vol_cer >= 1.0 ? geom.r2 : 0.0;
    } else {
        geom = solve_ecm_radii(p.vol_cer);
    }

    const double initial = p.vol_cer * p.lambda_cer + p.vol_met * p.lambda_met;
    DisplacementField last;  // warm start across fixed-point iterations
    bool have_last = false;
    return iterate(initial, opt.tol, opt.max_iter, [&](double dummy) {
        const MaterialField2D mat = build_ecm_lambda_2d(mesh, p, geom, dummy);
        SolverOptions sopt;
        sopt.rtol = opt.solver_rtol;
        sopt.guess = have_last ? &last : nullptr;
        const DisplacementField u = solve_tensile_2d(mat, l, sopt);
        last = u;
        have_last = true;
        const double force = tensile_force_2d(mat, u);
        return std::pair<double, double>(force, lambda_equiv(force, p.mu, l));
    });
}

MonotoneReport check_monotone(const std::vector<double>& values) {
    if (values.size() < 2) throw InvalidArgument("check_monotone needs >= 2 iterates");
    MonotoneReport r;
    int dir = 0;  // sign of the established trend, 0 while all ties so far
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const double d = values[k + 1] - values[k];
        if (d == 0.0) continue;
        const int s = d > 0.0 ? 1 : -1;
        if (dir == 0) {
            dir = s;
        } else if (s != dir) {
            r.classification = MonotoneClass::violated;
            r.first_violation = static_cast<int>(k + 1);
            return r;
        }
    }
    r.classification = dir == 0   ? MonotoneClass::constant
                       : dir > 0 ? MonotoneClass::increasing
                                 : MonotoneClass::decreasing;
    return r;
}

MonotoneReport check_monotone(const EcmTrace& trace, double bound_a, double bound_b,
                              double slack) {
    MonotoneReport r = check_monotone(trace.dummy_values);
    const double lo = std::min(bound_a, bound_b) - slack;
    const double hi = std::max(bound_a, bound_b) + slack;
    for (double v : trace.dummy_values)
        if (v < lo || v > hi) r.within_bounds = false;
    return r;
}

std::string to_string(StopReason r) {
    return r == StopReason::tolerance ? "tolerance" : "max_iter";
}

std::string to_string(MonotoneClass c) {
    switch (c) {
        case MonotoneClass::increasing: return "increasing";
        case MonotoneClass::decreasing: return "decreasing";
        case MonotoneClass::constant: return "constant";
        default: return "violated";
    }
}

}  // namespace ecm
