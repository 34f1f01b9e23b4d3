#include "ecm/plasticity1d.hpp"

#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

void PlasticMetalLaw::validate() const {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(strain_crit > 0.0))
        throw InvalidArgument("plastic law needs alpha, beta, strain_crit > 0");
}

double PlasticMetalLaw::force(double strain) const {
    validate();
    if (strain < 0.0) throw InvalidArgument("metal strain must be nonnegative");
    if (strain <= strain_crit) return alpha * strain;
    return alpha * strain_crit + beta * std::sqrt(strain - strain_crit);
}

double PlasticMetalLaw::strain(double f) const {
    validate();
    if (f < 0.0) throw InvalidArgument("metal force must be nonnegative");
    if (f <= yield_force()) return f / alpha;
    const double excess = (f - yield_force()) / beta;
    return strain_crit + excess * excess;
}

namespace {

constexpr double kBisectTol = 1e-12;  // absolute, on the force

// root of the increasing function g on [lo, inf); bracket grown geometrically
template <typename G>
double bisect_increasing(G&& g, double lo, double hi) {
    if (hi <= lo) hi = lo + 1.0;
    int grow = 0;
    while (g(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 200) throw InvalidArgument("plastic bracket failed to close");
    }
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double solve_plastic_direct(double l, double kappa_cer, const PlasticMetalLaw& law) {
    law.validate();
    if (!(kappa_cer > 0.0)) throw InvalidArgument("kappa_cer must be positive");
    if (l < 0.0) throw InvalidArgument("elongation must be nonnegative");

    // elastic candidate first; keep it when the metal stays below yield
    const double f_elastic = l / (0.5 / kappa_cer + 0.5 / law.alpha);
    if (f_elastic <= law.yield_force()) return f_elastic;

    const auto g = [&](double f) { return 0.5 * (f / kappa_cer + law.strain(f)) - l; };
    return bisect_increasing(g, law.yield_force(), 2.0 * f_elastic);
}

EcmTrace run_ecm_plastic(double l, double kappa_cer, const PlasticMetalLaw& law,
                         const EcmOptions& opt) {
    law.validate();
    if (!(kappa_cer > 0.0)) throw InvalidArgument("kappa_cer must be positive");
    if (!(l > 0.0)) throw InvalidArgument("run_ecm_plastic needs l > 0");
    if (opt.max_iter < 1 || !(opt.tol > 0.0)) throw InvalidArgument("bad ECM options");

    EcmTrace t;
    t.dummy_values.push_back(0.5 * kappa_cer + 0.5 * law.alpha);
    for (int it = 0; it < opt.max_iter; ++it) {
        const double kd = t.dummy_values.back();
        // force balance for the cer|met|dummy chain with lengths 1/10,1/10,4/5
        const double f_elastic =
            l / (0.1 / kappa_cer + 0.1 / law.alpha + 0.8 / kd);
        double force = f_elastic;
        if (f_elastic > law.yield_force()) {
            const auto g = [&](double f) {
                return 0.1 * (f / kappa_cer + law.strain(f)) + 0.8 * f / kd - l;
            };
            force = bisect_increasing(g, law.yield_force(), 2.0 * f_elastic);
        }
        t.forces.push_back(force);
        const double prev = kd;
        const double next = kappa_equiv(force, l);
        t.dummy_values.push_back(next);
        t.iterations = it + 1;
        if (std::abs(next - prev) <= opt.tol * std::abs(prev)) {
            t.converged = true;
            t.stop_reason = StopReason::tolerance;
            return t;
        }
    }
    t.converged = false;
    t.stop_reason = StopReason::max_iter;
    return t;
}

std::vector<PlasticPoint> stress_strain_curve(const std::vector<double>& l_grid,
                                              double kappa_cer, const PlasticMetalLaw& law,
                                              const EcmOptions& opt) {
    std::vector<PlasticPoint> curve;
    curve.reserve(l_grid.size());
    for (double l : l_grid) {
        PlasticPoint pt;
        pt.l = l;
        pt.force_direct = solve_plastic_direct(l, kappa_cer, law);
        const EcmTrace t = run_ecm_plastic(l, kappa_cer, law, opt);
        pt.force_ecm = t.forces.back();
        pt.plastic = pt.force_direct > law.yield_force();
        pt.ecm_converged = t.converged;
        curve.push_back(pt);
    }
    return curve;
}

}  // namespace ecm
