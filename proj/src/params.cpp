#include "ecm/params.hpp"

#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

PhaseParams PhaseParams::elastic1d(double kappa_met, double kappa_cer, double vol_cer) {
    PhaseParams p;
    p.kappa_met = kappa_met;
    p.kappa_cer = kappa_cer;
    p.vol_cer = vol_cer;
    p.vol_met = 1.0 - vol_cer;
    // keep a consistent 2D view: kappa = lambda + 2 mu with mu = 0 would be
    // degenerate, so leave the plane pair at its (unused) defaults
    p.lambda_met = p.lambda_cer = kappa_met;
    p.validate();
    return p;
}

PhaseParams PhaseParams::plane2d(double lambda_met, double d_c, double eps, double mu,
                                 double vol_cer) {
    PhaseParams p;
    p.lambda_met = lambda_met;
    p.d_c = d_c;
    p.eps = eps;
    p.mu = mu;
    p.lambda_cer = lambda_met + eps * d_c;
    p.vol_cer = vol_cer;
    p.vol_met = 1.0 - vol_cer;
    p.kappa_met = lambda_met + 2.0 * mu;
    p.kappa_cer = p.lambda_cer + 2.0 * mu;
    p.validate();
    return p;
}

void PhaseParams::validate() const {
    if (!(kappa_met > 0.0) || !(kappa_cer > 0.0))
        throw InvalidArgument("kappa_met and kappa_cer must be positive");
    if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
    if (lambda_met < 0.0 || lambda_cer < 0.0)
        throw InvalidArgument("lambda must be nonnegative");
    if (eps < 0.0) throw InvalidArgument("eps must be nonnegative");
    if (!(vol_cer >= 0.0 && vol_cer <= 1.0))
        throw InvalidArgument("vol_cer must lie in [0,1]");
    if (std::abs(vol_cer + vol_met - 1.0) > 1e-14)
        throw InvalidArgument("vol_cer + vol_met must equal 1");
    if (std::abs(lambda_cer - (lambda_met + eps * d_c)) > 1e-12 * (1.0 + lambda_cer))
        throw InvalidArgument("lambda_cer must equal lambda_met + eps * d_c");
}

}  // namespace ecm
