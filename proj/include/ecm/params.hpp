#pragma once

namespace ecm {

// Two-phase material data shared by the 1D and 2D problems. kappa_* are the
// 1D tensile stiffnesses, (lambda_*, mu) the plane elasticity pair. The shear
// modulus is identical in both phases; the ceramic first Lame parameter is
// lambda_met + eps * d_c by construction, so lambda_cer is never set directly.
struct PhaseParams {
    double kappa_met = 1.0;
    double kappa_cer = 1.0;
    double lambda_met = 1.0;
    double lambda_cer = 1.0;
    double mu = 1.0;
    double eps = 0.0;
    double d_c = 0.0;
    double vol_cer = 0.5;
    double vol_met = 0.5;

    static PhaseParams elastic1d(double kappa_met, double kappa_cer, double vol_cer);
    static PhaseParams plane2d(double lambda_met, double d_c, double eps, double mu,
                               double vol_cer);

    void validate() const;
};

}  // namespace ecm
