#pragma once

#include <vector>

#include "ecm/ecm_iteration.hpp"

namespace ecm {

// Elastic-plastic metal law: alpha * s up to s_crit, then
// alpha * s_crit + beta * sqrt(s - s_crit).
struct PlasticMetalLaw {
    double alpha = 1.0;
    double beta = 1.0;
    double strain_crit = 1.0;

    void validate() const;
    double force(double strain) const;
    // inverse of force(); requires f >= 0
    double strain(double f) const;
    double yield_force() const { return alpha * strain_crit; }
};

// Equal-fraction ceramic/metal series mixture stretched to elongation l >= 0.
double solve_plastic_direct(double l, double kappa_cer, const PlasticMetalLaw& law);

// Embedded cell with ceramic and metal of length 1/10 each and dummy material
// on the remaining 4/5; the dummy is refreshed with F/l every iteration.
EcmTrace run_ecm_plastic(double l, double kappa_cer, const PlasticMetalLaw& law,
                         const EcmOptions& opt = EcmOptions::defaults_1d());

struct PlasticPoint {
    double l = 0.0;
    double force_direct = 0.0;
    double force_ecm = 0.0;
    bool plastic = false;  // metal strained beyond strain_crit
    bool ecm_converged = true;
};

std::vector<PlasticPoint> stress_strain_curve(const std::vector<double>& l_grid,
                                              double kappa_cer, const PlasticMetalLaw& law,
                                              const EcmOptions& opt = EcmOptions::defaults_1d());

}  // namespace ecm
