#pragma once

#include <vector>

#include "ecm/fem2d.hpp"

namespace ecm {

// nu0 = lambda0 / (lambda0 + 2 mu0)
double poisson_like(double lambda0, double mu0);

// Affine zero-order solution u0 = (-nu0 l x1 + nu0 l / 2, l x2).
DisplacementField u0_exact(const Mesh2D& mesh, double lambda0, double mu0, double l);

// F0 = ((1 - nu0) lambda0 + 2 mu0) l
double f0_exact(double lambda0, double mu0, double l);

// Corrector step: solves a0(u, v) = -Int lambda_pert tr e(u_prev) tr e(v)
// + 2 mu_pert e(u_prev):e(v) dx over the zero-boundary space (l = 0).
DisplacementField solve_u1(const MaterialField2D& base,
                           const std::vector<double>& lambda_pert,
                           const std::vector<double>& mu_pert,
                           const DisplacementField& u_prev, double rtol = 1e-10);

// Power-series terms u_0 .. u_order for base material (lambda0, mu0) and
// perturbation eps * lambda_pert (mu unperturbed in the cascade).
std::vector<DisplacementField> series_terms(const Mesh2D& mesh, double lambda0, double mu0,
                                            const std::vector<double>& lambda_pert,
                                            double l, int order, double rtol = 1e-10);

// Constant-coefficient corrector u1_hom = p (1 - 2 x1, 0) with
// p = (lbar (1 - nu0) - 2 mubar nu0) l / (2 (lambda0 + 2 mu0)).
DisplacementField u1_hom_exact(const Mesh2D& mesh, double lambda0, double mu0, double lbar,
                               double mubar, double l);

struct OrderFit {
    double slope = 0.0;
    double intercept = 0.0;
    bool floored = false;  // an error sat below the 1e-14 floor
};

// Least-squares slope of log(error) against log(eps); needs >= 3 points.
OrderFit error_order_fit(const std::vector<double>& eps, const std::vector<double>& errors);

}  // namespace ecm
