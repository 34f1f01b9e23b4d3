#include "ecm/perturbation.hpp"

#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

double poisson_like(double lambda0, double mu0) {
    if (!(mu0 > 0.0) || lambda0 < 0.0) throw InvalidArgument("need mu0 > 0, lambda0 >= 0");
    return lambda0 / (lambda0 + 2.0 * mu0);
}

DisplacementField u0_exact(const Mesh2D& mesh, double lambda0, double mu0, double l) {
    const double nu0 = poisson_like(lambda0, mu0);
    return DisplacementField::sample(
        mesh, l, [=](double x, double) { return -nu0 * l * x + nu0 * l / 2.0; },
        [=](double, double y) { return l * y; });
}

double f0_exact(double lambda0, double mu0, double l) {
    const double nu0 = poisson_like(lambda0, mu0);
    return ((1.0 - nu0) * lambda0 + 2.0 * mu0) * l;
}

DisplacementField solve_u1(const MaterialField2D& base,
                           const std::vector<double>& lambda_pert,
                           const std::vector<double>& mu_pert,
                           const DisplacementField& u_prev, double rtol) {
    const RhsFunctional rhs = make_perturbation_rhs(base.mesh, lambda_pert, mu_pert, u_prev);
    SolverOptions opt;
    opt.rtol = rtol;
    return solve_tensile_2d(base, 0.0, rhs, opt);
}

std::vector<DisplacementField> series_terms(const Mesh2D& mesh, double lambda0, double mu0,
                                            const std::vector<double>& lambda_pert,
                                            double l, int order, double rtol) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    if (lambda_pert.size() != static_cast<std::size_t>(mesh.num_elements()))
        throw InvalidArgument("lambda_pert size must match element count");

    MaterialField2D base;
    base.mesh = mesh;
    base.mu = mu0;
    base.lambda.assign(static_cast<std::size_t>(mesh.num_elements()), lambda0);
    base.validate();

    const std::vector<double> mu_zero(static_cast<std::size_t>(mesh.num_elements()), 0.0);

    std::vector<DisplacementField> terms;
    terms.reserve(static_cast<std::size_t>(order) + 1);
    terms.push_back(u0_exact(mesh, lambda0, mu0, l));
    for (int k = 1; k <= order; ++k)
        terms.push_back(solve_u1(base, lambda_pert, mu_zero, terms.back(), rtol));
    return terms;
}

DisplacementField u1_hom_exact(const Mesh2D& mesh, double lambda0, double mu0, double lbar,
                               double mubar, double l) {
    const double nu0 = poisson_like(lambda0, mu0);
    const double p = (lbar * (1.0 - nu0) - 2.0 * mubar * nu0) * l / (2.0 * (lambda0 + 2.0 * mu0));
    return DisplacementField::sample(
        mesh, 0.0, [=](double x, double) { return p * (1.0 - 2.0 * x); },
        [](double, double) { return 0.0; });
}

OrderFit error_order_fit(const std::vector<double>& eps, const std::vector<double>& errors) {
    if (eps.size() != errors.size()) throw InvalidArgument("eps/errors size mismatch");
    if (eps.size() < 3) throw InvalidArgument("order fit needs at least 3 points");

    constexpr double kFloor = 1e-14;
    OrderFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] > 0.0)) throw InvalidArgument("eps values must be positive");
        double err = errors[i];
        if (err < kFloor) {
            err = kFloor;
            fit.floored = true;
        }
        const double x = std::log(eps[i]);
        const double y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace ecm
