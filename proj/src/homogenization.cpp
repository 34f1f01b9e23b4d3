#include "ecm/homogenization.hpp"

#include <cmath>

#include "ecm/errors.hpp"
#include "ecm/material2d.hpp"

namespace ecm {

double lambda_hom_first_order(const PhaseParams& p) {
    p.validate();
    return p.lambda_met + p.eps * p.vol_cer * p.d_c;
}

HomogenizationReport delta_sweep_2d(const PhaseParams& p, double l,
                                    const std::vector<int>& cells_list,
                                    int mesh_per_period, double solver_rtol) {
    p.validate();
    if (cells_list.size() < 2) throw InvalidArgument("delta sweep needs at least two deltas");
    if (l == 0.0) throw InvalidArgument("delta sweep needs l != 0");
    if (mesh_per_period < 8) throw ResolutionError("mesh_per_period must be >= 8");

    HomogenizationReport rep;
    for (int k : cells_list) {
        if (k < 1) throw InvalidArgument("cells_per_side must be >= 1");
        const Mesh2D mesh(k * mesh_per_period);
        const MaterialField2D mat = build_periodic_lambda_2d(mesh, p, k);
        SolverOptions sopt;
        sopt.rtol = solver_rtol;
        const DisplacementField u = solve_tensile_2d(mat, l, sopt);
        rep.rows.push_back({k, 1.0 / k, tensile_force_2d(mat, u)});
    }

    // one Richardson step assuming first-order convergence in delta
    const DeltaSweepRow& a = rep.rows[rep.rows.size() - 2];
    const DeltaSweepRow& b = rep.rows.back();
    if (a.delta == b.delta) throw InvalidArgument("duplicate delta in sweep");
    rep.force_extrapolated = b.force + (b.force - a.force) * b.delta / (a.delta - b.delta);
    rep.lambda_estimate = lambda_equiv(rep.force_extrapolated, p.mu, l);
    return rep;
}

EcmHomComparison compare_ecm_vs_hom(const EcmTrace& ecm, const PhaseParams& p) {
    EcmHomComparison c;
    c.lambda_ecm = ecm.limit();
    c.lambda_first_order = lambda_hom_first_order(p);
    c.gap = std::abs(c.lambda_ecm - c.lambda_first_order);
    return c;
}

}  // namespace ecm
