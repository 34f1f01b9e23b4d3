#pragma once

#include <vector>

#include "ecm/ecm_iteration.hpp"

namespace ecm {

// First-order effective parameter lambda_met + eps * vol_cer * d_c.
double lambda_hom_first_order(const PhaseParams& p);

struct DeltaSweepRow {
    int cells_per_side = 0;
    double delta = 0.0;
    double force = 0.0;
};

struct HomogenizationReport {
    std::vector<DeltaSweepRow> rows;
    double force_extrapolated = 0.0;  // Richardson step on the last two rows
    double lambda_estimate = 0.0;     // lambda_equiv of the extrapolated force
};

// Tensile force of the periodic disk-array material for delta = 1/k over the
// given k list; mesh_n = k * mesh_per_period for each run.
HomogenizationReport delta_sweep_2d(const PhaseParams& p, double l,
                                    const std::vector<int>& cells_list,
                                    int mesh_per_period, double solver_rtol = 1e-10);

struct EcmHomComparison {
    double lambda_ecm = 0.0;
    double lambda_first_order = 0.0;
    double gap = 0.0;
};

EcmHomComparison compare_ecm_vs_hom(const EcmTrace& ecm, const PhaseParams& p);

}  // namespace ecm
