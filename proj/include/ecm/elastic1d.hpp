#pragma once

#include <cstdint>
#include <vector>

#include "ecm/material1d.hpp"

namespace ecm {

// Tensile solution on [0,1]: piecewise linear u with u(0) = 0, u(1) = l and
// constant flux alpha = kappa * u' on every interval.
struct Solution1D {
    MaterialField1D kappa;
    double l = 0.0;
    double alpha = 0.0;
    std::vector<double> node_values;  // u at the breakpoints
};

Solution1D solve_tensile_1d(const MaterialField1D& kappa, double l);

// Tensile force; for the constant-flux solution this is alpha itself.
double tensile_force_1d(const Solution1D& s);

// kappa_equiv = F / l. Errors on l = 0.
double kappa_equiv(double force, double l);

// Harmonic mean 1 / (vol_met/kappa_met + vol_cer/kappa_cer).
double kappa_hom(const PhaseParams& p);

// Bernoulli coefficient on n_cells equal cells, P[kappa_cer] = vol_cer.
// Counter-based: the value of cell i depends only on (seed, i).
MaterialField1D sample_random_material(const PhaseParams& p, int n_cells,
                                       std::uint64_t seed);

struct StochasticRow {
    int n_cells = 0;
    int samples = 0;
    double mean_force = 0.0;
    double std_force = 0.0;     // sample standard deviation
    double mean_abs_err = 0.0;  // mean |F - kappa_hom * l|
};

std::vector<StochasticRow> stochastic_force_experiment(const PhaseParams& p, double l,
                                                       const std::vector<int>& n_cells_list,
                                                       int samples, std::uint64_t seed);

}  // namespace ecm
