#pragma once

#include <string>
#include <vector>

#include "ecm/elastic1d.hpp"
#include "ecm/fem2d.hpp"

namespace ecm {

enum class StopReason { tolerance, max_iter };

// History of a self-consistent run. dummy_values[0] is the initial guess and
// forces[k] is the tensile force computed with dummy_values[k], so forces has
// one entry fewer than dummy_values.
struct EcmTrace {
    std::vector<double> dummy_values;
    std::vector<double> forces;
    bool converged = false;
    int iterations = 0;  // fixed-point updates performed
    StopReason stop_reason = StopReason::max_iter;

    double limit() const { return dummy_values.back(); }
};

struct EcmOptions {
    double tol = 1e-10;
    int max_iter = 200;
    double solver_rtol = 1e-10;  // linear solver tolerance (2D only)

    static EcmOptions defaults_1d() { return {1e-10, 200, 1e-10}; }
    static EcmOptions defaults_2d() { return {1e-8, 200, 1e-10}; }
};

// lambda_equiv = (F - 2 mu l) / (2 l - F / (2 mu)). Errors when the
// denominator is (numerically) singular or l = 0.
double lambda_equiv(double force, double mu, double l);

// 1D embedded cell: start from the volume average, solve the three-phase
// tensile problem, update the dummy stiffness with F/l, repeat until the
// relative change drops below tol.
EcmTrace run_ecm_1d(const PhaseParams& p, double l, const EcmOptions& opt = EcmOptions::defaults_1d());

// 2D embedded cell on an n x n mesh, dummy update through lambda_equiv.
EcmTrace run_ecm_2d(const PhaseParams& p, double l, int mesh_n,
                    const EcmOptions& opt = EcmOptions::defaults_2d());

enum class MonotoneClass { increasing, decreasing, constant, violated };

struct MonotoneReport {
    MonotoneClass classification = MonotoneClass::constant;
    int first_violation = -1;  // index of the entry that breaks the trend
    bool within_bounds = true;
};

// Classifies a sequence as monotone (non)increasing, constant, or violated at
// the first entry that moves against the established direction. Ties never
// break a trend.
MonotoneReport check_monotone(const std::vector<double>& values);

// Same classification on trace.dummy_values, plus a containment check of every
// iterate in [min(bound_a, bound_b) - slack, max(bound_a, bound_b) + slack].
MonotoneReport check_monotone(const EcmTrace& trace, double bound_a, double bound_b,
                              double slack = 0.0);

std::string to_string(StopReason r);
std::string to_string(MonotoneClass c);

}  // namespace ecm
