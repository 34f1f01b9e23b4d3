#pragma once

#include <map>
#include <vector>

#include "ecm/params.hpp"

namespace ecm {

// Piecewise constant coefficient on [0,1]: values[i] holds on
// [breakpoints[i], breakpoints[i+1]).
struct MaterialField1D {
    std::vector<double> breakpoints;  // strictly increasing, 0 first, 1 last
    std::vector<double> values;       // one per interval, all positive

    void validate() const;
    double value_at(double x) const;
};

// Three-phase embedded cell: the cell is [2/5, 3/5) with a ceramic interval of
// length vol_cer/5 centered at 1/2 and metal on the rest of the cell; the
// dummy value fills [0, 2/5) and [3/5, 1].
MaterialField1D build_ecm_kappa_1d(const PhaseParams& p, double kappa_dummy);

// n_periods copies of the metal|ceramic pattern, each scaled to length
// 1/n_periods (metal fraction vol_met within every period).
MaterialField1D build_periodic_kappa_1d(const PhaseParams& p, int n_periods);

// Interval measure per distinct coefficient value.
std::map<double, double> volume_fractions(const MaterialField1D& f);

}  // namespace ecm
