#include "ecm/material1d.hpp"

#include <algorithm>
#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

void MaterialField1D::validate() const {
    if (breakpoints.size() < 2) throw InvalidArgument("field needs at least one interval");
    if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0)
        throw InvalidArgument("breakpoints must span [0,1]");
    if (values.size() + 1 != breakpoints.size())
        throw InvalidArgument("values/breakpoints size mismatch");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw InvalidArgument("breakpoints must be strictly increasing");
    for (double v : values)
        if (!(v > 0.0)) throw InvalidArgument("coefficient values must be positive");
}

double MaterialField1D::value_at(double x) const {
    if (x < 0.0 || x > 1.0) throw InvalidArgument("x outside [0,1]");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    if (idx == 0) throw InvalidArgument("x below first breakpoint");
    if (idx >= breakpoints.size()) idx = breakpoints.size() - 1;  // x == 1
    return values[idx - 1];
}

MaterialField1D build_ecm_kappa_1d(const PhaseParams& p, double kappa_dummy) {
    p.validate();
    if (!(kappa_dummy > 0.0)) throw InvalidArgument("kappa_dummy must be positive");

    const double a = 0.5 - p.vol_cer / 10.0;  // ceramic interval start
    const double b = 0.5 + p.vol_cer / 10.0;

    MaterialField1D f;
    f.breakpoints = {0.0, 0.4, a, b, 0.6, 1.0};
    f.values = {kappa_dummy, p.kappa_met, p.kappa_cer, p.kappa_met, kappa_dummy};

    // drop intervals squeezed to zero length (vol_cer of 0 or 1)
    for (std::size_t i = 0; i + 1 < f.breakpoints.size();) {
        if (f.breakpoints[i + 1] - f.breakpoints[i] <= 0.0) {
            f.breakpoints.erase(f.breakpoints.begin() + static_cast<long>(i + 1));
            f.values.erase(f.values.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    f.validate();
    return f;
}

MaterialField1D build_periodic_kappa_1d(const PhaseParams& p, int n_periods) {
    p.validate();
    if (n_periods < 1) throw InvalidArgument("n_periods must be >= 1");

    MaterialField1D f;
    f.breakpoints.push_back(0.0);
    const double len = 1.0 / n_periods;
    for (int k = 0; k < n_periods; ++k) {
        const double start = k * len;
        if (p.vol_met > 0.0 && p.vol_cer > 0.0) {
            f.breakpoints.push_back(start + p.vol_met * len);
            f.values.push_back(p.kappa_met);
            f.breakpoints.push_back((k + 1) * len);
            f.values.push_back(p.kappa_cer);
        } else {
            f.breakpoints.push_back((k + 1) * len);
            f.values.push_back(p.vol_met > 0.0 ? p.kappa_met : p.kappa_cer);
        }
    }
    f.breakpoints.back() = 1.0;
    f.validate();
    return f;
}

std::map<double, double> volume_fractions(const MaterialField1D& f) {
    f.validate();
    std::map<double, double> out;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        out[f.values[i]] += f.breakpoints[i + 1] - f.breakpoints[i];
    return out;
}

}  // namespace ecm
