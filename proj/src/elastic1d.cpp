#include "ecm/elastic1d.hpp"

#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

Solution1D solve_tensile_1d(const MaterialField1D& kappa, double l) {
    kappa.validate();

    // flux alpha solves l = alpha * sum(len_i / kappa_i)
    double compliance = 0.0;
    for (std::size_t i = 0; i < kappa.values.size(); ++i)
        compliance += (kappa.breakpoints[i + 1] - kappa.breakpoints[i]) / kappa.values[i];

    Solution1D s;
    s.kappa = kappa;
    s.l = l;
    s.alpha = l / compliance;
    s.node_values.resize(kappa.breakpoints.size());
    s.node_values[0] = 0.0;
    for (std::size_t i = 0; i < kappa.values.size(); ++i) {
        const double len = kappa.breakpoints[i + 1] - kappa.breakpoints[i];
        s.node_values[i + 1] = s.node_values[i] + s.alpha * len / kappa.values[i];
    }
    s.node_values.back() = l;  // pin endpoint against rounding drift
    return s;
}

double tensile_force_1d(const Solution1D& s) { return s.alpha; }

double kappa_equiv(double force, double l) {
    if (l == 0.0) throw SingularExtraction("kappa_equiv undefined for l = 0");
    return force / l;
}

double kappa_hom(const PhaseParams& p) {
    p.validate();
    return 1.0 / (p.vol_met / p.kappa_met + p.vol_cer / p.kappa_cer);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d4ecda82f28dbdULL;
    return x ^ (x >> 31);
}

double uniform01(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

MaterialField1D sample_random_material(const PhaseParams& p, int n_cells,
                                       std::uint64_t seed) {
    p.validate();
    if (n_cells < 1) throw InvalidArgument("n_cells must be >= 1");

    MaterialField1D f;
    f.breakpoints.resize(static_cast<std::size_t>(n_cells) + 1);
    f.values.resize(static_cast<std::size_t>(n_cells));
    for (int i = 0; i <= n_cells; ++i)
        f.breakpoints[static_cast<std::size_t>(i)] = static_cast<double>(i) / n_cells;
    f.breakpoints.back() = 1.0;
    for (int i = 0; i < n_cells; ++i) {
        const double u = uniform01(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1)));
        f.values[static_cast<std::size_t>(i)] = u < p.vol_cer ? p.kappa_cer : p.kappa_met;
    }
    f.validate();
    return f;
}

std::vector<StochasticRow> stochastic_force_experiment(const PhaseParams& p, double l,
                                                       const std::vector<int>& n_cells_list,
                                                       int samples, std::uint64_t seed) {
    p.validate();
    if (samples < 1) throw InvalidArgument("samples must be >= 1");
    const double f_hom = kappa_hom(p) * l;

    std::vector<StochasticRow> rows;
    rows.reserve(n_cells_list.size());
    for (std::size_t li = 0; li < n_cells_list.size(); ++li) {
        const int n_cells = n_cells_list[li];
        StochasticRow row;
        row.n_cells = n_cells;
        row.samples = samples;
        double sum = 0.0, sum_sq = 0.0, sum_abs = 0.0;
        for (int s = 0; s < samples; ++s) {
            const std::uint64_t cell_seed =
                splitmix64(splitmix64(seed + li) + static_cast<std::uint64_t>(s));
            const MaterialField1D field = sample_random_material(p, n_cells, cell_seed);
            const double force = tensile_force_1d(solve_tensile_1d(field, l));
            sum += force;
            sum_sq += force * force;
            sum_abs += std::abs(force - f_hom);
        }
        row.mean_force = sum / samples;
        const double var =
            samples > 1 ? (sum_sq - sum * sum / samples) / (samples - 1) : 0.0;
        row.std_force = std::sqrt(std::max(var, 0.0));
        row.mean_abs_err = sum_abs / samples;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ecm
