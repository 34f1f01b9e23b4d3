// ecmlab: experiment runner for the embedded cell method library.
//
// Every command writes a JSON summary plus CSV tables into one output
// directory and prints its headline numbers. Outputs are deterministic:
// the same flags and seed produce byte-identical files.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ecm/ecm_iteration.hpp"
#include "ecm/errors.hpp"
#include "ecm/homogenization.hpp"
#include "ecm/io.hpp"
#include "ecm/material2d.hpp"
#include "ecm/perturbation.hpp"
#include "ecm/plasticity1d.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoConvergence = 2;

json num(double v) { return json::parse(ecm::io::fmt(v)); }

std::string resolve_outdir(const std::string& command, const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ECMLAB_OUTDIR"); env != nullptr && *env != '\0')
        return env;
    return command + "_out";
}

void emit(const std::string& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    ecm::io::write_file(dir + "/" + name, content);
}

void require_ascending(const std::vector<double>& eps_list) {
    if (eps_list.empty()) throw ecm::InvalidArgument("eps list must not be empty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0)) throw ecm::InvalidArgument("eps values must be positive");
        if (i > 0 && !(eps_list[i] > eps_list[i - 1]))
            throw ecm::InvalidArgument("eps list must be strictly ascending");
    }
}

// numeric controls shared by every command
struct CommonOpts {
    std::string out;
    double l = 0.01;
    double tol = 1e-8;
    int max_iter = 200;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->configurable();
    cmd->add_option("--out", c.out, "output directory (default: <command>_out or $ECMLAB_OUTDIR)");
    cmd->add_option("--l", c.l, "prescribed boundary displacement")->capture_default_str();
    cmd->add_option("--tol", c.tol, "relative fixed-point tolerance")->capture_default_str();
    cmd->add_option("--max-iter", c.max_iter, "fixed-point iteration cap")->capture_default_str();
}

int run_ecm1d(const CommonOpts& c, double kappa_met, double kappa_cer, double vol_cer) {
    const ecm::PhaseParams p = ecm::PhaseParams::elastic1d(kappa_met, kappa_cer, vol_cer);
    ecm::EcmOptions opt;
    opt.tol = c.tol;
    opt.max_iter = c.max_iter;
    const ecm::EcmTrace t = ecm::run_ecm_1d(p, c.l, opt);
    const double k_hom = ecm::kappa_hom(p);

    json j;
    j["kappa_dummy"] = num(t.limit());
    j["kappa_hom"] = num(k_hom);
    j["rel_gap"] = num(std::abs(t.limit() - k_hom) / k_hom);
    j["force"] = num(t.forces.back());
    j["iterations"] = t.iterations;
    j["converged"] = t.converged;
    j["stop_reason"] = ecm::to_string(t.stop_reason);

    const std::string dir = resolve_outdir("ecm1d", c.out);
    emit(dir, "trace.csv", ecm::io::trace_csv(t));
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "ecm1d: kappa_dummy = " << ecm::io::fmt(t.limit()) << ", kappa_hom = "
              << ecm::io::fmt(k_hom) << ", iterations = " << t.iterations
              << (t.converged ? "" : " (not converged)") << "\n"
              << "wrote " << dir << "/{trace.csv,summary.json}\n";
    return t.converged ? kExitOk : kExitNoConvergence;
}

int run_ecm2d(const CommonOpts& c, double lambda_met, double d_c, double eps, double mu,
              double vol_cer, int mesh_n, double solver_rtol) {
    const ecm::PhaseParams p = ecm::PhaseParams::plane2d(lambda_met, d_c, eps, mu, vol_cer);
    ecm::EcmOptions opt;
    opt.tol = c.tol;
    opt.max_iter = c.max_iter;
    opt.solver_rtol = solver_rtol;
    const ecm::EcmTrace t = ecm::run_ecm_2d(p, c.l, mesh_n, opt);
    const ecm::EcmHomComparison cmp = ecm::compare_ecm_vs_hom(t, p);
    const ecm::MonotoneReport mono =
        ecm::check_monotone(t, p.lambda_met, p.lambda_cer, 1e-3 * std::abs(eps));

    json j;
    j["lambda_dummy"] = num(t.limit());
    j["lambda_first_order"] = num(cmp.lambda_first_order);
    j["gap"] = num(cmp.gap);
    j["force"] = num(t.forces.back());
    j["iterations"] = t.iterations;
    j["converged"] = t.converged;
    j["stop_reason"] = ecm::to_string(t.stop_reason);
    j["monotone"] = ecm::to_string(mono.classification);
    j["within_bounds"] = mono.within_bounds;
    j["mesh_n"] = mesh_n;

    const std::string dir = resolve_outdir("ecm2d", c.out);
    emit(dir, "trace.csv", ecm::io::trace_csv(t));
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "ecm2d: lambda_dummy = " << ecm::io::fmt(t.limit())
              << ", first-order lambda = " << ecm::io::fmt(cmp.lambda_first_order)
              << ", gap = " << ecm::io::fmt(cmp.gap) << ", iterations = " << t.iterations
              << (t.converged ? "" : " (not converged)") << "\n"
              << "wrote " << dir << "/{trace.csv,summary.json}\n";
    return t.converged ? kExitOk : kExitNoConvergence;
}

int run_homogenize1d(const CommonOpts& c, double kappa_met, double kappa_cer, double vol_cer,
                     std::vector<int> n_periods) {
    const ecm::PhaseParams p = ecm::PhaseParams::elastic1d(kappa_met, kappa_cer, vol_cer);
    const double k_hom = ecm::kappa_hom(p);

    std::string csv = "n_periods,force,kappa_equiv\n";
    double max_rel_dev = 0.0;
    for (int n : n_periods) {
        const ecm::MaterialField1D f = ecm::build_periodic_kappa_1d(p, n);
        const double force = ecm::tensile_force_1d(ecm::solve_tensile_1d(f, c.l));
        const double k_eq = ecm::kappa_equiv(force, c.l);
        max_rel_dev = std::max(max_rel_dev, std::abs(k_eq - k_hom) / k_hom);
        csv += std::to_string(n) + "," + ecm::io::fmt(force) + "," + ecm::io::fmt(k_eq) + "\n";
    }

    json j;
    j["kappa_hom"] = num(k_hom);
    j["force_hom"] = num(k_hom * c.l);
    j["max_rel_dev"] = num(max_rel_dev);

    const std::string dir = resolve_outdir("homogenize1d", c.out);
    emit(dir, "periodic.csv", csv);
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "homogenize1d: kappa_hom = " << ecm::io::fmt(k_hom)
              << ", max relative deviation over periods = " << ecm::io::fmt(max_rel_dev) << "\n"
              << "wrote " << dir << "/{periodic.csv,summary.json}\n";
    return kExitOk;
}

int run_deltasweep2d(const CommonOpts& c, double lambda_met, double d_c, double eps, double mu,
                     double vol_cer, std::vector<int> cells, int mesh_per_period,
                     double solver_rtol) {
    const ecm::PhaseParams p = ecm::PhaseParams::plane2d(lambda_met, d_c, eps, mu, vol_cer);
    const ecm::HomogenizationReport rep =
        ecm::delta_sweep_2d(p, c.l, cells, mesh_per_period, solver_rtol);
    const double first_order = ecm::lambda_hom_first_order(p);

    json j;
    j["force_extrapolated"] = num(rep.force_extrapolated);
    j["lambda_estimate"] = num(rep.lambda_estimate);
    j["lambda_first_order"] = num(first_order);
    j["gap"] = num(std::abs(rep.lambda_estimate - first_order));
    j["mesh_per_period"] = mesh_per_period;

    const std::string dir = resolve_outdir("deltasweep2d", c.out);
    emit(dir, "sweep.csv", ecm::io::delta_sweep_csv(rep));
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "deltasweep2d: lambda_estimate = " << ecm::io::fmt(rep.lambda_estimate)
              << ", first-order lambda = " << ecm::io::fmt(first_order) << ", gap = "
              << ecm::io::fmt(std::abs(rep.lambda_estimate - first_order)) << "\n"
              << "wrote " << dir << "/{sweep.csv,summary.json}\n";
    return kExitOk;
}

int run_stochastic1d(const CommonOpts& c, double kappa_met, double kappa_cer, double vol_cer,
                     std::vector<int> n_cells, int samples, std::uint64_t seed) {
    const ecm::PhaseParams p = ecm::PhaseParams::elastic1d(kappa_met, kappa_cer, vol_cer);
    const auto rows = ecm::stochastic_force_experiment(p, c.l, n_cells, samples, seed);
    const double f_hom = ecm::kappa_hom(p) * c.l;

    json j;
    j["f_hom"] = num(f_hom);
    j["samples"] = samples;
    j["seed"] = seed;
    j["final_mean_abs_err"] = num(rows.back().mean_abs_err);

    const std::string dir = resolve_outdir("stochastic1d", c.out);
    emit(dir, "stochastic.csv", ecm::io::stochastic_csv(rows, f_hom));
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "stochastic1d: F_hom = " << ecm::io::fmt(f_hom)
              << ", mean |F - F_hom| at n_cells = " << rows.back().n_cells << ": "
              << ecm::io::fmt(rows.back().mean_abs_err) << "\n"
              << "wrote " << dir << "/{stochastic.csv,summary.json}\n";
    return kExitOk;
}

int run_plastic1d(const CommonOpts& c, double kappa_cer, double alpha, double beta,
                  double strain_crit, double l_min, double l_max, int points) {
    if (points < 2) throw ecm::InvalidArgument("points must be >= 2");
    if (!(l_max > l_min) || l_min < 0.0) throw ecm::InvalidArgument("need 0 <= l_min < l_max");
    const ecm::PlasticMetalLaw law{alpha, beta, strain_crit};

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = l_min + (l_max - l_min) * i / (points - 1);

    ecm::EcmOptions opt;
    opt.tol = c.tol;
    opt.max_iter = c.max_iter;
    const auto curve = ecm::stress_strain_curve(grid, kappa_cer, law, opt);

    double max_gap = 0.0;
    bool all_converged = true;
    for (const auto& pt : curve) {
        max_gap = std::max(max_gap, std::abs(pt.force_ecm - pt.force_direct));
        all_converged = all_converged && pt.ecm_converged;
    }

    json j;
    j["yield_force"] = num(law.yield_force());
    j["max_abs_gap"] = num(max_gap);
    j["points"] = points;
    j["converged"] = all_converged;

    const std::string dir = resolve_outdir("plastic1d", c.out);
    emit(dir, "curve.csv", ecm::io::plastic_csv(curve));
    emit(dir, "summary.json", j.dump(2) + "\n");

    std::cout << "plastic1d: yield force = " << ecm::io::fmt(law.yield_force())
              << ", max |F_ecm - F_direct| = " << ecm::io::fmt(max_gap)
              << (all_converged ? "" : " (not converged)") << "\n"
              << "wrote " << dir << "/{curve.csv,summary.json}\n";
    return all_converged ? kExitOk : kExitNoConvergence;
}

int run_perturb2d(const CommonOpts& c, double lambda0, double d_c, double mu, double vol_cer,
                  int mesh_n, std::vector<double> eps_list, double solver_rtol) {
    require_ascending(eps_list);
    const ecm::Mesh2D mesh(mesh_n);

    // embedded-cell material of the first ECM iteration, written as
    // lambda0 + eps * lambda_pert with the dummy at the volume average
    const ecm::PhaseParams unit = ecm::PhaseParams::plane2d(lambda0, d_c, 1.0, mu, vol_cer);
    const ecm::EmbeddedCellGeometry2D geom = ecm::solve_ecm_radii(vol_cer);
    const double dummy0 = vol_cer * unit.lambda_cer + (1.0 - vol_cer) * unit.lambda_met;
    const ecm::MaterialField2D marker = ecm::build_ecm_lambda_2d(mesh, unit, geom, dummy0);
    std::vector<double> lambda_pert(marker.lambda.size());
    for (std::size_t e = 0; e < lambda_pert.size(); ++e)
        lambda_pert[e] = marker.lambda[e] - lambda0;

    const auto terms = ecm::series_terms(mesh, lambda0, mu, lambda_pert, c.l, 1, solver_rtol);
    const double f0 = ecm::f0_exact(lambda0, mu, c.l);

    ecm::SolverOptions sopt;
    sopt.rtol = solver_rtol;

    std::string errors_csv = "eps,err_order1,err_order2,force\n";
    std::vector<double> err1, err2, forces;
    ecm::DisplacementField last_full;
    for (double eps : eps_list) {
        ecm::MaterialField2D m;
        m.mesh = mesh;
        m.mu = mu;
        m.lambda.resize(lambda_pert.size());
        for (std::size_t e = 0; e < lambda_pert.size(); ++e)
            m.lambda[e] = lambda0 + eps * lambda_pert[e];
        const ecm::DisplacementField full = ecm::solve_tensile_2d(m, c.l, sopt);
        const ecm::DisplacementField s1 = ecm::axpy(terms[0], eps, terms[1]);
        err1.push_back(ecm::h1_diff(full, terms[0]));
        err2.push_back(ecm::h1_diff(full, s1));
        forces.push_back(ecm::tensile_force_2d(m, full));
        errors_csv += ecm::io::fmt(eps) + "," + ecm::io::fmt(err1.back()) + "," +
                      ecm::io::fmt(err2.back()) + "," + ecm::io::fmt(forces.back()) + "\n";
        last_full = full;
    }

    std::string slopes_csv = "order,slope,intercept,floored\n";
    json j;
    if (eps_list.size() >= 3) {
        const ecm::OrderFit fit1 = ecm::error_order_fit(eps_list, err1);
        const ecm::OrderFit fit2 = ecm::error_order_fit(eps_list, err2);
        for (int ord = 1; ord <= 2; ++ord) {
            const ecm::OrderFit& f = ord == 1 ? fit1 : fit2;
            slopes_csv += std::to_string(ord) + "," + ecm::io::fmt(f.slope) + "," +
                          ecm::io::fmt(f.intercept) + "," + (f.floored ? "yes" : "no") + "\n";
        }
        j["slope_order1"] = num(fit1.slope);
        j["slope_order2"] = num(fit2.slope);
    }

    // first-order force coefficient, measured by extrapolating the two
    // smallest eps (removes the quadratic term) against the exact integral
    const double nu0 = ecm::poisson_like(lambda0, mu);
    double pert_integral = 0.0;
    for (double v : lambda_pert) pert_integral += v;
    pert_integral *= mesh.h() * mesh.h();
    const double f1_pred = (1.0 - nu0) * (1.0 - nu0) * c.l * pert_integral;
    if (eps_list.size() >= 2) {
        const double a = eps_list[0], b = eps_list[1];
        const double ga = (forces[0] - f0) / a;
        const double gb = (forces[1] - f0) / b;
        const double f1_meas = (b * ga - a * gb) / (b - a);
        j["f1_measured"] = num(f1_meas);
        j["f1_predicted"] = num(f1_pred);
        j["f1_rel_err"] = num(std::abs(f1_meas - f1_pred) / std::abs(f1_pred));
    }
    j["f0"] = num(f0);
    j["mesh_n"] = mesh_n;

    const std::string dir = resolve_outdir("perturb2d", c.out);
    emit(dir, "errors.csv", errors_csv);
    emit(dir, "slopes.csv", slopes_csv);
    emit(dir, "summary.json", j.dump(2) + "\n");
    emit(dir, "field.vtk", ecm::io::vtk_structured(last_full));

    std::cout << "perturb2d: ";
    if (j.contains("slope_order1"))
        std::cout << "slopes = " << ecm::io::fmt(j["slope_order1"].get<double>()) << " (order 1), "
                  << ecm::io::fmt(j["slope_order2"].get<double>()) << " (order 2), ";
    std::cout << "F0 = " << ecm::io::fmt(f0) << "\n"
              << "wrote " << dir << "/{errors.csv,slopes.csv,summary.json,field.vtk}\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedded cell method lab"};
    app.require_subcommand(1);
    // config keys live in a [command] section; command-line flags win
    app.set_config("--config", "", "key=value config file with a [command] section");

    // ecm1d
    CommonOpts c1;
    double kappa_met = 0, kappa_cer = 0, vol_cer = 0;
    CLI::App* ecm1d = app.add_subcommand("ecm1d", "1D embedded cell fixed point");
    add_common(ecm1d, c1);
    ecm1d->add_option("--kappa-met", kappa_met, "metal stiffness")->required();
    ecm1d->add_option("--kappa-cer", kappa_cer, "ceramic stiffness")->required();
    ecm1d->add_option("--vol-cer", vol_cer, "ceramic volume fraction")->required();

    // ecm2d
    CommonOpts c2;
    double lambda_met2 = 1.0, d_c2 = 1.0, eps2 = 0.1, mu2 = 1.0, vol2 = 0.5;
    double solver_rtol2 = 1e-10;
    int mesh_n2 = 64;
    CLI::App* ecm2d = app.add_subcommand("ecm2d", "2D embedded cell fixed point");
    add_common(ecm2d, c2);
    ecm2d->add_option("--lambda-met", lambda_met2, "metal first Lame parameter")->capture_default_str();
    ecm2d->add_option("--d-c", d_c2, "contrast coefficient D_c")->capture_default_str();
    ecm2d->add_option("--eps", eps2, "contrast scale (lambda_cer = lambda_met + eps*D_c)")->capture_default_str();
    ecm2d->add_option("--mu", mu2, "shear modulus")->capture_default_str();
    ecm2d->add_option("--vol-cer", vol2, "ceramic volume fraction")->capture_default_str();
    ecm2d->add_option("--mesh-n", mesh_n2, "elements per side")->capture_default_str();
    ecm2d->add_option("--solver-rtol", solver_rtol2, "linear solver tolerance")->capture_default_str();

    // homogenize1d
    CommonOpts c3;
    double kappa_met3 = 2.0, kappa_cer3 = 6.0, vol3 = 0.5;
    std::vector<int> periods3 = {1, 2, 4, 8, 16, 32};
    CLI::App* hom1d = app.add_subcommand("homogenize1d", "1D periodic reference");
    add_common(hom1d, c3);
    hom1d->add_option("--kappa-met", kappa_met3, "metal stiffness")->capture_default_str();
    hom1d->add_option("--kappa-cer", kappa_cer3, "ceramic stiffness")->capture_default_str();
    hom1d->add_option("--vol-cer", vol3, "ceramic volume fraction")->capture_default_str();
    hom1d->add_option("--n-periods", periods3, "period counts to test")->capture_default_str();

    // deltasweep2d
    CommonOpts c4;
    double lambda_met4 = 1.0, d_c4 = 1.0, eps4 = 0.05, mu4 = 1.0, vol4 = 15.0 / 32.0;
    double solver_rtol4 = 1e-10;
    std::vector<int> cells4 = {1, 2, 4};
    int mpp4 = 16;
    CLI::App* sweep2d = app.add_subcommand("deltasweep2d", "2D periodic delta sweep");
    add_common(sweep2d, c4);
    sweep2d->add_option("--lambda-met", lambda_met4, "metal first Lame parameter")->capture_default_str();
    sweep2d->add_option("--d-c", d_c4, "contrast coefficient D_c")->capture_default_str();
    sweep2d->add_option("--eps", eps4, "contrast scale")->capture_default_str();
    sweep2d->add_option("--mu", mu4, "shear modulus")->capture_default_str();
    sweep2d->add_option("--vol-cer", vol4, "ceramic volume fraction")->capture_default_str();
    sweep2d->add_option("--cells", cells4, "cells per side (delta = 1/k)")->capture_default_str();
    sweep2d->add_option("--mesh-per-period", mpp4, "elements per periodic cell")->capture_default_str();
    sweep2d->add_option("--solver-rtol", solver_rtol4, "linear solver tolerance")->capture_default_str();

    // stochastic1d
    CommonOpts c5;
    double kappa_met5 = 2.0, kappa_cer5 = 6.0, vol5 = 0.5;
    std::vector<int> n_cells5 = {100, 1000, 10000};
    int samples5 = 200;
    std::uint64_t seed5 = 1;
    CLI::App* sto1d = app.add_subcommand("stochastic1d", "1D random-cell force experiment");
    add_common(sto1d, c5);
    sto1d->add_option("--kappa-met", kappa_met5, "metal stiffness")->capture_default_str();
    sto1d->add_option("--kappa-cer", kappa_cer5, "ceramic stiffness")->capture_default_str();
    sto1d->add_option("--vol-cer", vol5, "ceramic cell probability")->capture_default_str();
    sto1d->add_option("--n-cells", n_cells5, "cell counts")->capture_default_str();
    sto1d->add_option("--samples", samples5, "samples per cell count")->capture_default_str();
    sto1d->add_option("--seed", seed5, "RNG seed")->capture_default_str();

    // plastic1d
    CommonOpts c6;
    double kappa_cer6 = 2.0, alpha6 = 1.0, beta6 = 1.0, crit6 = 1.0;
    double l_min6 = 0.1, l_max6 = 2.0;
    int points6 = 20;
    CLI::App* pla1d = app.add_subcommand("plastic1d", "1D plastic stress-strain curve");
    add_common(pla1d, c6);
    pla1d->add_option("--kappa-cer", kappa_cer6, "ceramic stiffness")->capture_default_str();
    pla1d->add_option("--alpha", alpha6, "elastic metal slope")->capture_default_str();
    pla1d->add_option("--beta", beta6, "plastic hardening coefficient")->capture_default_str();
    pla1d->add_option("--strain-crit", crit6, "yield strain")->capture_default_str();
    pla1d->add_option("--l-min", l_min6, "smallest elongation")->capture_default_str();
    pla1d->add_option("--l-max", l_max6, "largest elongation")->capture_default_str();
    pla1d->add_option("--points", points6, "grid size")->capture_default_str();

    // perturb2d
    CommonOpts c7;
    double lambda07 = 1.0, d_c7 = 1.0, mu7 = 1.0, vol7 = 0.5;
    double solver_rtol7 = 1e-10;
    int mesh_n7 = 64;
    std::vector<double> eps_list7 = {0.02, 0.04, 0.08};
    CLI::App* per2d = app.add_subcommand("perturb2d", "2D perturbation-order study");
    add_common(per2d, c7);
    per2d->add_option("--lambda0", lambda07, "base first Lame parameter")->capture_default_str();
    per2d->add_option("--d-c", d_c7, "contrast coefficient D_c")->capture_default_str();
    per2d->add_option("--mu", mu7, "shear modulus")->capture_default_str();
    per2d->add_option("--vol-cer", vol7, "ceramic volume fraction")->capture_default_str();
    per2d->add_option("--mesh-n", mesh_n7, "elements per side")->capture_default_str();
    per2d->add_option("--eps-list", eps_list7, "ascending contrast scales")->capture_default_str();
    per2d->add_option("--solver-rtol", solver_rtol7, "linear solver tolerance")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    // the command named on the command line comes first; a config file
    // section can trigger a command only when none was named
    const CLI::App* chosen = app.get_subcommands().front();
    try {
        if (chosen == ecm1d) return run_ecm1d(c1, kappa_met, kappa_cer, vol_cer);
        if (chosen == ecm2d)
            return run_ecm2d(c2, lambda_met2, d_c2, eps2, mu2, vol2, mesh_n2, solver_rtol2);
        if (chosen == hom1d)
            return run_homogenize1d(c3, kappa_met3, kappa_cer3, vol3, periods3);
        if (chosen == sweep2d)
            return run_deltasweep2d(c4, lambda_met4, d_c4, eps4, mu4, vol4, cells4, mpp4,
                                    solver_rtol4);
        if (chosen == sto1d)
            return run_stochastic1d(c5, kappa_met5, kappa_cer5, vol5, n_cells5, samples5, seed5);
        if (chosen == pla1d)
            return run_plastic1d(c6, kappa_cer6, alpha6, beta6, crit6, l_min6, l_max6, points6);
        if (chosen == per2d)
            return run_perturb2d(c7, lambda07, d_c7, mu7, vol7, mesh_n7, eps_list7,
                                 solver_rtol7);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no command selected\n";
    return kExitError;
}
