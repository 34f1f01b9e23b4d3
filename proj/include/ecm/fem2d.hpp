#pragma once

#include <functional>
#include <vector>

#include "ecm/material2d.hpp"

namespace ecm {

struct SolveStats {
    long iterations = 0;
    double residual = 0.0;  // final relative residual of the linear solve
    bool converged = true;
};

// Bilinear nodal displacement field. For tensile solutions u2 = 0 on the
// bottom edge, u2 = l on the top edge, and u1 has zero mean over the square.
struct DisplacementField {
    Mesh2D mesh{1};
    double l = 0.0;
    std::vector<double> u1, u2;  // nodal values, size (n+1)^2
    SolveStats stats;

    static DisplacementField zero(const Mesh2D& mesh, double l = 0.0);
    static DisplacementField sample(const Mesh2D& mesh, double l,
                                    const std::function<double(double, double)>& f1,
                                    const std::function<double(double, double)>& f2);
    void validate() const;
};

// Assembled linear functional on the displacement space. make_perturbation_rhs
// builds F(v) = -Int lambda_src tr e(u_src) tr e(v) + 2 mu_src e(u_src):e(v) dx
// with elementwise (lambda_src, mu_src); it vanishes on constant shifts of u1.
struct RhsFunctional {
    Mesh2D mesh{1};
    std::vector<double> values;  // one entry per dof: (u1_0, u2_0, u1_1, ...)

    static RhsFunctional zero(const Mesh2D& mesh);
};

RhsFunctional make_perturbation_rhs(const Mesh2D& mesh,
                                    const std::vector<double>& lambda_src,
                                    const std::vector<double>& mu_src,
                                    const DisplacementField& u_src);

struct SolverOptions {
    double rtol = 1e-10;
    int max_iter_scale = 10;  // CG iteration cap = scale * ndof
    const DisplacementField* guess = nullptr;
};

// Greased tensile problem: u2 prescribed on bottom/top, u1 free with zero
// mean (one pinned dof during the solve, mean shifted out afterwards).
DisplacementField solve_tensile_2d(const MaterialField2D& mat, double l,
                                   const RhsFunctional& rhs,
                                   const SolverOptions& opt = {});
DisplacementField solve_tensile_2d(const MaterialField2D& mat, double l,
                                   const SolverOptions& opt = {});

// F = Int_Omega lambda tr e(u) + 2 mu d2 u2 dx (2x2 Gauss per element).
double tensile_force_2d(const MaterialField2D& mat, const DisplacementField& u);

// Same stress component integrated over the top edge only.
double boundary_force_top(const MaterialField2D& mat, const DisplacementField& u);

double h1_norm(const DisplacementField& u);
double h1_seminorm(const DisplacementField& u);
double h1_diff(const DisplacementField& a, const DisplacementField& b);
double h1_seminorm_diff(const DisplacementField& a, const DisplacementField& b);
double l2_diff(const DisplacementField& a, const DisplacementField& b);

double mean_u1(const DisplacementField& u);
// Int d(u_comp)/d(x_dir) dx; comp and dir are 1-based.
double mean_partial(const DisplacementField& u, int comp, int dir);
double mean_partial2_u2(const DisplacementField& u);

// a + s * b (meshes must match; l combines the same way).
DisplacementField axpy(const DisplacementField& a, double s, const DisplacementField& b);

}  // namespace ecm
