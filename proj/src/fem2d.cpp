#include "ecm/fem2d.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <array>
#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

namespace {

constexpr double kGauss = 0.57735026918962576451;  // 1/sqrt(3)

struct RefData {
    // 2x2 Gauss data on the reference square, mapped to an h x h element.
    // Every element of the uniform mesh shares these.
    std::array<std::array<double, 4>, 4> N;     // [gauss][node]
    std::array<std::array<double, 4>, 4> dNdx;  // physical derivatives
    std::array<std::array<double, 4>, 4> dNdy;
    double w = 0.0;  // physical weight per gauss point, h^2/4
    Eigen::Matrix<double, 8, 8> KL;  // Int (div phi_i)(div phi_j)
    Eigen::Matrix<double, 8, 8> KM;  // Int 2 e(phi_i):e(phi_j)
};

void shape(double xi, double eta, std::array<double, 4>& N, std::array<double, 4>& dNdxi,
           std::array<double, 4>& dNdeta) {
    N = {0.25 * (1 - xi) * (1 - eta), 0.25 * (1 + xi) * (1 - eta),
         0.25 * (1 + xi) * (1 + eta), 0.25 * (1 - xi) * (1 + eta)};
    dNdxi = {-0.25 * (1 - eta), 0.25 * (1 - eta), 0.25 * (1 + eta), -0.25 * (1 + eta)};
    dNdeta = {-0.25 * (1 - xi), -0.25 * (1 + xi), 0.25 * (1 + xi), 0.25 * (1 - xi)};
}

RefData make_ref_data(double h) {
    RefData ref;
    ref.w = h * h / 4.0;
    ref.KL.setZero();
    ref.KM.setZero();
    const double pts[2] = {-kGauss, kGauss};
    int g = 0;
    for (double eta : pts) {
        for (double xi : pts) {
            std::array<double, 4> N, dxi, deta;
            shape(xi, eta, N, dxi, deta);
            for (int a = 0; a < 4; ++a) {
                ref.N[g][a] = N[a];
                ref.dNdx[g][a] = dxi[a] * 2.0 / h;
                ref.dNdy[g][a] = deta[a] * 2.0 / h;
            }
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    const double ax = ref.dNdx[g][a], ay = ref.dNdy[g][a];
                    const double bx = ref.dNdx[g][b], by = ref.dNdy[g][b];
                    // div(phi_{a,c}) = d_c N_a; rows/cols ordered (u1,u2) per node
                    ref.KL(2 * a, 2 * b) += ref.w * ax * bx;
                    ref.KL(2 * a, 2 * b + 1) += ref.w * ax * by;
                    ref.KL(2 * a + 1, 2 * b) += ref.w * ay * bx;
                    ref.KL(2 * a + 1, 2 * b + 1) += ref.w * ay * by;
                    // 2 e(phi_i):e(phi_j)
                    ref.KM(2 * a, 2 * b) += ref.w * (2.0 * ax * bx + ay * by);
                    ref.KM(2 * a, 2 * b + 1) += ref.w * ay * bx;
                    ref.KM(2 * a + 1, 2 * b) += ref.w * ax * by;
                    ref.KM(2 * a + 1, 2 * b + 1) += ref.w * (2.0 * ay * by + ax * bx);
                }
            }
            ++g;
        }
    }
    return ref;
}

// gathers the 8 local dof values of u on element e
Eigen::Matrix<double, 8, 1> gather(const DisplacementField& u, int e) {
    const auto nodes = u.mesh.elem_nodes(e);
    Eigen::Matrix<double, 8, 1> v;
    for (int a = 0; a < 4; ++a) {
        v(2 * a) = u.u1[static_cast<std::size_t>(nodes[a])];
        v(2 * a + 1) = u.u2[static_cast<std::size_t>(nodes[a])];
    }
    return v;
}

}  // namespace

DisplacementField DisplacementField::zero(const Mesh2D& mesh, double l) {
    DisplacementField u;
    u.mesh = mesh;
    u.l = l;
    u.u1.assign(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
    u.u2.assign(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
    return u;
}

DisplacementField DisplacementField::sample(const Mesh2D& mesh, double l,
                                            const std::function<double(double, double)>& f1,
                                            const std::function<double(double, double)>& f2) {
    DisplacementField u = zero(mesh, l);
    for (int k = 0; k < mesh.num_nodes(); ++k) {
        const auto xy = mesh.node_coord(k);
        u.u1[static_cast<std::size_t>(k)] = f1(xy[0], xy[1]);
        u.u2[static_cast<std::size_t>(k)] = f2(xy[0], xy[1]);
    }
    return u;
}

void DisplacementField::validate() const {
    if (u1.size() != static_cast<std::size_t>(mesh.num_nodes()) ||
        u2.size() != static_cast<std::size_t>(mesh.num_nodes()))
        throw InvalidArgument("displacement vectors must match the node count");
}

RhsFunctional RhsFunctional::zero(const Mesh2D& mesh) {
    RhsFunctional f;
    f.mesh = mesh;
    f.values.assign(static_cast<std::size_t>(2 * mesh.num_nodes()), 0.0);
    return f;
}

RhsFunctional make_perturbation_rhs(const Mesh2D& mesh,
                                    const std::vector<double>& lambda_src,
                                    const std::vector<double>& mu_src,
                                    const DisplacementField& u_src) {
    if (lambda_src.size() != static_cast<std::size_t>(mesh.num_elements()) ||
        mu_src.size() != static_cast<std::size_t>(mesh.num_elements()))
        throw InvalidArgument("source coefficient size must match element count");
    u_src.validate();
    if (!(u_src.mesh == mesh)) throw InvalidArgument("u_src lives on a different mesh");

    const RefData ref = make_ref_data(mesh.h());
    RhsFunctional f = RhsFunctional::zero(mesh);
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const Eigen::Matrix<double, 8, 8> Ke =
            lambda_src[static_cast<std::size_t>(e)] * ref.KL +
            mu_src[static_cast<std::size_t>(e)] * ref.KM;
        const Eigen::Matrix<double, 8, 1> fe = -(Ke * gather(u_src, e));
        const auto nodes = mesh.elem_nodes(e);
        for (int a = 0; a < 4; ++a) {
            f.values[static_cast<std::size_t>(2 * nodes[a])] += fe(2 * a);
            f.values[static_cast<std::size_t>(2 * nodes[a] + 1)] += fe(2 * a + 1);
        }
    }
    return f;
}

DisplacementField solve_tensile_2d(const MaterialField2D& mat, double l,
                                   const SolverOptions& opt) {
    return solve_tensile_2d(mat, l, RhsFunctional::zero(mat.mesh), opt);
}

DisplacementField solve_tensile_2d(const MaterialField2D& mat, double l,
                                   const RhsFunctional& rhs, const SolverOptions& opt) {
    mat.validate();
    const Mesh2D& mesh = mat.mesh;
    if (!(rhs.mesh == mesh)) throw InvalidArgument("rhs lives on a different mesh");
    const int n = mesh.n;
    const int ndof = 2 * mesh.num_nodes();
    const RefData ref = make_ref_data(mesh.h());

    // Dirichlet table: u2 on the bottom/top edges; one pinned u1 dof makes the
    // operator definite (the shift family is removed again after the solve).
    std::vector<char> fixed(static_cast<std::size_t>(ndof), 0);
    std::vector<double> fixed_val(static_cast<std::size_t>(ndof), 0.0);
    for (int i = 0; i <= n; ++i) {
        const int bottom = 2 * mesh.node_id(i, 0) + 1;
        const int top = 2 * mesh.node_id(i, n) + 1;
        fixed[static_cast<std::size_t>(bottom)] = 1;
        fixed_val[static_cast<std::size_t>(bottom)] = 0.0;
        fixed[static_cast<std::size_t>(top)] = 1;
        fixed_val[static_cast<std::size_t>(top)] = l;
    }
    const int pin = 0;  // u1 at node 0
    fixed[pin] = 1;
    fixed_val[pin] = 0.0;

    Eigen::VectorXd b(ndof);
    for (int d = 0; d < ndof; ++d) b(d) = rhs.values[static_cast<std::size_t>(d)];

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(mesh.num_elements()) * 64 + static_cast<std::size_t>(ndof));
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const Eigen::Matrix<double, 8, 8> Ke =
            mat.lambda[static_cast<std::size_t>(e)] * ref.KL + mat.mu * ref.KM;
        const auto nodes = mesh.elem_nodes(e);
        int dofs[8];
        for (int a = 0; a < 4; ++a) {
            dofs[2 * a] = 2 * nodes[a];
            dofs[2 * a + 1] = 2 * nodes[a] + 1;
        }
        for (int r = 0; r < 8; ++r) {
            const int gr = dofs[r];
            if (fixed[static_cast<std::size_t>(gr)]) continue;
            for (int c = 0; c < 8; ++c) {
                const int gc = dofs[c];
                if (fixed[static_cast<std::size_t>(gc)]) {
                    b(gr) -= Ke(r, c) * fixed_val[static_cast<std::size_t>(gc)];
                } else {
                    trips.emplace_back(gr, gc, Ke(r, c));
                }
            }
        }
    }
    for (int d = 0; d < ndof; ++d) {
        if (fixed[static_cast<std::size_t>(d)]) {
            trips.emplace_back(d, d, 1.0);
            b(d) = fixed_val[static_cast<std::size_t>(d)];
        }
    }

    Eigen::SparseMatrix<double> K(ndof, ndof);
    K.setFromTriplets(trips.begin(), trips.end());

    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>>
        cg;
    cg.setTolerance(opt.rtol);
    cg.setMaxIterations(static_cast<Eigen::Index>(opt.max_iter_scale) * ndof);
    cg.compute(K);

    Eigen::VectorXd x;
    if (opt.guess != nullptr) {
        opt.guess->validate();
        if (!(opt.guess->mesh == mesh)) throw InvalidArgument("guess mesh mismatch");
        Eigen::VectorXd x0(ndof);
        // shift the guess into the pinned gauge so it starts near the solution
        const double shift = opt.guess->u1[0];
        for (int k = 0; k < mesh.num_nodes(); ++k) {
            x0(2 * k) = opt.guess->u1[static_cast<std::size_t>(k)] - shift;
            x0(2 * k + 1) = opt.guess->u2[static_cast<std::size_t>(k)];
        }
        for (int d = 0; d < ndof; ++d)
            if (fixed[static_cast<std::size_t>(d)]) x0(d) = fixed_val[static_cast<std::size_t>(d)];
        x = cg.solveWithGuess(b, x0);
    } else {
        x = cg.solve(b);
    }
    if (cg.info() != Eigen::Success)
        throw SolverError("conjugate gradient missed its tolerance", cg.iterations(),
                          cg.error());

    DisplacementField u = DisplacementField::zero(mesh, l);
    for (int k = 0; k < mesh.num_nodes(); ++k) {
        u.u1[static_cast<std::size_t>(k)] = x(2 * k);
        u.u2[static_cast<std::size_t>(k)] = x(2 * k + 1);
    }
    // exact boundary data (the solve kept these fixed; re-set against drift)
    for (int i = 0; i <= n; ++i) {
        u.u2[static_cast<std::size_t>(mesh.node_id(i, 0))] = 0.0;
        u.u2[static_cast<std::size_t>(mesh.node_id(i, n))] = l;
    }
    const double mean = mean_u1(u);
    for (double& v : u.u1) v -= mean;

    u.stats.iterations = cg.iterations();
    u.stats.residual = cg.error();
    u.stats.converged = true;
    return u;
}

namespace {

// shared quadrature loop: calls f(e, g, du1dx, du1dy, du2dx, du2dy, u1, u2, w)
template <typename F>
void for_each_gauss(const DisplacementField& u, F&& f) {
    const RefData ref = make_ref_data(u.mesh.h());
    for (int e = 0; e < u.mesh.num_elements(); ++e) {
        const auto nodes = u.mesh.elem_nodes(e);
        double v1[4], v2[4];
        for (int a = 0; a < 4; ++a) {
            v1[a] = u.u1[static_cast<std::size_t>(nodes[a])];
            v2[a] = u.u2[static_cast<std::size_t>(nodes[a])];
        }
        for (int g = 0; g < 4; ++g) {
            double u1v = 0, u2v = 0, d1x = 0, d1y = 0, d2x = 0, d2y = 0;
            for (int a = 0; a < 4; ++a) {
                u1v += ref.N[g][a] * v1[a];
                u2v += ref.N[g][a] * v2[a];
                d1x += ref.dNdx[g][a] * v1[a];
                d1y += ref.dNdy[g][a] * v1[a];
                d2x += ref.dNdx[g][a] * v2[a];
                d2y += ref.dNdy[g][a] * v2[a];
            }
            f(e, u1v, u2v, d1x, d1y, d2x, d2y, ref.w);
        }
    }
}

}  // namespace

double tensile_force_2d(const MaterialField2D& mat, const DisplacementField& u) {
    mat.validate();
    u.validate();
    if (!(mat.mesh == u.mesh)) throw InvalidArgument("material/displacement mesh mismatch");
    double F = 0.0;
    for_each_gauss(u, [&](int e, double, double, double d1x, double, double, double d2y,
                          double w) {
        F += w * (mat.lambda[static_cast<std::size_t>(e)] * (d1x + d2y) + 2.0 * mat.mu * d2y);
    });
    return F;
}

double boundary_force_top(const MaterialField2D& mat, const DisplacementField& u) {
    mat.validate();
    u.validate();
    if (!(mat.mesh == u.mesh)) throw InvalidArgument("material/displacement mesh mismatch");
    const Mesh2D& mesh = u.mesh;
    const double h = mesh.h();
    double F = 0.0;
    const double pts[2] = {-kGauss, kGauss};
    for (int i = 0; i < mesh.n; ++i) {
        const int e = mesh.elem_id(i, mesh.n - 1);
        const auto nodes = mesh.elem_nodes(e);
        for (double xi : pts) {
            std::array<double, 4> N, dxi, deta;
            shape(xi, 1.0, N, dxi, deta);
            double d1x = 0, d2y = 0;
            for (int a = 0; a < 4; ++a) {
                d1x += dxi[a] * 2.0 / h * u.u1[static_cast<std::size_t>(nodes[a])];
                d2y += deta[a] * 2.0 / h * u.u2[static_cast<std::size_t>(nodes[a])];
            }
            F += (h / 2.0) *
                 (mat.lambda[static_cast<std::size_t>(e)] * (d1x + d2y) + 2.0 * mat.mu * d2y);
        }
    }
    return F;
}

double h1_norm(const DisplacementField& u) {
    u.validate();
    double acc = 0.0;
    for_each_gauss(u, [&](int, double u1v, double u2v, double d1x, double d1y, double d2x,
                          double d2y, double w) {
        acc += w * (u1v * u1v + u2v * u2v + d1x * d1x + d1y * d1y + d2x * d2x + d2y * d2y);
    });
    return std::sqrt(acc);
}

double h1_seminorm(const DisplacementField& u) {
    u.validate();
    double acc = 0.0;
    for_each_gauss(u, [&](int, double, double, double d1x, double d1y, double d2x,
                          double d2y, double w) {
        acc += w * (d1x * d1x + d1y * d1y + d2x * d2x + d2y * d2y);
    });
    return std::sqrt(acc);
}

DisplacementField axpy(const DisplacementField& a, double s, const DisplacementField& b) {
    a.validate();
    b.validate();
    if (!(a.mesh == b.mesh)) throw InvalidArgument("axpy mesh mismatch");
    DisplacementField out = a;
    out.l = a.l + s * b.l;
    for (std::size_t k = 0; k < a.u1.size(); ++k) {
        out.u1[k] = a.u1[k] + s * b.u1[k];
        out.u2[k] = a.u2[k] + s * b.u2[k];
    }
    return out;
}

double h1_diff(const DisplacementField& a, const DisplacementField& b) {
    return h1_norm(axpy(a, -1.0, b));
}

double h1_seminorm_diff(const DisplacementField& a, const DisplacementField& b) {
    return h1_seminorm(axpy(a, -1.0, b));
}

double l2_diff(const DisplacementField& a, const DisplacementField& b) {
    const DisplacementField d = axpy(a, -1.0, b);
    double acc = 0.0;
    for_each_gauss(d, [&](int, double u1v, double u2v, double, double, double, double,
                          double w) { acc += w * (u1v * u1v + u2v * u2v); });
    return std::sqrt(acc);
}

double mean_u1(const DisplacementField& u) {
    u.validate();
    double acc = 0.0;
    for_each_gauss(u, [&](int, double u1v, double, double, double, double, double,
                          double w) { acc += w * u1v; });
    return acc;
}

double mean_partial(const DisplacementField& u, int comp, int dir) {
    u.validate();
    if ((comp != 1 && comp != 2) || (dir != 1 && dir != 2))
        throw InvalidArgument("comp and dir must be 1 or 2");
    double acc = 0.0;
    for_each_gauss(u, [&](int, double, double, double d1x, double d1y, double d2x,
                          double d2y, double w) {
        const double g = comp == 1 ? (dir == 1 ? d1x : d1y) : (dir == 1 ? d2x : d2y);
        acc += w * g;
    });
    return acc;
}

double mean_partial2_u2(const DisplacementField& u) { return mean_partial(u, 2, 2); }

}  // namespace ecm
