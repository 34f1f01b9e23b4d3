#include "ecm/material2d.hpp"

#include <cmath>

#include "ecm/errors.hpp"

namespace ecm {

EmbeddedCellGeometry2D solve_ecm_radii(double vol_cer) {
    if (!(vol_cer > 0.0 && vol_cer < 1.0))
        throw InvalidArgument("solve_ecm_radii needs 0 < vol_cer < 1");
    EmbeddedCellGeometry2D g;
    g.r2 = 0.1;
    g.r1 = g.r2 * std::sqrt(vol_cer);
    return g;
}

void MaterialField2D::validate() const {
    if (lambda.size() != static_cast<std::size_t>(mesh.num_elements()))
        throw InvalidArgument("lambda size must match element count");
    if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
    for (double v : lambda)
        if (v < 0.0) throw InvalidArgument("lambda values must be nonnegative");
}

MaterialField2D build_ecm_lambda_2d(const Mesh2D& mesh, const PhaseParams& p,
                                    const EmbeddedCellGeometry2D& geom,
                                    double lambda_dummy) {
    p.validate();
    if (geom.r2 <= 0.0 || geom.r1 < 0.0 || geom.r1 > geom.r2 || geom.r2 > 0.1)
        throw InvalidArgument("embedded cell radii must satisfy 0 <= r1 <= r2 <= 0.1");
    if (lambda_dummy < 0.0) throw InvalidArgument("lambda_dummy must be nonnegative");
    const double diam = mesh.h() * std::sqrt(2.0);
    if (geom.r1 > 0.0 && diam > geom.r1)
        throw ResolutionError("mesh too coarse: element diameter exceeds r1");

    MaterialField2D f;
    f.mesh = mesh;
    f.mu = p.mu;
    f.lambda.resize(static_cast<std::size_t>(mesh.num_elements()));
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const auto c = mesh.elem_centroid(e);
        const double dx = c[0] - 0.5, dy = c[1] - 0.5;
        const double d2 = dx * dx + dy * dy;
        double v = lambda_dummy;
        if (d2 <= geom.r1 * geom.r1)
            v = p.lambda_cer;
        else if (d2 <= geom.r2 * geom.r2)
            v = p.lambda_met;
        f.lambda[static_cast<std::size_t>(e)] = v;
    }
    f.validate();
    return f;
}

MaterialField2D build_periodic_lambda_2d(const Mesh2D& mesh, const PhaseParams& p,
                                         int cells_per_side) {
    p.validate();
    if (cells_per_side < 1) throw InvalidArgument("cells_per_side must be >= 1");
    if (mesh.n % cells_per_side != 0)
        throw ResolutionError("mesh does not subdivide the periodic cells");
    if (mesh.n / cells_per_side < 8)
        throw ResolutionError("need at least 8 elements per period");
    if (p.vol_cer > std::atan(1.0) /* pi/4 */)
        throw InvalidArgument("disk with area fraction vol_cer would not fit its cell");

    const double delta = 1.0 / cells_per_side;
    const double radius = delta * std::sqrt(p.vol_cer / (4.0 * std::atan(1.0)));

    MaterialField2D f;
    f.mesh = mesh;
    f.mu = p.mu;
    f.lambda.resize(static_cast<std::size_t>(mesh.num_elements()));
    for (int e = 0; e < mesh.num_elements(); ++e) {
        const auto c = mesh.elem_centroid(e);
        // center of the periodic cell owning this centroid
        const double cx = (std::floor(c[0] / delta) + 0.5) * delta;
        const double cy = (std::floor(c[1] / delta) + 0.5) * delta;
        const double dx = c[0] - cx, dy = c[1] - cy;
        const bool ceramic = dx * dx + dy * dy <= radius * radius;
        f.lambda[static_cast<std::size_t>(e)] = ceramic ? p.lambda_cer : p.lambda_met;
    }
    f.validate();
    return f;
}

std::map<double, double> volume_fractions(const MaterialField2D& f) {
    f.validate();
    const double cell = f.mesh.h() * f.mesh.h();
    std::map<double, double> out;
    for (double v : f.lambda) out[v] += cell;
    return out;
}

}  // namespace ecm
