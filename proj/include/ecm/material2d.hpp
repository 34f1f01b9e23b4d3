#pragma once

#include <map>
#include <vector>

#include "ecm/mesh2d.hpp"
#include "ecm/params.hpp"

namespace ecm {

// Concentric ceramic disk (radius r1) and metal annulus (outer radius r2)
// centered at (1/2, 1/2); the dummy material fills the rest of the square.
struct EmbeddedCellGeometry2D {
    double r1 = 0.0;
    double r2 = 0.0;
};

// r2 = 1/10 (the largest admissible cell) and r1 = r2 * sqrt(vol_cer), the
// unique radii with |cell ceramic| / |cell metal| = vol_cer / vol_met.
EmbeddedCellGeometry2D solve_ecm_radii(double vol_cer);

// Elementwise first Lame parameter; mu is one constant for the whole domain.
struct MaterialField2D {
    Mesh2D mesh{1};
    std::vector<double> lambda;  // one value per element
    double mu = 0.0;

    void validate() const;
};

// Phase assignment by element centroid. Errors when the element diameter
// exceeds r1 (no element could land in the ceramic disk).
MaterialField2D build_ecm_lambda_2d(const Mesh2D& mesh, const PhaseParams& p,
                                    const EmbeddedCellGeometry2D& geom,
                                    double lambda_dummy);

// Square array of ceramic disks, one centered per periodic cell of size
// delta = 1/cells_per_side, each with area fraction vol_cer inside its cell;
// metal elsewhere. The mesh must subdivide every cell by at least 8 elements.
MaterialField2D build_periodic_lambda_2d(const Mesh2D& mesh, const PhaseParams& p,
                                         int cells_per_side);

// Element-count measure per distinct lambda value.
std::map<double, double> volume_fractions(const MaterialField2D& f);

}  // namespace ecm
