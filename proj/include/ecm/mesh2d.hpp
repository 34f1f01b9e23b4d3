#pragma once

#include <array>

namespace ecm {

// Uniform n x n quadrilateral mesh of the unit square. Nodes are numbered
// row-major bottom to top: node(i,j) = j*(n+1)+i, and elements the same way.
// Element nodes are listed counterclockwise starting at the lower-left corner.
struct Mesh2D {
    int n = 1;

    explicit Mesh2D(int n);

    double h() const { return 1.0 / n; }
    int num_nodes() const { return (n + 1) * (n + 1); }
    int num_elements() const { return n * n; }
    int node_id(int i, int j) const { return j * (n + 1) + i; }
    int elem_id(int i, int j) const { return j * n + i; }
    std::array<int, 4> elem_nodes(int e) const;
    std::array<double, 2> node_coord(int node) const;
    std::array<double, 2> elem_centroid(int e) const;

    bool operator==(const Mesh2D& other) const { return n == other.n; }
};

}  // namespace ecm
