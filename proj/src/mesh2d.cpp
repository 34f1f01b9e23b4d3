#include "ecm/mesh2d.hpp"

#include "ecm/errors.hpp"

namespace ecm {

Mesh2D::Mesh2D(int n) : n(n) {
    if (n < 1) throw InvalidArgument("mesh needs n >= 1");
}

std::array<int, 4> Mesh2D::elem_nodes(int e) const {
    const int i = e % n;
    const int j = e / n;
    return {node_id(i, j), node_id(i + 1, j), node_id(i + 1, j + 1), node_id(i, j + 1)};
}

std::array<double, 2> Mesh2D::node_coord(int node) const {
    const int i = node % (n + 1);
    const int j = node / (n + 1);
    return {static_cast<double>(i) / n, static_cast<double>(j) / n};
}

std::array<double, 2> Mesh2D::elem_centroid(int e) const {
    const int i = e % n;
    const int j = e / n;
    return {(i + 0.5) / n, (j + 0.5) / n};
}

}  // namespace ecm
