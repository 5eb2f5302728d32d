#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "lcs/common.hpp"

namespace lcs {

// Points of the hyperbolic plane live on the future sheet of the unit
// hyperboloid <v,v> = -1 in 1+2 Minkowski space; distances are
// arcosh(-<u,v>).
using HPoint = std::array<double, 3>;

inline double lorentzInner(const HPoint& a, const HPoint& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline HPoint hyperboloidPoint(double rho, double theta) {
    return {std::cosh(rho), std::sinh(rho) * std::cos(theta), std::sinh(rho) * std::sin(theta)};
}

inline double hyperbolicDistance(const HPoint& a, const HPoint& b) {
    // Clamp guards against values dipping below 1 by rounding.
    return std::acosh(std::max(1.0, -lorentzInner(a, b)));
}

// Undirected geodesic-length graph over hyperboloid vertices.  Edge weights
// are the exact hyperbolic distances of the endpoints.
struct HyperbolicMesh {
    std::vector<HPoint> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;                           // parallel to edges
    std::vector<std::vector<std::pair<int, double>>> adjacency;

    int size() const { return static_cast<int>(vertices.size()); }

    void addEdge(int a, int b) { edges.emplace_back(a, b); }

    // Fill weights and adjacency from vertices + edges.
    void finalize() {
        weights.clear();
        weights.reserve(edges.size());
        adjacency.assign(vertices.size(), {});
        for (auto [a, b] : edges) {
            const double w = hyperbolicDistance(vertices[static_cast<std::size_t>(a)],
                                                vertices[static_cast<std::size_t>(b)]);
            weights.push_back(w);
            adjacency[static_cast<std::size_t>(a)].emplace_back(b, w);
            adjacency[static_cast<std::size_t>(b)].emplace_back(a, w);
        }
    }
};

inline InvariantReport validateMesh(const HyperbolicMesh& mesh, double tolerance = defaultTolerance) {
    for (int i = 0; i < mesh.size(); ++i) {
        const HPoint& v = mesh.vertices[static_cast<std::size_t>(i)];
        if (std::abs(lorentzInner(v, v) + 1.0) > 1e-12 || v[0] <= 0.0)
            return {false, "onHyperboloid", {i, -1, -1}};
    }
    for (std::size_t e = 0; e < mesh.edges.size(); ++e)
        if (!(mesh.weights[e] > tolerance))
            return {false, "positiveEdgeWeight", {static_cast<int>(e), -1, -1}};
    // Connectivity by breadth-first search from vertex 0.
    if (mesh.size() > 0) {
        std::vector<char> seen(static_cast<std::size_t>(mesh.size()), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (auto [u, w] : mesh.adjacency[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        for (int i = 0; i < mesh.size(); ++i)
            if (!seen[static_cast<std::size_t>(i)]) return {false, "connected", {i, -1, -1}};
    }
    return {};
}

// Triangulated geodesic disk around the basepoint (1,0,0): ring k of 2*res
// rings sits at radius k/(2*res)*radius and carries 6k vertices, so angular
// and radial edge lengths stay comparable.  Every ring contains the angles
// 2*pi*s/6, which keeps exact radial chains through the mesh (the oracle
// distance from center to any such boundary vertex is the radius itself).
inline HyperbolicMesh buildDiskMesh(double radius, int resolution) {
    if (!(radius > 0.0) || resolution < 1) throw InputError("buildDiskMesh: bad radius/resolution");
    const int rings = 2 * resolution;
    HyperbolicMesh mesh;
    mesh.vertices.push_back(hyperboloidPoint(0.0, 0.0));
    std::vector<int> ringStart{0};  // start index of ring k (ring 0 = center)
    for (int k = 1; k <= rings; ++k) {
        ringStart.push_back(mesh.size());
        const double rho = radius * k / rings;
        const int m = 6 * k;
        for (int j = 0; j < m; ++j)
            mesh.vertices.push_back(hyperboloidPoint(rho, 2.0 * M_PI * j / m));
    }
    auto ringVertex = [&](int k, int j) {
        const int m = 6 * k;
        return ringStart[static_cast<std::size_t>(k)] + ((j % m) + m) % m;
    };
    for (int k = 1; k <= rings; ++k) {
        const int m = 6 * k;
        for (int j = 0; j < m; ++j) mesh.addEdge(ringVertex(k, j), ringVertex(k, j + 1));
    }
    for (int j = 0; j < 6; ++j) mesh.addEdge(0, ringVertex(1, j));
    for (int k = 1; k < rings; ++k) {
        const int outer = 6 * (k + 1);
        for (int j = 0; j < outer; ++j) {
            // Bracket the outer vertex between the two nearest inner ones.
            const double angle = static_cast<double>(j) / outer;
            const int lo = static_cast<int>(std::floor(angle * 6 * k));
            mesh.addEdge(ringVertex(k + 1, j), ringVertex(k, lo));
            mesh.addEdge(ringVertex(k + 1, j), ringVertex(k, lo + 1));
        }
    }
    mesh.finalize();
    return mesh;
}

// Annular band between two radii; same ring spacing as the disk but with a
// constant vertex count per ring, quad cells split by one diagonal.
inline HyperbolicMesh buildAnnulusMesh(double innerRadius, double outerRadius, int resolution) {
    if (!(0.0 < innerRadius && innerRadius < outerRadius) || resolution < 1)
        throw InputError("buildAnnulusMesh: bad radii/resolution");
    const int rings = 2 * resolution;
    const int m = 12 * resolution;
    HyperbolicMesh mesh;
    for (int k = 0; k <= rings; ++k) {
        const double rho = innerRadius + (outerRadius - innerRadius) * k / rings;
        for (int j = 0; j < m; ++j)
            mesh.vertices.push_back(hyperboloidPoint(rho, 2.0 * M_PI * j / m));
    }
    auto at = [&](int k, int j) { return k * m + ((j % m) + m) % m; };
    for (int k = 0; k <= rings; ++k)
        for (int j = 0; j < m; ++j) mesh.addEdge(at(k, j), at(k, j + 1));
    for (int k = 0; k < rings; ++k)
        for (int j = 0; j < m; ++j) {
            mesh.addEdge(at(k, j), at(k + 1, j));
            mesh.addEdge(at(k, j), at(k + 1, j + 1));
        }
    mesh.finalize();
    return mesh;
}

} // namespace lcs
