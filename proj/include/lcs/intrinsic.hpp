#pragma once

#include <queue>
#include <vector>

#include "lcs/common.hpp"
#include "lcs/hyperbolic.hpp"

namespace lcs {

// All-pairs shortest-path table over a mesh.  The result is a genuine metric
// on the vertex set: symmetric (enforced against rounding by taking the
// direction-wise minimum) and exactly triangle since path concatenation is a
// path.  Shortest-path trees are kept so callers can reconstruct geodesics.
class IntrinsicDistanceOracle {
public:
    IntrinsicDistanceOracle() = default;

    explicit IntrinsicDistanceOracle(const HyperbolicMesh& mesh) : n_(mesh.size()) {
        dist_.assign(static_cast<std::size_t>(n_) * n_, infinity);
        parent_.assign(static_cast<std::size_t>(n_) * n_, -1);
        minEdge_ = infinity;
        maxEdge_ = 0.0;
        for (double w : mesh.weights) {
            minEdge_ = std::min(minEdge_, w);
            maxEdge_ = std::max(maxEdge_, w);
        }
        for (int src = 0; src < n_; ++src) dijkstra(mesh, src);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double v = std::min(at(i, j), at(j, i));
                if (v == infinity) throw InputError("IntrinsicDistanceOracle: mesh is not connected");
                at(i, j) = at(j, i) = v;
            }
    }

    // Rebuild from a stored distance table (no path information).
    static IntrinsicDistanceOracle fromTable(int n, std::vector<double> table) {
        if (static_cast<std::size_t>(n) * n != table.size())
            throw InputError("IntrinsicDistanceOracle: table size mismatch");
        IntrinsicDistanceOracle o;
        o.n_ = n;
        o.dist_ = std::move(table);
        return o;
    }

    int size() const { return n_; }
    bool hasPaths() const { return !parent_.empty(); }
    double minEdgeWeight() const { return minEdge_; }
    double maxEdgeWeight() const { return maxEdge_; }
    const std::vector<double>& table() const { return dist_; }

    double distance(int a, int b) const {
        check(a);
        check(b);
        return dist_[static_cast<std::size_t>(a) * n_ + b];
    }

    // Vertex sequence of a shortest path from a to b, endpoints included.
    std::vector<int> shortestPath(int a, int b) const {
        check(a);
        check(b);
        if (!hasPaths()) throw InputError("IntrinsicDistanceOracle: no path data (built from table)");
        std::vector<int> path{b};
        while (path.back() != a) {
            const int prev = parent_[static_cast<std::size_t>(a) * n_ + path.back()];
            path.push_back(prev);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw InputError("IntrinsicDistanceOracle: vertex out of range");
    }

    double& at(int i, int j) { return dist_[static_cast<std::size_t>(i) * n_ + j]; }

    void dijkstra(const HyperbolicMesh& mesh, int src) {
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        at(src, src) = 0.0;
        heap.emplace(0.0, src);
        std::vector<char> done(static_cast<std::size_t>(n_), 0);
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (done[static_cast<std::size_t>(v)]) continue;
            done[static_cast<std::size_t>(v)] = 1;
            for (auto [u, w] : mesh.adjacency[static_cast<std::size_t>(v)]) {
                const double cand = d + w;
                if (cand < at(src, u)) {
                    at(src, u) = cand;
                    parent_[static_cast<std::size_t>(src) * n_ + u] = v;
                    heap.emplace(cand, u);
                }
            }
        }
    }

    int n_ = 0;
    std::vector<double> dist_;
    std::vector<int> parent_;
    double minEdge_ = 0.0;
    double maxEdge_ = 0.0;
};

} // namespace lcs
