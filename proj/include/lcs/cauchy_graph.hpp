#pragma once

#include "lcs/cone.hpp"

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

namespace lcs {

// A radius graph over the cone's base domain: one strictly positive radius per
// mesh vertex.  The graph is the point set {(p, f(p))}.  Graphs whose log are
// 1-Lipschitz with respect to the domain metric are exactly the achronal
// surfaces every inextendible timelike curve must cross once.
class CauchyGraph {
public:
    CauchyGraph(std::shared_ptr<const ConeModel> model, std::vector<double> values)
        : model_(std::move(model)), f_(std::move(values)) {
        if (!model_) throw InputError("CauchyGraph: null model");
        if (static_cast<int>(f_.size()) != model_->vertexCount())
            throw InputError("CauchyGraph: value count does not match the mesh");
        for (double v : f_)
            if (!(v > 0.0) || !std::isfinite(v))
                throw InputError("CauchyGraph: radii must be strictly positive and finite");
    }

    const ConeModel& model() const { return *model_; }
    std::shared_ptr<const ConeModel> modelPtr() const { return model_; }
    int size() const { return static_cast<int>(f_.size()); }
    double value(int vertex) const {
        if (vertex < 0 || vertex >= size()) throw InputError("CauchyGraph: vertex out of range");
        return f_[static_cast<std::size_t>(vertex)];
    }
    const std::vector<double>& values() const { return f_; }
    ConePoint point(int vertex) const { return {vertex, value(vertex)}; }

    bool sameModel(const CauchyGraph& other) const { return model_ == other.model_; }

private:
    std::shared_ptr<const ConeModel> model_;
    std::vector<double> f_;
};

enum class GraphMode { cauchy, strong };

struct GraphValidation {
    bool ok = true;
    int p = -1, q = -1;        // pair maximizing the log-slope ratio
    double worstRatio = 0.0;   // max |ln f(p) - ln f(q)| / d(p,q)
    double bound = 1.0;        // slope bound the verdict used
};

// Checks the all-pairs log-Lipschitz condition |ln f(p) - ln f(q)| <= bound *
// d(p,q), where the bound is 1 (cauchy) or 1 - margin (strong).  A strict
// inequality is not machine-checkable, so the strong mode quantifies
// strictness through the margin.
inline GraphValidation validateGraph(const CauchyGraph& g, GraphMode mode,
                                     double margin = 0.05) {
    if (mode == GraphMode::strong && !(margin >= 0.0 && margin < 1.0))
        throw InputError("validateGraph: margin must lie in [0,1)");
    GraphValidation out;
    out.bound = (mode == GraphMode::strong) ? 1.0 - margin : 1.0;
    const auto& oracle = g.model().oracle();
    const double tol = g.model().tolerance;
    const int n = g.size();
    for (int p = 0; p < n; ++p) {
        const double lp = std::log(g.value(p));
        for (int q = p + 1; q < n; ++q) {
            const double gap = std::abs(lp - std::log(g.value(q)));
            const double dom = oracle.distance(p, q);
            const double ratio = gap / dom;
            if (ratio > out.worstRatio) {
                out.worstRatio = ratio;
                out.p = p;
                out.q = q;
            }
            if (gap > out.bound * dom + tol) out.ok = false;
        }
    }
    return out;
}

struct AchronalityReport {
    bool ok = true;
    int p = -1, q = -1;        // most-separated graph pair (ordered)
    double worstDistance = 0.0;
};

// A graph is achronal when no two of its points are timelike related: the
// cone distance must vanish in both orders for every pair.  The threshold
// absorbs square-root-of-ulp noise on exactly-null pairs.
inline AchronalityReport achronalityCheck(const CauchyGraph& g, double threshold = 1e-6) {
    AchronalityReport out;
    const auto& model = g.model();
    const int n = g.size();
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            const double d = model.distance(g.point(p), g.point(q));
            if (d > out.worstDistance) {
                out.worstDistance = d;
                out.p = p;
                out.q = q;
            }
        }
    }
    out.ok = out.worstDistance <= threshold;
    return out;
}

struct ObservationReport {
    bool ok = true;
    int failIndex = -1;        // probe with no timelike relation to the graph
};

// Every point off the graph should see the graph chronologically: some graph
// point lies in its strict past or strict future.  Probes sitting on the
// graph (radius within tolerance of the graph value on their ray) are
// rejected because the property only quantifies over the complement.
inline ObservationReport chronologicallyObserving(const CauchyGraph& g,
                                                  const std::vector<ConePoint>& probes) {
    const auto& model = g.model();
    ObservationReport out;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const ConePoint& x = probes[i];
        model.checkPoint(x);
        if (!ConeModel::isApex(x) &&
            std::abs(std::log(x.radius) - std::log(g.value(x.vertex))) <= model.tolerance)
            throw InputError("chronologicallyObserving: probe lies on the graph");
        bool seen = false;
        for (int p = 0; p < g.size() && !seen; ++p) {
            const ConePoint y = g.point(p);
            seen = model.distance(y, x) > 0.0 || model.distance(x, y) > 0.0;
        }
        if (!seen) {
            out.ok = false;
            out.failIndex = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

struct InterceptionReport {
    bool ok = true;
    int failIndex = -1;               // index of the pair with no witness
    std::vector<int> clause;          // per pair: 1, 2, or 3 (0 when failed)
    std::vector<int> witness;         // witnessing graph vertex per pair
};

// For each timelike-related pair x << z, finds a graph point y that either
// (1) lies above z, (3) lies below x, or (2) sits causally between them with
// additive distance: d(x,z) = d(x,y) + d(y,z) up to additiveTol.  Clause (2)
// holds exactly on radial pairs; across rays the maximal curve crosses the
// graph inside a mesh edge, so the clause-2 scan also samples edge-interior
// graph points (log-linear interpolation, which preserves the Lipschitz
// bound) and the residual defect shrinks quadratically in the sample spacing.
inline InterceptionReport weaklyTimelikeIntercepting(const CauchyGraph& g,
                                                     const std::vector<std::pair<ConePoint, ConePoint>>& pairs,
                                                     double additiveTol,
                                                     int edgeSubdivisions = 8) {
    const auto& model = g.model();
    const auto& oracle = model.oracle();
    const auto& mesh = model.mesh();
    InterceptionReport out;
    out.clause.assign(pairs.size(), 0);
    out.witness.assign(pairs.size(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, z] = pairs[i];
        if (!(model.distance(x, z) > 0.0))
            throw InputError("weaklyTimelikeIntercepting: pair is not timelike related");
        // Clause 1: some graph point lies above z (the point on z's own ray
        // is the canonical candidate, scanned first).
        int found = -1;
        for (int off = 0; off < g.size() && found < 0; ++off) {
            const int q = ConeModel::isApex(z) ? off : (z.vertex + off) % g.size();
            if (model.causallyRelated(z, g.point(q))) found = q;
        }
        if (found >= 0) {
            out.clause[i] = 1;
            out.witness[i] = found;
            continue;
        }
        // Clause 3: some graph point lies below x.
        for (int off = 0; off < g.size() && found < 0; ++off) {
            const int q = ConeModel::isApex(x) ? off : (x.vertex + off) % g.size();
            if (model.causallyRelated(g.point(q), x)) found = q;
        }
        if (found >= 0) {
            out.clause[i] = 3;
            out.witness[i] = found;
            continue;
        }
        // Clause 2: x is strictly below the graph and z strictly above it, so
        // the connecting curve has to pass through; minimize the additivity
        // defect over vertex and edge-interior graph points.
        const double dxz = model.distance(x, z);
        // Domain distance from a mesh vertex to x's (z's) base point; the apex
        // has no base point, and the cone distance from it ignores the angle.
        const auto domX = [&](int q) {
            return ConeModel::isApex(x) ? 0.0 : oracle.distance(x.vertex, q);
        };
        const auto domZ = [&](int q) {
            return ConeModel::isApex(z) ? 0.0 : oracle.distance(q, z.vertex);
        };
        const double logX = std::log(x.radius), logZ = std::log(z.radius);
        double bestDefect = infinity;
        int bestVertex = -1;
        const auto tryWitness = [&](double logF, double domToX, double domToZ, int reportVertex) {
            if (logF - logX < domToX) return;
            if (logZ - logF < domToZ) return;
            const double rY = std::exp(logF);
            const double defect = dxz - (coneDistanceFormula(x.radius, rY, domToX) +
                                         coneDistanceFormula(rY, z.radius, domToZ));
            if (defect < bestDefect) {
                bestDefect = defect;
                bestVertex = reportVertex;
            }
        };
        for (int p = 0; p < g.size(); ++p)
            tryWitness(std::log(g.value(p)), domX(p), domZ(p), p);
        for (std::size_t e = 0; e < mesh.edges.size(); ++e) {
            const auto [u, v] = mesh.edges[e];
            const double w = mesh.weights[e];
            const double lu = std::log(g.value(u)), lv = std::log(g.value(v));
            for (int s = 1; s < edgeSubdivisions; ++s) {
                const double a = w * s / edgeSubdivisions, b = w - a;
                tryWitness(lu + (lv - lu) * s / edgeSubdivisions,
                           std::min(a + domX(u), b + domX(v)),
                           std::min(a + domZ(u), b + domZ(v)),
                           a <= b ? u : v);
            }
        }
        if (bestVertex >= 0 && bestDefect <= additiveTol) {
            out.clause[i] = 2;
            out.witness[i] = bestVertex;
        } else {
            out.ok = false;
            out.failIndex = static_cast<int>(i);
            return out;
        }
    }
    return out;
}

// Largest function below the seeds with the given Lipschitz constant:
// h(p) = min_q (seed(q) + L * d(p,q)).  The output is L-Lipschitz with
// respect to the domain metric up to the metric's own float noise, which is
// why generated graphs always validate.
inline std::vector<double> lipschitzEnvelope(const ConeModel& model,
                                             const std::vector<double>& seeds,
                                             double lipschitzConstant) {
    const int n = model.vertexCount();
    if (static_cast<int>(seeds.size()) != n)
        throw InputError("lipschitzEnvelope: seed count does not match the mesh");
    std::vector<double> h(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        double best = infinity;
        for (int q = 0; q < n; ++q)
            best = std::min(best, seeds[static_cast<std::size_t>(q)] +
                                      lipschitzConstant * model.domainDistance(p, q));
        h[static_cast<std::size_t>(p)] = best;
    }
    return h;
}

// Random graph inside the strong class: log-radius seeds drawn uniformly in
// [ln base - amplitude, ln base + amplitude], then pushed through the
// (1 - margin)-Lipschitz envelope.  The envelope keeps values inside the seed
// band, so the graph stays in a fixed log-neighborhood of the base radius.
inline CauchyGraph randomStrongGraph(std::shared_ptr<const ConeModel> model, Rng& rng,
                                     double margin = 0.05, double amplitude = 0.05,
                                     double base = 1.0) {
    const int n = model->vertexCount();
    std::vector<double> seeds(static_cast<std::size_t>(n));
    const double lb = std::log(base);
    for (auto& s : seeds) s = lb + rng.uniform(-amplitude, amplitude);
    const auto h = lipschitzEnvelope(*model, seeds, 1.0 - margin);
    std::vector<double> f(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) f[static_cast<std::size_t>(p)] = std::exp(h[static_cast<std::size_t>(p)]);
    return {std::move(model), std::move(f)};
}

// Deliberately broken graph: constant except for one vertex bumped so far
// that the log-slope to its nearest neighbor exceeds 1.  validateGraph must
// reject it, and the bumped pair powers the double-crossing witness curve.
inline CauchyGraph makeViolatingGraph(std::shared_ptr<const ConeModel> model, Rng& rng,
                                      double slope = 1.5, double base = 1.0) {
    const int n = model->vertexCount();
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    double nearest = infinity;
    for (int q = 0; q < n; ++q)
        if (q != v) nearest = std::min(nearest, model->domainDistance(v, q));
    std::vector<double> f(static_cast<std::size_t>(n), base);
    f[static_cast<std::size_t>(v)] = base * std::exp(slope * nearest);
    return {std::move(model), std::move(f)};
}

} // namespace lcs
