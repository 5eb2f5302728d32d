#pragma once

#include <memory>

#include "lcs/common.hpp"
#include "lcs/hyperbolic.hpp"
#include "lcs/intrinsic.hpp"

namespace lcs {

// Point of the cone over a hyperbolic domain: a mesh vertex scaled by a
// radius.  Radius zero is the apex (one single point; the vertex slot is
// ignored and canonically -1).
struct ConePoint {
    int vertex = -1;
    double radius = 0.0;
};

inline bool operator==(const ConePoint& a, const ConePoint& b) {
    if (a.radius == 0.0 && b.radius == 0.0) return true;
    return a.vertex == b.vertex && a.radius == b.radius;
}

// Closed-form distance of the cone construction:
//   d(a,b)^2 = ra^2 + rb^2 - 2*ra*rb*cosh(dOmega)
// when ln(rb) - ln(rg) >= dOmega (the log-radius causal condition), else 0.
// The log form is the numerically stable way to test the cone condition.
inline double coneDistanceFormula(double ra, double rb, double dOmega) {
    if (ra == 0.0) return rb;   // apex reaches everything along its ray
    if (rb == 0.0) return 0.0;  // nothing strictly precedes the apex
    if (dOmega == 0.0) return rb >= ra ? rb - ra : 0.0;
    if (std::log(rb) - std::log(ra) < dOmega) return 0.0;
    const double sq = ra * ra + rb * rb - 2.0 * ra * rb * std::cosh(dOmega);
    return std::sqrt(std::max(0.0, sq));
}

// Cone spacetime over a meshed hyperbolic domain.  Immutable after
// construction; all operations are const and safe to call concurrently.
class ConeModel {
public:
    using Point = ConePoint;

    explicit ConeModel(HyperbolicMesh mesh, double tol = defaultTolerance)
        : mesh_(std::move(mesh)), oracle_(mesh_), tolerance(tol) {
        const auto rep = validateMesh(mesh_, tolerance);
        if (!rep.ok) throw InputError("ConeModel: invalid mesh (" + rep.failedInvariant + ")");
    }

    const HyperbolicMesh& mesh() const { return mesh_; }
    const IntrinsicDistanceOracle& oracle() const { return oracle_; }
    int vertexCount() const { return oracle_.size(); }

    static ConePoint apex() { return {-1, 0.0}; }
    static bool isApex(const ConePoint& p) { return p.radius == 0.0; }

    void checkPoint(const ConePoint& p) const {
        if (!(p.radius >= 0.0) || !std::isfinite(p.radius))
            throw InputError("ConeModel: radius must be finite and non-negative");
        if (p.radius > 0.0 && (p.vertex < 0 || p.vertex >= vertexCount()))
            throw InputError("ConeModel: vertex out of range");
    }

    double domainDistance(int a, int b) const { return oracle_.distance(a, b); }

    bool causallyRelated(const ConePoint& a, const ConePoint& b) const {
        checkPoint(a);
        checkPoint(b);
        if (isApex(a)) return true;
        if (isApex(b)) return false;
        return std::log(b.radius) - std::log(a.radius) >= oracle_.distance(a.vertex, b.vertex);
    }

    double distance(const ConePoint& a, const ConePoint& b) const {
        checkPoint(a);
        checkPoint(b);
        if (isApex(a)) return b.radius;
        if (isApex(b)) return 0.0;
        return coneDistanceFormula(a.radius, b.radius, oracle_.distance(a.vertex, b.vertex));
    }

private:
    HyperbolicMesh mesh_;
    IntrinsicDistanceOracle oracle_;

public:
    double tolerance = defaultTolerance;
};

inline std::shared_ptr<const ConeModel> makeDiskCone(double radius, int resolution,
                                                     double tol = defaultTolerance) {
    return std::make_shared<const ConeModel>(buildDiskMesh(radius, resolution), tol);
}

} // namespace lcs
