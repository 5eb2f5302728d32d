#pragma once

#include <vector>

#include "lcs/common.hpp"

namespace lcs {

// Event of a 1+1 flat spacetime.
struct Event {
    double t = 0.0;
    double x = 0.0;
};

inline bool operator==(const Event& a, const Event& b) { return a.t == b.t && a.x == b.x; }

inline double flatDistance(const Event& a, const Event& b) {
    const double dt = b.t - a.t;
    const double dx = b.x - a.x;
    if (dt < std::abs(dx)) return 0.0;
    return std::sqrt(dt * dt - dx * dx);
}

inline std::vector<Event> timeSlice(double t, double x0, double x1, int samples) {
    if (samples < 1 || !(x1 >= x0)) throw InputError("timeSlice: bad sample spec");
    std::vector<Event> out;
    out.reserve(static_cast<std::size_t>(samples));
    if (samples == 1) {
        out.push_back({t, (x0 + x1) / 2.0});
        return out;
    }
    for (int i = 0; i < samples; ++i)
        out.push_back({t, x0 + (x1 - x0) * i / (samples - 1)});
    return out;
}

// Full 1+1 Minkowski plane: geodesically complete, no boundary.
struct MinkowskiModel {
    using Point = Event;
    double tolerance = defaultTolerance;

    double distance(const Event& a, const Event& b) const { return flatDistance(a, b); }
    bool causallyRelated(const Event& a, const Event& b) const {
        return b.t - a.t >= std::abs(b.x - a.x);
    }
    bool contains(const Event&) const { return true; }
    bool nearPastBoundary(const Event&, double) const { return false; }
    bool nearFutureBoundary(const Event&, double) const { return false; }

    std::vector<Event> slice(double t, double x0, double x1, int samples) const {
        return timeSlice(t, x0, x1, samples);
    }
};

// Open strip (0,1) x R with the flat metric.  Convex in the plane, so
// distances restrict unchanged; the two horizontal edges are its boundary.
struct StripModel {
    using Point = Event;
    double tolerance = defaultTolerance;

    double distance(const Event& a, const Event& b) const { return flatDistance(a, b); }
    bool causallyRelated(const Event& a, const Event& b) const {
        return b.t - a.t >= std::abs(b.x - a.x);
    }
    bool contains(const Event& e) const { return e.t > 0.0 && e.t < 1.0; }
    bool nearPastBoundary(const Event& e, double margin) const { return e.t <= margin; }
    bool nearFutureBoundary(const Event& e, double margin) const { return e.t >= 1.0 - margin; }

    std::vector<Event> slice(double t, double x0, double x1, int samples) const {
        if (!(t > 0.0 && t < 1.0)) throw InputError("StripModel::slice: t outside (0,1)");
        return timeSlice(t, x0, x1, samples);
    }
};

} // namespace lcs
