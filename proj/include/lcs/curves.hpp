#pragma once

#include "lcs/cauchy_graph.hpp"
#include "lcs/cone.hpp"
#include "lcs/finite_space.hpp"
#include "lcs/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcs {

enum class EndBehavior { attainedEndpoint, escapesToInfinity, approachesBoundary };

inline const char* endBehaviorName(EndBehavior b) {
    switch (b) {
        case EndBehavior::attainedEndpoint: return "attainedEndpoint";
        case EndBehavior::escapesToInfinity: return "escapesToInfinity";
        default: return "approachesBoundary";
    }
}

// Finitely sampled causal curve.  The samples are a monotone causal chain;
// the end flags declare how the curve continues beyond them, and the
// checkers below only accept flags the sample trends support.
template <typename Model>
struct DiscreteCausalCurve {
    using Point = typename Model::Point;

    std::shared_ptr<const Model> model;
    std::vector<std::pair<double, Point>> samples;
    EndBehavior pastBehavior = EndBehavior::attainedEndpoint;
    EndBehavior futureBehavior = EndBehavior::attainedEndpoint;
    std::optional<Point> pastLimit;     // declared limit for approachesBoundary
    std::optional<Point> futureLimit;
    bool timelike = false;
};

using ConeCurve = DiscreteCausalCurve<ConeModel>;
using StripCurve = DiscreteCausalCurve<StripModel>;
using MinkowskiCurve = DiscreteCausalCurve<MinkowskiModel>;

// ---- model adapters -------------------------------------------------------

inline bool pointInSpace(const ConeModel& m, const ConePoint& p) {
    m.checkPoint(p);
    return true;                        // the apex belongs to the cone
}
inline bool pointInSpace(const StripModel& m, const Event& e) { return m.contains(e); }
inline bool pointInSpace(const MinkowskiModel& m, const Event& e) { return m.contains(e); }

// Distance-like gauge measuring how close a sample is to a declared limit.
inline double limitProximity(const ConeModel&, const ConePoint& p, const ConePoint& limit) {
    if (!ConeModel::isApex(limit))
        throw InputError("limitProximity: the cone's only boundary point is the apex");
    return p.radius;
}
inline double limitProximity(const StripModel&, const Event& p, const Event& limit) {
    return std::hypot(p.t - limit.t, p.x - limit.x);
}
inline double limitProximity(const MinkowskiModel&, const Event&, const Event&) {
    throw InputError("limitProximity: the plane has no boundary");
}

inline bool onPastBoundary(const ConeModel&, const ConePoint& p) { return ConeModel::isApex(p); }
inline bool onFutureBoundary(const ConeModel&, const ConePoint&) { return false; }
inline bool onPastBoundary(const StripModel&, const Event& e) { return e.t == 0.0; }
inline bool onFutureBoundary(const StripModel&, const Event& e) { return e.t == 1.0; }
inline bool onPastBoundary(const MinkowskiModel&, const Event&) { return false; }
inline bool onFutureBoundary(const MinkowskiModel&, const Event&) { return false; }

// Size gauge for escape trends: radius in the cone, Euclidean norm in flat
// models.
inline double escapeMeasure(const ConeModel&, const ConePoint& p) { return p.radius; }
inline double escapeMeasure(const StripModel&, const Event& e) { return std::hypot(e.t, e.x); }
inline double escapeMeasure(const MinkowskiModel&, const Event& e) { return std::hypot(e.t, e.x); }

// ---- structural validation ------------------------------------------------

template <typename Model>
InvariantReport validateCurve(const DiscreteCausalCurve<Model>& curve) {
    InvariantReport rep;
    if (!curve.model) throw InputError("validateCurve: curve has no model");
    if (curve.samples.empty()) throw InputError("validateCurve: curve has no samples");
    const auto& m = *curve.model;
    for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i) {
        const auto& [t0, p0] = curve.samples[i];
        const auto& [t1, p1] = curve.samples[i + 1];
        if (!(t0 < t1)) {
            rep.ok = false;
            rep.failedInvariant = "parametersIncreasing";
            rep.witness = {static_cast<int>(i), static_cast<int>(i + 1), -1};
            return rep;
        }
        if (!m.causallyRelated(p0, p1)) {
            rep.ok = false;
            rep.failedInvariant = "consecutiveCausal";
            rep.witness = {static_cast<int>(i), static_cast<int>(i + 1), -1};
            return rep;
        }
        if (curve.timelike && !(m.distance(p0, p1) > 0.0)) {
            rep.ok = false;
            rep.failedInvariant = "consecutiveTimelike";
            rep.witness = {static_cast<int>(i), static_cast<int>(i + 1), -1};
            return rep;
        }
    }
    return rep;
}

// ---- crossing counts ------------------------------------------------------

struct CrossingReport {
    int count = 0;
    std::vector<std::pair<double, double>> intervals;   // parameter ranges
};

// Counts how often the curve meets the graph by tokenizing the sign of
// s(t) = ln r(t) - ln f(p(t)): each run of zeros is one touch, each direct
// sign flip between adjacent tokens is one transversal crossing.  End flags
// must match the sampled signs: a curve declared to start at the apex must
// start below every positive graph, one declared to escape must end above.
inline CrossingReport crossingCount(const ConeCurve& curve, const CauchyGraph& g,
                                    double zeroTol = -1.0) {
    if (curve.model != g.modelPtr())
        throw InputError("crossingCount: curve and graph live on different models");
    const auto rep = validateCurve(curve);
    if (!rep.ok) throw InputError("crossingCount: invalid curve (" + rep.failedInvariant + ")");
    if (zeroTol < 0.0) zeroTol = g.model().tolerance;

    const std::size_t n = curve.samples.size();
    std::vector<int> sign(n);                    // -1, 0, +1
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [t, p] = curve.samples[i];
        const double s = std::log(p.radius) -
                         std::log(g.value(ConeModel::isApex(p) ? 0 : p.vertex));
        sign[i] = s > zeroTol ? 1 : (s < -zeroTol ? -1 : 0);
    }

    if (curve.pastBehavior == EndBehavior::approachesBoundary && curve.pastLimit &&
        ConeModel::isApex(*curve.pastLimit) && sign.front() != -1)
        throw InputError("crossingCount: declared apex approach but the first sample "
                         "is not below the graph");
    if (curve.futureBehavior == EndBehavior::escapesToInfinity && sign.back() != 1)
        throw InputError("crossingCount: declared escape but the last sample "
                         "is not above the graph");

    CrossingReport out;
    std::size_t i = 0;
    int lastNonZero = 0;                         // sign before the current position
    while (i < n) {
        if (sign[i] == 0) {
            std::size_t j = i;
            while (j + 1 < n && sign[j + 1] == 0) ++j;
            out.count += 1;                      // a touch is one meeting
            out.intervals.emplace_back(curve.samples[i].first, curve.samples[j].first);
            i = j + 1;
            lastNonZero = 0;
        } else {
            if (lastNonZero != 0 && sign[i] != lastNonZero) {
                out.count += 1;                  // transversal flip between samples
                out.intervals.emplace_back(curve.samples[i - 1].first,
                                           curve.samples[i].first);
            }
            lastNonZero = sign[i];
            ++i;
        }
    }
    return out;
}

// ---- inextendibility ------------------------------------------------------

struct EndVerdict {
    bool inextendible = false;
    std::string reason;
};

struct InextendibilityReport {
    EndVerdict past, future;
};

namespace detail {

template <typename Model, typename Point>
EndVerdict checkEnd(const Model& m, const std::vector<std::pair<double, Point>>& samples,
                    EndBehavior behavior, const std::optional<Point>& limit,
                    Sense sense, double proximityThreshold) {
    EndVerdict v;
    const std::size_t n = samples.size();
    // Tail indices ordered toward the end under test; the reference span is
    // the middle half so that a curve escaping at both ends is not compared
    // against its own other end.
    std::vector<std::size_t> tail;
    const std::size_t quarter = std::min(n, std::max<std::size_t>(2, n / 4));
    if (sense == Sense::future)
        for (std::size_t i = n - quarter; i < n; ++i) tail.push_back(i);
    else
        for (std::size_t i = quarter; i-- > 0;) tail.push_back(i);
    const Point& endpoint = (sense == Sense::future) ? samples.back().second
                                                     : samples.front().second;
    switch (behavior) {
        case EndBehavior::attainedEndpoint: {
            const bool boundary = (sense == Sense::future) ? onFutureBoundary(m, endpoint)
                                                           : onPastBoundary(m, endpoint);
            v.inextendible = boundary;
            v.reason = boundary ? "endpoint lies on the causal boundary"
                                : "endpoint is interior, the curve extends past it";
            return v;
        }
        case EndBehavior::escapesToInfinity: {
            double referenceMax = 0.0;
            for (std::size_t i = quarter; i < n - std::min(n, quarter); ++i)
                referenceMax = std::max(referenceMax, escapeMeasure(m, samples[i].second));
            bool increasing = true;
            for (std::size_t k = 0; k + 1 < tail.size(); ++k)
                increasing = increasing && escapeMeasure(m, samples[tail[k]].second) <
                                               escapeMeasure(m, samples[tail[k + 1]].second);
            const bool exceeds = escapeMeasure(m, samples[tail.back()].second) > referenceMax;
            v.inextendible = increasing && exceeds;
            v.reason = v.inextendible ? "tail size increases beyond the curve's middle span"
                                      : "escape flag without an increasing size trend";
            return v;
        }
        default: {
            if (!limit)
                throw InputError("inextendibilityCheck: approachesBoundary needs a limit point");
            const bool rightSide = (sense == Sense::future) ? onFutureBoundary(m, *limit)
                                                            : onPastBoundary(m, *limit);
            if (!rightSide) {
                v.reason = "declared limit is not on this end's boundary";
                return v;
            }
            if (pointInSpace(m, *limit)) {
                v.reason = "limit point lies in the space; attaching it extends the curve";
                return v;
            }
            bool decreasing = true;
            for (std::size_t k = 0; k + 1 < tail.size(); ++k)
                decreasing = decreasing && limitProximity(m, samples[tail[k]].second, *limit) >
                                               limitProximity(m, samples[tail[k + 1]].second, *limit);
            const bool close =
                limitProximity(m, samples[tail.back()].second, *limit) <= proximityThreshold;
            v.inextendible = decreasing && close;
            v.reason = v.inextendible ? "tail converges to the declared boundary point"
                                      : "samples do not converge to the declared point";
            return v;
        }
    }
}

} // namespace detail

template <typename Model>
InextendibilityReport inextendibilityCheck(const DiscreteCausalCurve<Model>& curve,
                                           double proximityThreshold = 1e-3) {
    const auto rep = validateCurve(curve);
    if (!rep.ok)
        throw InputError("inextendibilityCheck: invalid curve (" + rep.failedInvariant + ")");
    InextendibilityReport out;
    out.past = detail::checkEnd(*curve.model, curve.samples, curve.pastBehavior,
                                curve.pastLimit, Sense::past, proximityThreshold);
    out.future = detail::checkEnd(*curve.model, curve.samples, curve.futureBehavior,
                                  curve.futureLimit, Sense::future, proximityThreshold);
    return out;
}

// ---- completeness checks --------------------------------------------------

enum class CompletenessVerdict { complete, incomplete, inconclusive };

inline const char* completenessName(CompletenessVerdict v) {
    switch (v) {
        case CompletenessVerdict::complete: return "complete";
        case CompletenessVerdict::incomplete: return "incomplete";
        default: return "inconclusive";
    }
}

struct CompletenessReport {
    CompletenessVerdict verdict = CompletenessVerdict::inconclusive;
    bool bounded = false;
    bool attained = false;
    std::string reason;
};

// Reads the trend of d(reference, sample) toward the requested end of an
// inextendible curve: an endpoint-attaining end is complete outright, a
// diverging distance is complete, a distance that plateaus without an
// attained endpoint is the completeness violation.  Samples are expected to
// accumulate geometrically toward the end so the plateau test (10x the model
// tolerance over the last quarter) can distinguish the cases.
template <typename Model>
CompletenessReport cauchyCompleteCheck(const DiscreteCausalCurve<Model>& curve, Sense sense,
                                       double proximityThreshold = 1e-3) {
    const auto ends = inextendibilityCheck(curve, proximityThreshold);
    const auto& end = (sense == Sense::future) ? ends.future : ends.past;
    if (!end.inextendible)
        throw InputError("cauchyCompleteCheck: the queried end is extendible (" + end.reason + ")");
    CompletenessReport out;
    const auto behavior = (sense == Sense::future) ? curve.futureBehavior : curve.pastBehavior;
    if (behavior == EndBehavior::attainedEndpoint) {
        out.verdict = CompletenessVerdict::complete;
        out.attained = true;
        out.bounded = true;
        out.reason = "endpoint attained";
        return out;
    }
    const auto& m = *curve.model;
    const std::size_t n = curve.samples.size();
    if (n < 8) {
        out.reason = "too few samples to read a trend";
        return out;
    }
    std::vector<double> D(n);
    for (std::size_t i = 0; i < n; ++i)
        D[i] = (sense == Sense::future)
                   ? m.distance(curve.samples.front().second, curve.samples[i].second)
                   : m.distance(curve.samples[i].second, curve.samples.back().second);
    if (sense == Sense::past) std::reverse(D.begin(), D.end());
    const std::size_t q3 = (3 * n) / 4;
    const double growth = D.back() - D[q3];
    const double tol = 10.0 * m.tolerance;
    if (growth <= tol * (1.0 + std::abs(D.back()))) {
        out.bounded = true;
        out.verdict = CompletenessVerdict::incomplete;
        out.reason = "distance from the reference plateaus but no endpoint is attained";
    } else if (D.back() >= 1.5 * std::max(D[q3], tol)) {
        out.verdict = CompletenessVerdict::complete;
        out.reason = "distance from the reference diverges along the tail";
    } else {
        out.reason = "distance trend neither plateaus nor doubles";
    }
    return out;
}

struct SequenceCompletenessReport {
    bool uniformCauchy = false;
    enum class Verdict { convergent, escapes, inconclusive } verdict = Verdict::inconclusive;
    std::string reason;
};

// Uniform-Cauchy test for a timelike-monotone sequence plus a convergence
// verdict: a tail that parks next to the model boundary escapes, one that
// settles in the interior converges.
template <typename Model>
SequenceCompletenessReport timelikeCauchyCompletenessCheck(const Model& m,
                                                           const std::vector<typename Model::Point>& seq,
                                                           Sense sense,
                                                           double boundaryMargin = 1e-3) {
    if (seq.size() < 4)
        throw InputError("timelikeCauchyCompletenessCheck: need at least 4 points");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const auto& a = (sense == Sense::future) ? seq[i] : seq[i + 1];
        const auto& b = (sense == Sense::future) ? seq[i + 1] : seq[i];
        if (!(m.distance(a, b) > 0.0))
            throw InputError("timelikeCauchyCompletenessCheck: sequence is not strictly "
                             "timelike monotone");
    }
    SequenceCompletenessReport out;
    // sup over later pairs, evaluated from the last quarter onward.
    const std::size_t n = seq.size();
    const std::size_t q3 = (3 * n) / 4;
    double worstTail = 0.0;
    for (std::size_t j = q3; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const auto& a = (sense == Sense::future) ? seq[j] : seq[k];
            const auto& b = (sense == Sense::future) ? seq[k] : seq[j];
            worstTail = std::max(worstTail, m.distance(a, b));
        }
    out.uniformCauchy = worstTail <= 10.0 * m.tolerance;
    // The sequence marches toward the queried end as the index grows, so the
    // tail point is the back element for either sense.
    const auto& last = seq.back();
    const bool nearEdge = (sense == Sense::future) ? m.nearFutureBoundary(last, boundaryMargin)
                                                   : m.nearPastBoundary(last, boundaryMargin);
    if (nearEdge) {
        out.verdict = SequenceCompletenessReport::Verdict::escapes;
        out.reason = "tail parks at the boundary";
    } else {
        out.verdict = SequenceCompletenessReport::Verdict::convergent;
        out.reason = "tail settles in the interior";
    }
    return out;
}

// Finite-space overload: a strictly monotone sequence in a finite space can
// only step through finitely many points, so it attains its last element and
// converges trivially.
inline SequenceCompletenessReport timelikeCauchyCompletenessCheck(const FiniteLorentzianSpace& space,
                                                                  const std::vector<int>& seq,
                                                                  Sense sense) {
    if (seq.size() < 2)
        throw InputError("timelikeCauchyCompletenessCheck: need at least 2 points");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const int a = (sense == Sense::future) ? seq[i] : seq[i + 1];
        const int b = (sense == Sense::future) ? seq[i + 1] : seq[i];
        if (!(space.d(a, b) > 0.0))
            throw InputError("timelikeCauchyCompletenessCheck: sequence is not strictly "
                             "timelike monotone");
    }
    SequenceCompletenessReport out;
    double worstTail = 0.0;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        const int a = (sense == Sense::future) ? seq[j] : seq.back();
        const int b = (sense == Sense::future) ? seq.back() : seq[j];
        worstTail = std::max(worstTail, space.d(a, b));
    }
    out.uniformCauchy = worstTail <= 10.0 * space.tolerance;
    out.verdict = SequenceCompletenessReport::Verdict::convergent;
    out.reason = "finite space: the sequence attains its last point";
    return out;
}

struct CompactnessProbeReport {
    bool ok = true;                 // no escape found
    bool escapeFound = false;
    bool tailConverged = false;
    std::string reason;
};

// Finite spaces cannot lose accumulation points.
inline CompactnessProbeReport finiteCompactnessCheck(const FiniteLorentzianSpace&) {
    CompactnessProbeReport out;
    out.tailConverged = true;
    out.reason = "finite space: every sequence accumulates";
    return out;
}

// Probes the finite-compactness condition on a flat model: a monotone
// sequence trapped above y and within distance `bound` of x must accumulate
// inside the space.  A tail that converges onto the boundary is the escape
// counterexample.
template <typename FlatModel>
CompactnessProbeReport finiteCompactnessProbe(const FlatModel& m, const Event& x, const Event& y,
                                              const std::vector<Event>& seq, double bound,
                                              double boundaryMargin = 1e-3) {
    if (seq.size() < 4) throw InputError("finiteCompactnessProbe: need at least 4 points");
    if (!(m.distance(x, y) > 0.0))
        throw InputError("finiteCompactnessProbe: x must be strictly below y");
    for (const Event& e : seq) {
        if (!m.causallyRelated(y, e))
            throw InputError("finiteCompactnessProbe: sequence leaves the future of y");
        if (m.distance(x, e) > bound + m.tolerance)
            throw InputError("finiteCompactnessProbe: sequence leaves the distance bound");
    }
    CompactnessProbeReport out;
    const std::size_t q3 = (3 * seq.size()) / 4;
    double tailSpread = 0.0;
    for (std::size_t j = q3; j < seq.size(); ++j)
        tailSpread = std::max(tailSpread,
                              std::hypot(seq[j].t - seq.back().t, seq[j].x - seq.back().x));
    out.tailConverged = tailSpread <= boundaryMargin;
    if (!out.tailConverged) {
        out.reason = "tail does not settle; probe inconclusive";
        return out;
    }
    if (m.nearFutureBoundary(seq.back(), boundaryMargin)) {
        out.ok = false;
        out.escapeFound = true;
        out.reason = "bounded trapped sequence accumulates on the boundary";
    } else {
        out.reason = "trapped sequence accumulates in the interior";
    }
    return out;
}

// ---- generators -----------------------------------------------------------

// Inextendible timelike curve in the cone: starts at the apex, climbs one
// ray by doublings, walks the mesh with log-radius increments strictly above
// the edge length, then escapes by doublings.  Crossing any graph within a
// bounded log-band is guaranteed exactly once because ln r - ln f strictly
// increases along such a curve.
inline ConeCurve makeInextendibleTimelikeCurve(std::shared_ptr<const ConeModel> model, Rng& rng,
                                               int walkSteps = 20, int rampSteps = 48) {
    ConeCurve curve;
    curve.timelike = true;
    curve.pastBehavior = EndBehavior::attainedEndpoint;   // starts at the apex
    curve.futureBehavior = EndBehavior::escapesToInfinity;
    const auto& mesh = model->mesh();
    const int n = model->vertexCount();
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    double t = 0.0;
    curve.samples.push_back({t++, ConeModel::apex()});
    double r = std::exp(rng.uniform(-0.4, 0.0)) * std::pow(2.0, -rampSteps);
    for (int k = 0; k < rampSteps; ++k, r *= 2.0) curve.samples.push_back({t++, ConePoint{v, r}});
    for (int k = 0; k < walkSteps; ++k) {
        const auto& nbrs = mesh.adjacency[static_cast<std::size_t>(v)];
        const auto& [next, w] = nbrs[rng.below(nbrs.size())];
        const double eta = rng.uniform(0.05, 0.5);
        const double delta = rng.uniform(0.0, 0.2);
        r *= std::exp((1.0 + eta) * w + delta);
        v = next;
        curve.samples.push_back({t++, ConePoint{v, r}});
    }
    for (int k = 0; k < rampSteps; ++k) {
        r *= 2.0;
        curve.samples.push_back({t++, ConePoint{v, r}});
    }
    curve.model = std::move(model);
    return curve;
}

// Twice-crossing witness for a graph violating the Lipschitz bound at the
// pair (p, q): descend p's ray from the apex to the graph, hop to q's ray at
// the log-midpoint (strictly below q's graph value because the log-gap
// between the two graph values exceeds the domain distance), climb to q's
// graph point, then escape up q's ray.
inline ConeCurve makeDoubleCrossingWitness(const CauchyGraph& g, int p, int q,
                                           int rampSteps = 48) {
    const auto model = g.modelPtr();
    double fp = g.value(p), fq = g.value(q);
    if (fp > fq) {
        std::swap(p, q);
        std::swap(fp, fq);
    }
    const double w = model->domainDistance(p, q);
    const double gap = std::log(fq) - std::log(fp);
    if (!(gap > w))
        throw InputError("makeDoubleCrossingWitness: pair does not violate the slope bound");
    ConeCurve curve;
    curve.timelike = true;
    curve.pastBehavior = EndBehavior::attainedEndpoint;
    curve.futureBehavior = EndBehavior::escapesToInfinity;
    double t = 0.0;
    curve.samples.push_back({t++, ConeModel::apex()});
    for (int k = rampSteps; k >= 1; --k)
        curve.samples.push_back({t++, ConePoint{p, fp * std::pow(2.0, -k)}});
    curve.samples.push_back({t++, ConePoint{p, fp}});                       // first touch
    curve.samples.push_back({t++, ConePoint{q, fp * std::exp(0.5 * (w + gap))}});  // below f(q)
    curve.samples.push_back({t++, ConePoint{q, fq}});                       // second touch
    double r = fq;
    for (int k = 0; k < rampSteps; ++k) {
        r *= 2.0;
        curve.samples.push_back({t++, ConePoint{q, r}});
    }
    curve.model = model;
    return curve;
}

// Vertical timelike curve of the open strip with geometric tails toward both
// missing horizontal edges.  The ramp stops at 2^-52 from either edge: one
// step shy of the last representable double below 1, and deep enough that the
// distance trend over the last quarter sits well inside the plateau band.
inline StripCurve makeStripVerticalCurve(double x0 = 0.0, int rampSteps = 52) {
    StripCurve curve;
    curve.model = std::make_shared<const StripModel>();
    curve.timelike = true;
    curve.pastBehavior = EndBehavior::approachesBoundary;
    curve.futureBehavior = EndBehavior::approachesBoundary;
    curve.pastLimit = Event{0.0, x0};
    curve.futureLimit = Event{1.0, x0};
    for (int k = rampSteps; k >= 2; --k)
        curve.samples.push_back({std::pow(2.0, -k), Event{std::pow(2.0, -k), x0}});
    curve.samples.push_back({0.5, Event{0.5, x0}});
    for (int k = 2; k <= rampSteps; ++k)
        curve.samples.push_back({1.0 - std::pow(2.0, -k), Event{1.0 - std::pow(2.0, -k), x0}});
    return curve;
}

// Vertical line of the full plane with geometric escape in both directions.
inline MinkowskiCurve makeMinkowskiVerticalLine(double x0 = 0.0, int rampSteps = 40) {
    MinkowskiCurve curve;
    curve.model = std::make_shared<const MinkowskiModel>();
    curve.timelike = true;
    curve.pastBehavior = EndBehavior::escapesToInfinity;
    curve.futureBehavior = EndBehavior::escapesToInfinity;
    for (int k = rampSteps; k >= 0; --k)
        curve.samples.push_back({-std::pow(2.0, k), Event{-std::pow(2.0, k), x0}});
    for (int k = 0; k <= rampSteps; ++k)
        curve.samples.push_back({std::pow(2.0, k), Event{std::pow(2.0, k), x0}});
    return curve;
}

// Future-inextendible cone curve of finite proper length: unit-speed loop
// around the mesh with radius profile r(t)^2 = sinh(2(t+1)), whose log-slope
// exceeds 1 everywhere, so every step is strictly timelike while consecutive
// proper-time increments shrink geometrically.
inline ConeCurve makeFiniteLengthEscapingCurve(std::shared_ptr<const ConeModel> model,
                                               int startVertex, int steps = 50) {
    ConeCurve curve;
    curve.timelike = true;
    curve.pastBehavior = EndBehavior::attainedEndpoint;   // interior start
    curve.futureBehavior = EndBehavior::escapesToInfinity;
    const auto& mesh = model->mesh();
    model->checkPoint(ConePoint{startVertex, 1.0});
    int v = startVertex;
    int prev = -1;
    double t = 0.0;
    auto radius = [](double time) { return std::sqrt(std::sinh(2.0 * (time + 1.0))); };
    curve.samples.push_back({t, ConePoint{v, radius(t)}});
    for (int k = 0; k < steps; ++k) {
        // Prefer not to backtrack so the walk keeps circulating.
        const auto& nbrs = mesh.adjacency[static_cast<std::size_t>(v)];
        std::pair<int, double> pick = nbrs.front();
        for (const auto& nb : nbrs)
            if (nb.first != prev) {
                pick = nb;
                break;
            }
        prev = v;
        v = pick.first;
        t += pick.second;                 // unit-speed in the domain
        curve.samples.push_back({t, ConePoint{v, radius(t)}});
    }
    curve.model = std::move(model);
    return curve;
}

} // namespace lcs
