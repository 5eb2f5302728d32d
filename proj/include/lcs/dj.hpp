#pragma once

#include "lcs/cauchy_graph.hpp"
#include "lcs/cone.hpp"
#include "lcs/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcs {

// Symmetrized two-sided separation of a point pair: d(x,y) + d(y,x).  At most
// one order can be timelike, so the value is the separation in whichever
// order applies, and zero exactly when the pair is unrelated.
template <typename Model>
double djPoint(const Model& m, const typename Model::Point& x, const typename Model::Point& y) {
    return m.distance(x, y) + m.distance(y, x);
}

struct DJReport {
    double value = 0.0;
    int witnessA = -1;                   // index into the first sample set
    int witnessB = -1;                   // index into the second sample set
    double tolerance = defaultTolerance;
};

// Exhaustive maximum of djPoint over the sample product.  For finitely
// sampled sets this is exact; as a stand-in for a continuum supremum it is a
// lower bound that grows toward the sup under sample refinement, so callers
// comparing against analytic values should report the delta under doubling.
template <typename Model>
DJReport djSet(const Model& m, const std::vector<typename Model::Point>& A,
               const std::vector<typename Model::Point>& B) {
    if (A.empty() || B.empty()) throw InputError("djSet: empty sample set");
    DJReport rep;
    rep.tolerance = m.tolerance;
    rep.value = -1.0;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
            const double v = djPoint(m, A[i], B[j]);
            if (v > rep.value) {
                rep.value = v;
                rep.witnessA = static_cast<int>(i);
                rep.witnessB = static_cast<int>(j);
            }
        }
    return rep;
}

inline std::vector<ConePoint> graphPoints(const CauchyGraph& g) {
    std::vector<ConePoint> pts;
    pts.reserve(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) pts.push_back(g.point(v));
    return pts;
}

inline DJReport djGraphs(const CauchyGraph& a, const CauchyGraph& b) {
    if (!a.sameModel(b)) throw InputError("djGraphs: graphs live on different models");
    return djSet(a.model(), graphPoints(a), graphPoints(b));
}

// ---- metric axioms --------------------------------------------------------

struct MetricAxiomReport {
    bool ok = true;
    std::string failedAxiom;             // empty when ok
    std::vector<int> witness;            // set indices of the failure
    double worstSelf = 0.0;              // max self-distance
    double worstSymmetryGap = 0.0;       // max |d(A,B) - d(B,A)|, 0 expected
    double worstTriangleDefect = 0.0;    // max d(A,C) - d(A,B) - d(B,C)
    double smallestDistinctValue = infinity;
    int trianglesChecked = 0;
};

// Checks the extended-metric axioms on a family of graph sets: symmetry must
// be bit-exact (the kernel and the scanned product are symmetric), self
// distance stays below `selfTolerance` (achronality leaves only float dust),
// distinct sets must be separated by at least their largest vertexwise value
// gap (that radial pair is itself in the scan), and random triples satisfy
// the triangle inequality within 3x the model tolerance.
inline MetricAxiomReport verifyMetricAxioms(const std::vector<CauchyGraph>& sets, int trials,
                                            Rng& rng, double selfTolerance = 1e-6) {
    if (sets.empty()) throw InputError("verifyMetricAxioms: no sets");
    const int n = static_cast<int>(sets.size());
    for (const auto& s : sets)
        if (!s.sameModel(sets.front()))
            throw InputError("verifyMetricAxioms: sets live on different models");
    const double tol = sets.front().model().tolerance;

    MetricAxiomReport rep;
    std::vector<double> M(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto at = [n](int i, int j) {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j);
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[at(i, j)] = djGraphs(sets[i], sets[j]).value;

    for (int i = 0; i < n && rep.ok; ++i) {
        rep.worstSelf = std::max(rep.worstSelf, M[at(i, i)]);
        if (M[at(i, i)] > selfTolerance) {
            rep.ok = false;
            rep.failedAxiom = "selfDistance";
            rep.witness = {i};
        }
    }
    for (int i = 0; i < n && rep.ok; ++i)
        for (int j = i + 1; j < n && rep.ok; ++j) {
            const double gap = std::abs(M[at(i, j)] - M[at(j, i)]);
            rep.worstSymmetryGap = std::max(rep.worstSymmetryGap, gap);
            if (gap != 0.0) {
                rep.ok = false;
                rep.failedAxiom = "symmetry";
                rep.witness = {i, j};
            }
        }
    for (int i = 0; i < n && rep.ok; ++i)
        for (int j = i + 1; j < n && rep.ok; ++j) {
            double floor = 0.0;
            for (int v = 0; v < sets[i].size(); ++v)
                floor = std::max(floor, std::abs(sets[i].value(v) - sets[j].value(v)));
            if (floor > 10.0 * tol) rep.smallestDistinctValue =
                std::min(rep.smallestDistinctValue, M[at(i, j)]);
            if (M[at(i, j)] < floor) {       // the radial pair is in the scan
                rep.ok = false;
                rep.failedAxiom = "definiteness";
                rep.witness = {i, j};
            }
        }
    if (n >= 3) {
        int draws = 0;
        while (rep.trianglesChecked < trials && draws < 20 * trials && rep.ok) {
            ++draws;
            const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (a == b || a == c || b == c) continue;
            const double defect = M[at(a, c)] - M[at(a, b)] - M[at(b, c)];
            rep.worstTriangleDefect = std::max(rep.worstTriangleDefect, defect);
            ++rep.trianglesChecked;
            if (defect > 3.0 * tol) {
                rep.ok = false;
                rep.failedAxiom = "triangle";
                rep.witness = {a, b, c};
            }
        }
    }
    return rep;
}

// ---- limits of Cauchy sequences -------------------------------------------

enum class LimitVerdict { converged, notCauchy, boundaryEscape, inconclusive };

inline const char* limitVerdictName(LimitVerdict v) {
    switch (v) {
        case LimitVerdict::converged: return "converged";
        case LimitVerdict::notCauchy: return "notCauchy";
        case LimitVerdict::boundaryEscape: return "boundaryEscape";
        default: return "inconclusive";
    }
}

struct GraphLimitReport {
    LimitVerdict verdict = LimitVerdict::inconclusive;
    std::optional<CauchyGraph> limit;    // last iterate, when converged
    double certificateWorst = 0.0;       // max pairwise distance over the tail half
    double tailWorst = 0.0;              // max tail distance to the limit
    int badI = -1, badJ = -1;            // non-contracting pair when notCauchy
    bool limitValid = false;             // limit passes the Lipschitz validation
    std::string reason;
};

// Desk-scale limit construction for a finite prefix of a graph sequence: the
// tail half must be pairwise within epsilon (the Cauchy certificate), the
// limit is the last iterate, and a tail whose minimum radius has sunk to the
// apex floor is reported as escaping the space instead (the candidate limit
// would need a zero radius, which no graph has).
inline GraphLimitReport limitOfCauchySequence(const std::vector<CauchyGraph>& seq, double epsilon,
                                              double apexFloor = 1e-3) {
    if (seq.size() < 4) throw InputError("limitOfCauchySequence: need at least 4 graphs");
    for (const auto& g : seq)
        if (!g.sameModel(seq.front()))
            throw InputError("limitOfCauchySequence: graphs live on different models");
    GraphLimitReport rep;
    const int n = static_cast<int>(seq.size());
    const int start = n / 2;
    for (int i = start; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = djGraphs(seq[static_cast<std::size_t>(i)],
                                      seq[static_cast<std::size_t>(j)]).value;
            if (v > rep.certificateWorst) {
                rep.certificateWorst = v;
                rep.badI = i;
                rep.badJ = j;
            }
        }
    if (rep.certificateWorst > epsilon) {
        rep.verdict = LimitVerdict::notCauchy;
        rep.reason = "a tail pair fails to contract within epsilon";
        return rep;
    }
    rep.badI = rep.badJ = -1;

    const auto& last = seq.back();
    double minLast = infinity;
    for (int v = 0; v < last.size(); ++v) minLast = std::min(minLast, last.value(v));
    if (minLast <= apexFloor) {
        rep.verdict = LimitVerdict::boundaryEscape;
        rep.reason = "the tail degenerates toward the apex; the limit would need "
                     "a zero radius";
        return rep;
    }

    rep.verdict = LimitVerdict::converged;
    rep.limit = last;
    for (int i = start; i < n; ++i)
        rep.tailWorst = std::max(rep.tailWorst,
                                 djGraphs(seq[static_cast<std::size_t>(i)], last).value);
    rep.limitValid = validateGraph(last, GraphMode::cauchy).ok;
    rep.reason = "tail pairs contract and the last iterate stays off the apex";
    return rep;
}

struct SliceLimitReport {
    LimitVerdict verdict = LimitVerdict::inconclusive;
    double limitTime = 0.0;
    std::vector<Event> limit;            // sampled limit slice, when converged
    double certificateWorst = 0.0;
    double tailWorst = 0.0;
    int badI = -1, badJ = -1;
    std::string reason;
};

// Same construction for a sequence of constant-time slices of a flat model.
// The finite prefix carries the Cauchy certificate; the limit candidate is
// the slice at `deepTailTime`, a far-tail member of the same analytic
// sequence supplied by the caller, standing in for the value the prefix
// extrapolates to.  A deep tail that leaves the domain or parks against its
// boundary is the escape verdict.
template <typename FlatModel>
SliceLimitReport sliceSequenceLimit(const FlatModel& m, const std::vector<double>& sliceTimes,
                                    double deepTailTime, double epsilon,
                                    double boundaryMargin = 1e-3, double x0 = -1.0,
                                    double x1 = 1.0, int samples = 41) {
    if (sliceTimes.size() < 4) throw InputError("sliceSequenceLimit: need at least 4 slices");
    std::vector<std::vector<Event>> slices;
    slices.reserve(sliceTimes.size());
    for (double t : sliceTimes) slices.push_back(m.slice(t, x0, x1, samples));

    SliceLimitReport rep;
    const int n = static_cast<int>(slices.size());
    const int start = n / 2;
    for (int i = start; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = djSet(m, slices[static_cast<std::size_t>(i)],
                                   slices[static_cast<std::size_t>(j)]).value;
            if (v > rep.certificateWorst) {
                rep.certificateWorst = v;
                rep.badI = i;
                rep.badJ = j;
            }
        }
    if (rep.certificateWorst > epsilon) {
        rep.verdict = LimitVerdict::notCauchy;
        rep.reason = "a tail pair fails to contract within epsilon";
        return rep;
    }
    rep.badI = rep.badJ = -1;

    const Event probe{deepTailTime, (x0 + x1) / 2.0};
    if (!m.contains(probe) || m.nearPastBoundary(probe, boundaryMargin) ||
        m.nearFutureBoundary(probe, boundaryMargin)) {
        rep.verdict = LimitVerdict::boundaryEscape;
        rep.limitTime = deepTailTime;
        rep.reason = "the deep tail parks at the domain boundary";
        return rep;
    }

    rep.limitTime = deepTailTime;
    rep.limit = m.slice(deepTailTime, x0, x1, samples);
    for (int i = start; i < n; ++i)
        rep.tailWorst =
            std::max(rep.tailWorst, djSet(m, slices[static_cast<std::size_t>(i)], rep.limit).value);
    if (rep.tailWorst > epsilon) {
        rep.verdict = LimitVerdict::inconclusive;
        rep.reason = "the certified tail does not reach the deep-tail candidate "
                     "within epsilon";
        return rep;
    }
    rep.verdict = LimitVerdict::converged;
    rep.reason = "tail slices contract onto an interior slice";
    return rep;
}

// ---- finite nets ----------------------------------------------------------

struct NetReport {
    std::vector<CauchyGraph> net;
    double worstCoverage = 0.0;          // max over probes of distance to its member
    int probesUsed = 0;
    double quantStep = 0.0;
    bool allMembersValid = true;
    std::string reason;
};

// Finite epsilon-net for the ball of radius r around a center graph.  Every
// probe is mapped to a net member by quantizing its log values to a grid and
// re-projecting with the Lipschitz envelope, so membership distance is
// bounded by construction: the quantization error is at most half a step
// vertexwise, the envelope does not increase it, and the step is clamped
// below the strong-margin slack (2 * margin * minimum edge), which keeps
// every probe-member cross-ray pair spacelike.  Coverage is then purely
// radial: about rMax * step / 2, a fifth of epsilon.  The returned coverage
// figure is the measured certificate over the probes actually drawn.
inline NetReport blaschkeNet(const CauchyGraph& center, double r, double epsilon, Rng& rng,
                             int probes = 500, double margin = 0.05) {
    if (r < 0.0) throw InputError("blaschkeNet: negative radius");
    if (!(epsilon > 0.0)) throw InputError("blaschkeNet: epsilon must be positive");
    const auto model = center.modelPtr();
    const int nv = center.size();
    double minCenter = infinity, maxCenter = 0.0;
    for (int v = 0; v < nv; ++v) {
        minCenter = std::min(minCenter, center.value(v));
        maxCenter = std::max(maxCenter, center.value(v));
    }
    if (!(minCenter - r > 0.0))
        throw InputError("blaschkeNet: the ball leaves the positive-radius region");

    NetReport rep;
    if (r == 0.0) {
        rep.net.push_back(center);
        rep.reason = "degenerate ball: the center is its own net";
        return rep;
    }

    double minEdge = infinity;
    for (double w : model->mesh().weights) minEdge = std::min(minEdge, w);
    const double rMax = maxCenter + r;
    rep.quantStep = std::min(0.4 * epsilon / rMax, 0.9 * (2.0 * margin * minEdge));

    const double jitter = std::log(1.0 + r / maxCenter);
    std::vector<std::vector<double>> seen;
    const int maxAttempts = 40 * probes;
    int attempts = 0;
    while (rep.probesUsed < probes && attempts < maxAttempts) {
        ++attempts;
        std::vector<double> seeds(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            seeds[static_cast<std::size_t>(v)] =
                std::log(center.value(v)) + rng.uniform(-jitter, jitter);
        const auto h = lipschitzEnvelope(*model, seeds, 1.0 - margin);
        std::vector<double> f(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            f[static_cast<std::size_t>(v)] = std::exp(h[static_cast<std::size_t>(v)]);
        CauchyGraph probe(model, f);
        if (djGraphs(probe, center).value > r) continue;       // outside the ball
        ++rep.probesUsed;

        std::vector<double> q(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            q[static_cast<std::size_t>(v)] =
                rep.quantStep * std::round(h[static_cast<std::size_t>(v)] / rep.quantStep);
        const auto hq = lipschitzEnvelope(*model, q, 1.0 - margin);
        std::vector<double> mf(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
            mf[static_cast<std::size_t>(v)] = std::exp(hq[static_cast<std::size_t>(v)]);
        CauchyGraph member(model, mf);

        rep.worstCoverage = std::max(rep.worstCoverage, djGraphs(probe, member).value);
        if (std::find(seen.begin(), seen.end(), mf) == seen.end()) {
            seen.push_back(mf);
            rep.allMembersValid =
                rep.allMembersValid && validateGraph(member, GraphMode::cauchy).ok;
            rep.net.push_back(std::move(member));
        }
    }
    rep.reason = rep.probesUsed == probes
                     ? "net collected from the quantization image of the probes"
                     : "probe budget exhausted before the requested count";
    return rep;
}

} // namespace lcs
