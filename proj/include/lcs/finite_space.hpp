#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcs/common.hpp"

namespace lcs {

// ---------------------------------------------------------------------------
// Finite causal spaces with a time-separation matrix.
//
// `dist` holds the Lorentzian distance d(i,j) >= 0 (row-major), `causal` the
// relation i <= j as 0/1.  The chronological relation i << j is derived as
// dist(i,j) > 0.  The space is valid when the causal relation is reflexive
// and transitive, contains the chronological one, satisfies the reverse
// triangle inequality d(x,y) + d(y,z) <= d(x,z) along causal chains, and
// (when `requireCausality` is set) is antisymmetric.
// ---------------------------------------------------------------------------
struct FiniteLorentzianSpace {
    int n = 0;
    std::vector<double> dist;          // row-major, n*n
    std::vector<std::uint8_t> causal;  // row-major, n*n
    std::vector<std::string> labels;
    bool requireCausality = true;
    double tolerance = defaultTolerance;

    static FiniteLorentzianSpace make(int count) {
        FiniteLorentzianSpace s;
        s.n = count;
        s.dist.assign(static_cast<std::size_t>(count) * count, 0.0);
        s.causal.assign(static_cast<std::size_t>(count) * count, 0);
        for (int i = 0; i < count; ++i) {
            s.causal[static_cast<std::size_t>(i) * count + i] = 1;
            s.labels.push_back("p" + std::to_string(i));
        }
        return s;
    }

    double d(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
    double& d(int i, int j) { return dist[static_cast<std::size_t>(i) * n + j]; }
    bool related(int i, int j) const { return causal[static_cast<std::size_t>(i) * n + j] != 0; }
    void relate(int i, int j) { causal[static_cast<std::size_t>(i) * n + j] = 1; }
    bool chronological(int i, int j) const { return d(i, j) > tolerance; }

    const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }

    int indexOf(const std::string& name) const {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw InputError("unknown label: " + name);
        return static_cast<int>(it - labels.begin());
    }

    void checkIndex(int i) const {
        if (i < 0 || i >= n) throw InputError("point index out of range: " + std::to_string(i));
    }
};

// Checks run in a fixed order and report the lexicographically first failure.
inline InvariantReport validateSpace(const FiniteLorentzianSpace& s) {
    const int n = s.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!isFiniteNonNegative(s.d(i, j)))
                return {false, "distanceRange", {i, j, -1}};
    for (int i = 0; i < n; ++i)
        if (!s.related(i, i)) return {false, "reflexivity", {i, -1, -1}};
    if (s.requireCausality)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && s.related(i, j) && s.related(j, i))
                    return {false, "antisymmetry", {i, j, -1}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (s.d(i, j) > s.tolerance && !s.related(i, j))
                return {false, "chronologyInCausality", {i, j, -1}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!s.related(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                if (!s.related(j, k)) continue;
                if (!s.related(i, k)) return {false, "transitivity", {i, j, k}};
                if (s.d(i, j) + s.d(j, k) > s.d(i, k) + s.tolerance)
                    return {false, "reverseTriangle", {i, j, k}};
            }
        }
    return {};
}

enum class Sense { past, future };
enum class Relation { chronological, causal };

// I+(x), I-(x), J+(x), J-(x) as sorted index lists.
inline std::vector<int> pastFuture(const FiniteLorentzianSpace& s, int x, Sense sense, Relation rel) {
    s.checkIndex(x);
    std::vector<int> out;
    for (int y = 0; y < s.n; ++y) {
        const int from = sense == Sense::future ? x : y;
        const int to = sense == Sense::future ? y : x;
        const bool in = rel == Relation::causal ? s.related(from, to) : s.chronological(from, to);
        if (in) out.push_back(y);
    }
    return out;
}

struct BoundaryReport {
    std::vector<int> pastChronological;    // I-(x) empty
    std::vector<int> futureChronological;  // I+(x) empty
    std::vector<int> pastCausal;           // J-(x) == {x}
    std::vector<int> futureCausal;         // J+(x) == {x}
    std::vector<int> spacelikeBoundary;    // past- and future-chronological both
    bool bubblingEmpty = false;            // causal and chronological boundaries agree
};

inline BoundaryReport computeBoundaries(const FiniteLorentzianSpace& s) {
    BoundaryReport r;
    for (int x = 0; x < s.n; ++x) {
        bool pastCh = true, futCh = true, pastCa = true, futCa = true;
        for (int y = 0; y < s.n; ++y) {
            if (s.chronological(y, x)) pastCh = false;
            if (s.chronological(x, y)) futCh = false;
            if (y != x && s.related(y, x)) pastCa = false;
            if (y != x && s.related(x, y)) futCa = false;
        }
        if (pastCh) r.pastChronological.push_back(x);
        if (futCh) r.futureChronological.push_back(x);
        if (pastCa) r.pastCausal.push_back(x);
        if (futCa) r.futureCausal.push_back(x);
        if (pastCh && futCh) r.spacelikeBoundary.push_back(x);
    }
    r.bubblingEmpty = r.pastChronological == r.pastCausal && r.futureChronological == r.futureCausal;
    return r;
}

// Largest relation under which d is still monotone in both slots:
//   (x,y) in Jd  iff  for all z:  d(z,x) <= d(z,y)  and  d(y,z) <= d(x,z).
// Comparisons are exact so the result is reflexive and transitive on every
// input; when the declared relation satisfies the reverse triangle
// inequality it is contained in Jd.
inline std::vector<std::uint8_t> maximalCausalRelation(const FiniteLorentzianSpace& s) {
    const int n = s.n;
    std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool in = true;
            for (int z = 0; z < n && in; ++z)
                in = s.d(z, x) <= s.d(z, y) && s.d(y, z) <= s.d(x, z);
            rel[static_cast<std::size_t>(x) * n + y] = in ? 1 : 0;
        }
    return rel;
}

struct DistinguishingReport {
    bool ok = true;
    std::pair<int, int> indistinguishablePair{-1, -1};
};

// Distinct points must differ in some row or column of the distance matrix
// (up to tolerance); otherwise no injective time function can exist.
inline DistinguishingReport verifyDistinguishing(const FiniteLorentzianSpace& s) {
    for (int x = 0; x < s.n; ++x)
        for (int y = x + 1; y < s.n; ++y) {
            bool distinguished = false;
            for (int z = 0; z < s.n && !distinguished; ++z)
                distinguished = std::abs(s.d(z, x) - s.d(z, y)) > s.tolerance ||
                                std::abs(s.d(x, z) - s.d(y, z)) > s.tolerance;
            if (!distinguished) return {false, {x, y}};
        }
    return {};
}

// Sum of consecutive distances along a causal chain.  By the reverse triangle
// inequality dropping interior points never decreases the result, so this is
// the infimum over coarsenings of the given chain.
inline double chainLength(const FiniteLorentzianSpace& s, const std::vector<int>& chain) {
    if (chain.empty()) throw InputError("chainLength: empty chain");
    for (int idx : chain) s.checkIndex(idx);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!s.related(chain[i], chain[i + 1]))
            throw InputError("chainLength: consecutive points not causally related: " +
                             s.label(chain[i]) + " -> " + s.label(chain[i + 1]));
        total += s.d(chain[i], chain[i + 1]);
    }
    return total;
}

enum class CausalityLevel { none, causal, causallySimple, globallyHyperbolic };

inline const char* causalityLevelName(CausalityLevel level) {
    switch (level) {
        case CausalityLevel::none: return "none";
        case CausalityLevel::causal: return "causal";
        case CausalityLevel::causallySimple: return "causallySimple";
        case CausalityLevel::globallyHyperbolic: return "globallyHyperbolic";
    }
    return "none";
}

struct CausalityLevelReport {
    CausalityLevel level = CausalityLevel::none;
    std::pair<int, int> antisymmetryWitness{-1, -1};
};

// On a finite space the discrete topology makes J+/J- closed and causal
// diamonds compact, so the ladder collapses: antisymmetry alone already
// yields the top level, and its failure drops to the bottom.
inline CausalityLevelReport verifyCausalityLevel(const FiniteLorentzianSpace& s) {
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && s.related(i, j) && s.related(j, i))
                return {CausalityLevel::none, {i, j}};
    return {CausalityLevel::globallyHyperbolic, {-1, -1}};
}

// ---------------------------------------------------------------------------
// Extended time separation: values in {-inf} U [0, +inf], with
// ell(x,y) + ell(y,z) <= ell(x,z) under the convention -inf + (+inf) = -inf.
// ---------------------------------------------------------------------------
struct ExtendedTimeSeparation {
    int n = 0;
    std::function<double(int, int)> value;
    double tolerance = defaultTolerance;

    double distance(int x, int y) const { return std::max(0.0, value(x, y)); }
};

// `allowInfinite` admits +inf values (the type supports them); shipped models
// keep every value finite and are verified with the default.
inline InvariantReport checkTimeSeparation(const ExtendedTimeSeparation& ts, bool allowInfinite = false) {
    for (int x = 0; x < ts.n; ++x)
        for (int y = 0; y < ts.n; ++y) {
            const double v = ts.value(x, y);
            if (std::isnan(v) || (v < 0.0 && v != negInfinity))
                return {false, "valueRange", {x, y, -1}};
            if (!allowInfinite && v == infinity) return {false, "infiniteValue", {x, y, -1}};
        }
    for (int x = 0; x < ts.n; ++x)
        if (ts.value(x, x) < 0.0) return {false, "selfNonNegative", {x, -1, -1}};
    for (int x = 0; x < ts.n; ++x)
        for (int y = 0; y < ts.n; ++y)
            for (int z = 0; z < ts.n; ++z) {
                const double lhs = extendedAdd(ts.value(x, y), ts.value(y, z));
                const double rhs = ts.value(x, z);
                if (lhs == negInfinity) continue;
                if (lhs > extendedAdd(rhs, ts.tolerance)) return {false, "reverseTriangle", {x, y, z}};
            }
    return {};
}

// ell(x,y) = d(x,y) on the causal relation and -inf off it; recovering
// d = max(0, ell) gives back the matrix.
inline ExtendedTimeSeparation timeSeparationOf(const FiniteLorentzianSpace& s) {
    ExtendedTimeSeparation ts;
    ts.n = s.n;
    ts.tolerance = s.tolerance;
    ts.value = [&s](int x, int y) { return s.related(x, y) ? s.d(x, y) : negInfinity; };
    return ts;
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

// Totally ordered chain with the given consecutive gaps; distances are the
// partial sums, so the reverse triangle inequality holds with equality.
inline FiniteLorentzianSpace chainSpace(const std::vector<double>& gaps,
                                        const std::vector<std::string>& names = {}) {
    const int n = static_cast<int>(gaps.size()) + 1;
    FiniteLorentzianSpace s = FiniteLorentzianSpace::make(n);
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != n) throw InputError("chainSpace: wrong label count");
        s.labels = names;
    }
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = i + 1; j < n; ++j) {
            sum += gaps[static_cast<std::size_t>(j) - 1];
            s.d(i, j) = sum;
            s.relate(i, j);
        }
    }
    return s;
}

// Random weighted poset: a sparse DAG on indices (edges i -> j only for
// i < j), transitively closed, with d = longest weighted path.  Edge weights
// are dyadic multiples of 1/16 in [0.5, 2] so all path sums are exact in
// double precision and the reverse triangle inequality holds exactly.
inline FiniteLorentzianSpace randomWeightedPoset(std::uint64_t seed, int maxPoints = 50) {
    if (maxPoints < 4) throw InputError("randomWeightedPoset: need at least 4 points");
    Rng rng(seed);
    const int n = 4 + rng.below(maxPoints - 3);
    std::vector<double> weight(static_cast<std::size_t>(n) * n, 0.0);
    auto w = [&](int i, int j) -> double& { return weight[static_cast<std::size_t>(i) * n + j]; };
    auto dyadic = [&]() { return (8 + rng.below(25)) / 16.0; };  // 0.5 .. 2.0 step 1/16

    const double edgeProb = std::min(0.5, 2.0 / n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < edgeProb) w(i, j) = dyadic();

    // No isolated points: every point needs a causal neighbor, otherwise it
    // would sit on the spacelike boundary.
    for (int i = 0; i < n; ++i) {
        bool touched = false;
        for (int j = 0; j < n && !touched; ++j) touched = w(i, j) > 0.0 || w(j, i) > 0.0;
        if (!touched) {
            int other = rng.below(n - 1);
            if (other >= i) ++other;
            if (other < i) w(other, i) = dyadic();
            else w(i, other) = dyadic();
        }
    }

    FiniteLorentzianSpace s = FiniteLorentzianSpace::make(n);
    // Longest weighted path from each source; index order is topological.
    for (int src = 0; src < n; ++src) {
        std::vector<double> best(static_cast<std::size_t>(n), negInfinity);
        best[static_cast<std::size_t>(src)] = 0.0;
        for (int j = src + 1; j < n; ++j)
            for (int i = src; i < j; ++i)
                if (w(i, j) > 0.0 && best[static_cast<std::size_t>(i)] != negInfinity)
                    best[static_cast<std::size_t>(j)] =
                        std::max(best[static_cast<std::size_t>(j)], best[static_cast<std::size_t>(i)] + w(i, j));
        for (int j = src + 1; j < n; ++j)
            if (best[static_cast<std::size_t>(j)] != negInfinity) {
                s.d(src, j) = best[static_cast<std::size_t>(j)];
                s.relate(src, j);
            }
    }
    return s;
}

} // namespace lcs
