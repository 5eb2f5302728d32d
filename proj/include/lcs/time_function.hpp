#pragma once

#include "lcs/finite_space.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace lcs {

// Values of the series time function tau = ln(f/g) on a finite Lorentzian
// space.  f sums dyadically weighted, saturated distances INTO each point and
// g sums the distances OUT of it, so tau grows strictly along every causal
// pair and diverges to -infinity on the past boundary and +infinity on the
// future boundary.
//
// tau holds the user-facing double values; tauPrecise holds the same numbers
// in extended precision and is what every order comparison uses, since causal
// pairs whose distinguishing term carries a small dyadic weight can be closer
// than one double ulp apart.  Hand-built tables may leave tauPrecise empty,
// in which case checks fall back to tau.
struct TimeFunctionValues {
    std::vector<double> fVal;
    std::vector<double> gVal;
    std::vector<double> tau;
    std::vector<long double> tauPrecise;
    std::vector<int> enumeration;  // enumeration[k] carries weight 2^-(k+1)
};

// Builds tau = ln(f/g) from the series
//
//   f(x) = sum_k 2^-(k+1) * d(z_k, x) / (1 + d(z_k, x)),
//   g(x) = sum_k 2^-(k+1) * d(x, z_k) / (1 + d(x, z_k)),
//
// where (z_k) runs through the given enumeration; a finite space is its own
// dense distinguishing set.  Preconditions, each rejected with a named error:
// the enumeration must be a permutation of the point set, the space must
// distinguish points (otherwise no injective-on-causal-pairs time value can
// exist), the spacelike boundary must be empty (a point with empty
// chronological past and future would need f = g = 0), and the chronological
// and causal boundaries must agree (a null pair into the boundary would pin
// two distinct causally related points at the same infinite value).
//
// After evaluation the two defining properties are machine-checked and any
// violation is raised as an error naming the witness: tau is strictly
// increasing across every causal pair of distinct points, and f respectively
// g vanishes exactly on the past respectively future chronological boundary.
inline TimeFunctionValues buildTimeFunction(const FiniteLorentzianSpace& s,
                                            const std::vector<int>& enumeration) {
    const int n = s.n;
    if (static_cast<int>(enumeration.size()) != n)
        throw InputError("buildTimeFunction: enumeration size does not match the point count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int idx : enumeration) {
        s.checkIndex(idx);
        if (seen[static_cast<std::size_t>(idx)])
            throw InputError("buildTimeFunction: enumeration repeats point " + s.label(idx));
        seen[static_cast<std::size_t>(idx)] = 1;
    }

    const auto dis = verifyDistinguishing(s);
    if (!dis.ok)
        throw InputError("buildTimeFunction: points " + s.label(dis.indistinguishablePair.first) +
                         " and " + s.label(dis.indistinguishablePair.second) +
                         " share a distance profile; the space is not distinguishing");
    const auto bd = computeBoundaries(s);
    if (!bd.spacelikeBoundary.empty())
        throw InputError("buildTimeFunction: point " + s.label(bd.spacelikeBoundary.front()) +
                         " has empty chronological past and future (spacelike boundary)");
    if (!bd.bubblingEmpty)
        throw InputError("buildTimeFunction: the chronological and causal boundaries disagree "
                         "(bubbling boundary); a null pair into the boundary would share an "
                         "infinite time value");

    TimeFunctionValues tf;
    tf.fVal.resize(static_cast<std::size_t>(n));
    tf.gVal.resize(static_cast<std::size_t>(n));
    tf.tau.resize(static_cast<std::size_t>(n));
    tf.tauPrecise.resize(static_cast<std::size_t>(n));
    tf.enumeration = enumeration;

    constexpr long double inf = std::numeric_limits<long double>::infinity();
    for (int x = 0; x < n; ++x) {
        long double f = 0.0L, g = 0.0L, w = 0.5L;
        for (int k = 0; k < n; ++k, w *= 0.5L) {
            const int z = enumeration[static_cast<std::size_t>(k)];
            const long double into = s.d(z, x);
            const long double outOf = s.d(x, z);
            f += w * into / (1.0L + into);
            g += w * outOf / (1.0L + outOf);
        }
        tf.fVal[static_cast<std::size_t>(x)] = static_cast<double>(f);
        tf.gVal[static_cast<std::size_t>(x)] = static_cast<double>(g);
        // Both factors vanishing would put x on the spacelike boundary,
        // rejected above; there is no meaningful value to define here.
        assert(!(f == 0.0L && g == 0.0L));
        long double t;
        if (f == 0.0L)
            t = -inf;
        else if (g == 0.0L)
            t = inf;
        else
            t = std::log(f / g);
        tf.tauPrecise[static_cast<std::size_t>(x)] = t;
        tf.tau[static_cast<std::size_t>(x)] = static_cast<double>(t);
    }

    std::vector<char> pastB(static_cast<std::size_t>(n), 0), futB(static_cast<std::size_t>(n), 0);
    for (int x : bd.pastChronological) pastB[static_cast<std::size_t>(x)] = 1;
    for (int x : bd.futureChronological) futB[static_cast<std::size_t>(x)] = 1;
    for (int x = 0; x < n; ++x) {
        if ((tf.fVal[static_cast<std::size_t>(x)] == 0.0) != (pastB[static_cast<std::size_t>(x)] != 0))
            throw InputError("buildTimeFunction: past-boundary characterization fails at " +
                             s.label(x));
        if ((tf.gVal[static_cast<std::size_t>(x)] == 0.0) != (futB[static_cast<std::size_t>(x)] != 0))
            throw InputError("buildTimeFunction: future-boundary characterization fails at " +
                             s.label(x));
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !s.related(x, y)) continue;
            if (!(tf.tauPrecise[static_cast<std::size_t>(x)] <
                  tf.tauPrecise[static_cast<std::size_t>(y)]))
                throw InputError("buildTimeFunction: time values are not strictly ordered on the "
                                 "causal pair " + s.label(x) + " <= " + s.label(y));
        }

    return tf;
}

inline TimeFunctionValues buildTimeFunction(const FiniteLorentzianSpace& s) {
    std::vector<int> identity(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) identity[static_cast<std::size_t>(i)] = i;
    return buildTimeFunction(s, identity);
}

struct LevelCrossingReport {
    bool ok = true;
    double level = 0.0;
    double chainsTotal = 0.0;  // exact count of maximal chains (path count over covers)
    std::int64_t chainsChecked = 0;
    std::int64_t straddling = 0;
    std::int64_t nonStraddling = 0;
    bool truncated = false;  // the budget cut enumeration short of chainsTotal
    std::vector<int> badChain;
    std::int64_t badCrossings = -1;
    std::vector<int> firstNonStraddling;
};

// Checks that every maximal chain of the causal relation crosses the given
// finite level exactly once.  Maximal chains are the cover-relation paths
// from minimal to maximal points.  A chain straddles the level when
// tau(start) < level < tau(end); straddling chains must cross exactly once,
// where a point with tau equal to the level counts as the crossing and
// otherwise a consecutive pair jumping over it does.  Chains that do not
// straddle are counted and the first one is reported: on a space whose
// boundary points carry infinite tau none can exist, so their presence
// witnesses a chain that fails to run from past to future boundary.
//
// The number of maximal chains can grow exponentially, so it is first counted
// by dynamic programming; enumeration stops at chainBudget chains and the
// report is marked truncated when the count exceeds it.
inline LevelCrossingReport verifyLevelCrossing(const FiniteLorentzianSpace& s,
                                               const TimeFunctionValues& tf, double level,
                                               std::int64_t chainBudget = 200000) {
    if (!std::isfinite(level)) throw InputError("verifyLevelCrossing: level must be finite");
    const int n = s.n;
    if (static_cast<int>(tf.tau.size()) != n)
        throw InputError("verifyLevelCrossing: time values do not match the space");
    const bool precise = !tf.tauPrecise.empty();
    if (precise && static_cast<int>(tf.tauPrecise.size()) != n)
        throw InputError("verifyLevelCrossing: extended-precision values do not match the space");
    if (chainBudget < 1) throw InputError("verifyLevelCrossing: chain budget must be positive");

    auto tauAt = [&](int v) -> long double {
        return precise ? tf.tauPrecise[static_cast<std::size_t>(v)]
                       : static_cast<long double>(tf.tau[static_cast<std::size_t>(v)]);
    };

    // Cover relation and the extremal points of the order.
    std::vector<std::vector<int>> coverSucc(static_cast<std::size_t>(n));
    std::vector<char> isMinimal(static_cast<std::size_t>(n), 1), isMaximal(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !s.related(i, j)) continue;
            isMinimal[static_cast<std::size_t>(j)] = 0;
            isMaximal[static_cast<std::size_t>(i)] = 0;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                cover = z == i || z == j || !(s.related(i, z) && s.related(z, j));
            if (cover) coverSucc[static_cast<std::size_t>(i)].push_back(j);
        }

    LevelCrossingReport rep;
    rep.level = level;

    // Exact chain count; detects causal cycles, which would make the notion
    // of a maximal chain meaningless.
    std::vector<double> memo(static_cast<std::size_t>(n), -1.0);
    std::vector<char> onStack(static_cast<std::size_t>(n), 0);
    std::function<double(int)> countFrom = [&](int v) -> double {
        if (memo[static_cast<std::size_t>(v)] >= 0.0) return memo[static_cast<std::size_t>(v)];
        if (onStack[static_cast<std::size_t>(v)])
            throw InputError("verifyLevelCrossing: the causal relation contains a cycle");
        onStack[static_cast<std::size_t>(v)] = 1;
        double c = isMaximal[static_cast<std::size_t>(v)] ? 1.0 : 0.0;
        for (int u : coverSucc[static_cast<std::size_t>(v)]) c += countFrom(u);
        onStack[static_cast<std::size_t>(v)] = 0;
        return memo[static_cast<std::size_t>(v)] = c;
    };
    // Visit every vertex, not only the minimal ones: a relation whose cycle
    // forms its own component has no minimal vertex to start from, and the
    // walk below would quietly check nothing.
    for (int v = 0; v < n; ++v) countFrom(v);
    for (int v = 0; v < n; ++v)
        if (isMinimal[static_cast<std::size_t>(v)]) rep.chainsTotal += memo[static_cast<std::size_t>(v)];

    const long double lv = static_cast<long double>(level);
    bool stopped = false;
    std::vector<int> chain;
    auto processChain = [&]() {
        if (rep.chainsChecked == chainBudget) {
            stopped = true;
            return;
        }
        ++rep.chainsChecked;
        const bool straddles = tauAt(chain.front()) < lv && lv < tauAt(chain.back());
        if (!straddles) {
            if (rep.nonStraddling == 0) rep.firstNonStraddling = chain;
            ++rep.nonStraddling;
            return;
        }
        ++rep.straddling;
        std::int64_t crossings = 0;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (tauAt(chain[i]) == lv) ++crossings;
            if (i + 1 < chain.size() && tauAt(chain[i]) < lv && lv < tauAt(chain[i + 1]))
                ++crossings;
        }
        if (crossings != 1 && rep.ok) {
            rep.ok = false;
            rep.badChain = chain;
            rep.badCrossings = crossings;
        }
    };
    std::function<void(int)> walk = [&](int v) {
        if (stopped) return;
        chain.push_back(v);
        if (static_cast<int>(chain.size()) > n)
            throw InputError("verifyLevelCrossing: the causal relation contains a cycle");
        if (isMaximal[static_cast<std::size_t>(v)])
            processChain();
        else
            for (int u : coverSucc[static_cast<std::size_t>(v)]) walk(u);
        chain.pop_back();
    };
    for (int v = 0; v < n && !stopped; ++v)
        if (isMinimal[static_cast<std::size_t>(v)]) walk(v);

    rep.truncated = rep.chainsTotal > static_cast<double>(rep.chainsChecked);
    return rep;
}

} // namespace lcs
