#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace lcs {

// Absolute tolerance used by every real-valued inequality verifier unless the
// caller overrides it.  Relations that must stay exactly transitive
// (e.g. the maximal causal relation) compare with no slack instead.
inline constexpr double defaultTolerance = 1e-9;

inline constexpr double infinity = std::numeric_limits<double>::infinity();
inline constexpr double negInfinity = -std::numeric_limits<double>::infinity();

// Addition on {-inf} U [0, +inf] with the convention  -inf + (+inf) = -inf.
inline double extendedAdd(double a, double b) {
    if (a == negInfinity || b == negInfinity) return negInfinity;
    return a + b;
}

inline bool isFiniteNonNegative(double v) { return std::isfinite(v) && v >= 0.0; }

// Thrown when an operation receives input that violates a documented
// precondition (bad index, malformed file, negative radius, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// First failing invariant of a structure check, with the witness tuple that
// broke it (unused slots stay -1).
struct InvariantReport {
    bool ok = true;
    std::string failedInvariant;  // empty when ok
    std::array<int, 3> witness{-1, -1, -1};
};

// Deterministic, platform-independent generator (splitmix64 core).  All
// randomized suites seed one of these so that identical seeds reproduce
// identical results byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    // Independent stream for a sub-experiment.
    Rng fork() { return Rng(next()); }

private:
    std::uint64_t state_;
};

} // namespace lcs
