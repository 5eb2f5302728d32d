#include <catch2/catch_amalgamated.hpp>

#include "lcs/time_function.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace lcs;
using Catch::Matchers::ContainsSubstring;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Four points of the flat plane: u below, x and y incomparable in the middle
// at timelike distance sqrt(8) respectively sqrt(5) from both ends, v on top.
FiniteLorentzianSpace fourPointSpace() {
    auto s = FiniteLorentzianSpace::make(4);
    s.labels = {"u", "x", "y", "v"};
    auto set = [&](int i, int j, double d) { s.d(i, j) = d; s.relate(i, j); };
    set(0, 1, std::sqrt(8.0));
    set(0, 2, std::sqrt(5.0));
    set(1, 3, std::sqrt(8.0));
    set(2, 3, std::sqrt(5.0));
    set(0, 3, 6.0);
    return s;
}

FiniteLorentzianSpace diamondSpace(double toB, double toC, double fromB, double fromC) {
    auto s = FiniteLorentzianSpace::make(4);
    s.labels = {"a", "b", "c", "d"};
    auto set = [&](int i, int j, double d) { s.d(i, j) = d; s.relate(i, j); };
    set(0, 1, toB);
    set(0, 2, toC);
    set(1, 3, fromB);
    set(2, 3, fromC);
    set(0, 3, 2.0);
    return s;
}

} // namespace

TEST_CASE("three-point chain matches the hand-computed series") {
    const auto s = chainSpace({1.0, 1.0}, {"a", "b", "c"});
    const auto tf = buildTimeFunction(s);
    // Dyadic weights against distances 1 and 2 give exact binary fractions.
    REQUIRE(tf.fVal[0] == 0.0);
    REQUIRE(tf.fVal[1] == 0.25);
    REQUIRE(tf.fVal[2] == Catch::Approx(11.0 / 24).margin(1e-15));
    REQUIRE(tf.gVal[0] == Catch::Approx(5.0 / 24).margin(1e-15));
    REQUIRE(tf.gVal[1] == 0.0625);
    REQUIRE(tf.gVal[2] == 0.0);
    REQUIRE(tf.tau[0] == -inf);
    REQUIRE(tf.tau[1] == Catch::Approx(std::log(4.0)).margin(1e-12));
    REQUIRE(tf.tau[2] == inf);
    REQUIRE(tf.enumeration == std::vector<int>{0, 1, 2});
}

TEST_CASE("two-point chain sits entirely on the boundary") {
    const auto tf = buildTimeFunction(chainSpace({1.0}, {"a", "b"}));
    REQUIRE(tf.tau[0] == -inf);
    REQUIRE(tf.tau[1] == inf);
    REQUIRE(tf.fVal[1] == 0.25);
    REQUIRE(tf.gVal[0] == 0.125);
}

TEST_CASE("reversing the enumeration moves the value but not the order") {
    const auto s = chainSpace({1.0, 1.0}, {"a", "b", "c"});
    const auto tf = buildTimeFunction(s, {2, 1, 0});
    REQUIRE(tf.tau[1] == Catch::Approx(-std::log(4.0)).margin(1e-12));
    REQUIRE(tf.tau[0] == -inf);
    REQUIRE(tf.tau[2] == inf);
    REQUIRE(tf.tau[1] != buildTimeFunction(s).tau[1]);
}

TEST_CASE("incomparable points may share a value when their profiles cancel") {
    const auto s = fourPointSpace();
    REQUIRE(validateSpace(s).ok);
    const auto tf = buildTimeFunction(s);
    // For both middle points the same distance feeds f (from u, weight 1/2)
    // and g (to v, weight 1/16), so the ratio is exactly 8 for each of them.
    REQUIRE(tf.tau[1] == tf.tau[2]);
    REQUIRE(tf.tau[1] == Catch::Approx(std::log(8.0)).margin(1e-15));
    REQUIRE(tf.tau[0] == -inf);
    REQUIRE(tf.tau[3] == inf);
}

TEST_CASE("the corner-symmetric diamond is rejected as indistinguishable") {
    const auto dia = diamondSpace(1.0, 1.0, 1.0, 1.0);
    REQUIRE(validateSpace(dia).ok);
    REQUIRE_FALSE(verifyDistinguishing(dia).ok);
    REQUIRE_THROWS_WITH(buildTimeFunction(dia),
                        ContainsSubstring("b") && ContainsSubstring("c") &&
                            ContainsSubstring("not distinguishing"));
}

TEST_CASE("preconditions are rejected with named errors") {
    // A null pair a <= b at the past boundary, distinguished through c: the
    // chronological and causal past boundaries disagree, and both a and b
    // would sit at time value minus infinity.
    auto bub = FiniteLorentzianSpace::make(3);
    bub.labels = {"a", "b", "c"};
    bub.d(0, 2) = 2.0;
    bub.relate(0, 2);
    bub.d(1, 2) = 1.0;
    bub.relate(1, 2);
    bub.relate(0, 1);
    REQUIRE(validateSpace(bub).ok);
    REQUIRE(verifyDistinguishing(bub).ok);
    REQUIRE_THROWS_WITH(buildTimeFunction(bub), ContainsSubstring("bubbling"));

    // An isolated point has empty chronological past and future.
    auto iso = FiniteLorentzianSpace::make(3);
    iso.labels = {"p", "a", "b"};
    iso.d(1, 2) = 1.0;
    iso.relate(1, 2);
    REQUIRE(validateSpace(iso).ok);
    REQUIRE_THROWS_WITH(buildTimeFunction(iso),
                        ContainsSubstring("p") && ContainsSubstring("spacelike"));

    const auto s = chainSpace({1.0, 1.0}, {"a", "b", "c"});
    REQUIRE_THROWS_AS(buildTimeFunction(s, {0, 2, 1, 1}), InputError);
    REQUIRE_THROWS_AS(buildTimeFunction(s, {0, 2, 2}), InputError);
}

TEST_CASE("level crossing on the slightly asymmetric diamond") {
    const auto dia = diamondSpace(1.0, 1.25, 1.0, 0.75);
    REQUIRE(validateSpace(dia).ok);
    const auto tf = buildTimeFunction(dia);
    for (const double level :
         {tf.tau[1], tf.tau[2], 0.0, (tf.tau[1] + tf.tau[2]) / 2, 17.0, -17.0}) {
        const auto r = verifyLevelCrossing(dia, tf, level);
        REQUIRE(r.ok);
        REQUIRE(r.chainsTotal == 2.0);
        REQUIRE(r.chainsChecked == 2);
        REQUIRE(r.straddling == 2);
        REQUIRE(r.nonStraddling == 0);
        REQUIRE_FALSE(r.truncated);
    }
}

TEST_CASE("a hand-built table drives the symmetric diamond's chains") {
    const auto dia = diamondSpace(1.0, 1.0, 1.0, 1.0);
    TimeFunctionValues hand;
    hand.tau = {-inf, 0.0, 0.0, inf};
    hand.fVal = {0.0, 0.25, 0.25, 0.5};
    hand.gVal = {0.5, 0.25, 0.25, 0.0};
    // Level zero is hit exactly at b and c; the other levels are jumped over.
    for (const double level : {0.0, 1.0, -0.5}) {
        const auto r = verifyLevelCrossing(dia, hand, level);
        REQUIRE(r.ok);
        REQUIRE(r.chainsTotal == 2.0);
        REQUIRE(r.straddling == 2);
    }
    REQUIRE_THROWS_AS(verifyLevelCrossing(dia, hand, inf), InputError);
    REQUIRE_THROWS_AS(verifyLevelCrossing(dia, hand, 0.0, 0), InputError);
    TimeFunctionValues shortTable;
    shortTable.tau = {0.0, 1.0};
    REQUIRE_THROWS_AS(verifyLevelCrossing(dia, shortTable, 0.0), InputError);
}

TEST_CASE("random posets build strictly monotone functions that chains cross once") {
    int built = 0, skipped = 0;
    std::uint64_t seed = 0;
    double maxChains = 0.0;
    while (built < 200) {
        const auto s = randomWeightedPoset(700 + seed++);
        if (!verifyDistinguishing(s).ok) {
            ++skipped;
            continue;
        }
        const auto tf = buildTimeFunction(s);  // throws on any monotonicity failure
        std::vector<double> finite;
        for (const double t : tf.tau)
            if (std::isfinite(t)) finite.push_back(t);
        std::sort(finite.begin(), finite.end());
        // A poset whose points all sit on the boundary has no finite values;
        // any finite level then works, jumped over in one consecutive step.
        std::vector<double> levels{0.0};
        if (!finite.empty()) {
            levels.push_back(finite[finite.size() / 2]);
            levels.push_back((finite.front() + finite.back()) / 2);
            levels.push_back(finite[finite.size() / 4] + 0.1);
        }
        for (const double level : levels) {
            const auto r = verifyLevelCrossing(s, tf, level);
            REQUIRE(r.ok);
            REQUIRE_FALSE(r.truncated);
            maxChains = std::max(maxChains, r.chainsTotal);
        }
        ++built;
    }
    REQUIRE(skipped == 19);
    REQUIRE(maxChains == 51.0);

    // Spell the monotonicity property out once, directly.
    const auto s = randomWeightedPoset(700);
    const auto tf = buildTimeFunction(s);
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            if (x != y && s.related(x, y))
                REQUIRE(tf.tauPrecise[static_cast<std::size_t>(x)] <
                        tf.tauPrecise[static_cast<std::size_t>(y)]);
}

TEST_CASE("a chain-rich layered space respects the enumeration budget") {
    // Twelve layers of two vertices each, fully causal between layers with
    // distance equal to the layer difference: 2^12 maximal chains.
    const int layers = 12;
    auto s = FiniteLorentzianSpace::make(2 * layers);
    for (int i = 0; i < 2 * layers; ++i)
        for (int j = 0; j < 2 * layers; ++j)
            if (j / 2 > i / 2) {
                s.d(i, j) = double(j / 2 - i / 2);
                s.relate(i, j);
            }
    REQUIRE(validateSpace(s).ok);
    TimeFunctionValues hand;
    for (int i = 0; i < 2 * layers; ++i) hand.tau.push_back(double(i / 2));

    auto r = verifyLevelCrossing(s, hand, 5.5, 100);
    REQUIRE(r.chainsTotal == 4096.0);
    REQUIRE(r.chainsChecked == 100);
    REQUIRE(r.truncated);
    REQUIRE(r.ok);

    r = verifyLevelCrossing(s, hand, 5.5);
    REQUIRE(r.chainsChecked == 4096);
    REQUIRE_FALSE(r.truncated);
    REQUIRE(r.ok);
    REQUIRE(r.straddling == 4096);

    // An exact hit at a whole layer still counts as a single crossing.
    r = verifyLevelCrossing(s, hand, 6.0);
    REQUIRE(r.ok);
    REQUIRE(r.straddling == 4096);

    // A level below every value straddles nothing and reports a witness.
    r = verifyLevelCrossing(s, hand, -1.0);
    REQUIRE(r.ok);
    REQUIRE(r.nonStraddling == 4096);
    REQUIRE(r.firstNonStraddling.size() == layers);

    auto cyc = FiniteLorentzianSpace::make(2);
    cyc.requireCausality = false;
    cyc.relate(0, 1);
    cyc.relate(1, 0);
    TimeFunctionValues two;
    two.tau = {0.0, 1.0};
    REQUIRE_THROWS_AS(verifyLevelCrossing(cyc, two, 0.5), InputError);
}

TEST_CASE("building twice gives identical values") {
    const auto s = randomWeightedPoset(912);
    REQUIRE(verifyDistinguishing(s).ok);
    const auto a = buildTimeFunction(s);
    const auto b = buildTimeFunction(s);
    REQUIRE(a.tau == b.tau);
    REQUIRE(a.fVal == b.fVal);
    REQUIRE(a.gVal == b.gVal);
}
