#include <catch2/catch_amalgamated.hpp>

#include "lcs/cauchy_graph.hpp"

#include <cmath>
#include <vector>

using namespace lcs;

namespace {

std::shared_ptr<const ConeModel> sharedCone() {
    static auto cone = makeDiskCone(1.0, 4);
    return cone;
}

} // namespace

TEST_CASE("graphs require one positive radius per vertex") {
    auto cone = sharedCone();
    std::vector<double> f(static_cast<std::size_t>(cone->vertexCount()), 1.0);
    REQUIRE_NOTHROW(CauchyGraph(cone, f));
    f[3] = 0.0;
    REQUIRE_THROWS_AS(CauchyGraph(cone, f), InputError);
    f[3] = -2.0;
    REQUIRE_THROWS_AS(CauchyGraph(cone, f), InputError);
    REQUIRE_THROWS_AS(CauchyGraph(cone, std::vector<double>{1.0, 2.0}), InputError);
    REQUIRE_THROWS_AS(CauchyGraph(nullptr, {}), InputError);
    const CauchyGraph g(cone, std::vector<double>(static_cast<std::size_t>(cone->vertexCount()), 1.0));
    REQUIRE_THROWS_AS(g.value(-1), InputError);
    REQUIRE_THROWS_AS(g.value(cone->vertexCount()), InputError);
}

TEST_CASE("constant graphs validate in both modes with zero slope") {
    auto cone = sharedCone();
    const CauchyGraph g(cone, std::vector<double>(static_cast<std::size_t>(cone->vertexCount()), 2.5));
    const auto cauchy = validateGraph(g, GraphMode::cauchy);
    REQUIRE(cauchy.ok);
    REQUIRE(cauchy.worstRatio == 0.0);
    REQUIRE(validateGraph(g, GraphMode::strong).ok);
}

TEST_CASE("the distance-to-a-vertex graph sits exactly on the Lipschitz boundary") {
    auto cone = sharedCone();
    std::vector<double> f(static_cast<std::size_t>(cone->vertexCount()));
    for (int p = 0; p < cone->vertexCount(); ++p)
        f[static_cast<std::size_t>(p)] = std::exp(cone->domainDistance(0, p));
    const CauchyGraph g(cone, std::move(f));
    const auto cauchy = validateGraph(g, GraphMode::cauchy);
    REQUIRE(cauchy.ok);
    // Along each shortest-path tree edge the log-slope is exactly 1.
    REQUIRE(cauchy.worstRatio == Catch::Approx(1.0).margin(1e-12));
    REQUIRE_FALSE(validateGraph(g, GraphMode::strong).ok);
    // Slope exactly 1 never produces a timelike pair, only null noise.
    const auto ach = achronalityCheck(g);
    REQUIRE(ach.ok);
    REQUIRE(ach.worstDistance <= 1e-6);
}

TEST_CASE("bumped graphs are rejected with the offending pair") {
    auto cone = sharedCone();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        const auto g = makeViolatingGraph(cone, rng);
        const auto val = validateGraph(g, GraphMode::cauchy);
        REQUIRE_FALSE(val.ok);
        REQUIRE(val.worstRatio > 1.0);
        // The worst pair involves the bumped vertex (the only non-constant one).
        const double base = 1.0;
        const bool pBumped = g.value(val.p) != base;
        const bool qBumped = g.value(val.q) != base;
        REQUIRE((pBumped || qBumped));
        // A Lipschitz violation produces a timelike pair on the graph itself.
        const auto ach = achronalityCheck(g);
        REQUIRE_FALSE(ach.ok);
        REQUIRE(ach.worstDistance > 1e-3);
    }
}

TEST_CASE("generated strong graphs validate, stay in band, and are achronal") {
    auto cone = sharedCone();
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        Rng sub = rng.fork();
        const auto g = randomStrongGraph(cone, sub, 0.05, 0.05);
        REQUIRE(validateGraph(g, GraphMode::strong, 0.05).ok);
        for (int p = 0; p < g.size(); ++p)
            REQUIRE(std::abs(std::log(g.value(p))) <= 0.05 + 1e-12);
        const auto ach = achronalityCheck(g);
        REQUIRE(ach.ok);
    }
    // Same seed, same graph: generation is deterministic.
    Rng a(123), b(123);
    REQUIRE(randomStrongGraph(cone, a).values() == randomStrongGraph(cone, b).values());
}

TEST_CASE("the Lipschitz envelope bounds seeds from below and is Lipschitz") {
    auto cone = sharedCone();
    const int n = cone->vertexCount();
    Rng rng(5);
    std::vector<double> seeds(static_cast<std::size_t>(n));
    for (auto& s : seeds) s = rng.uniform(-1.0, 1.0);
    const double L = 0.7;
    const auto h = lipschitzEnvelope(*cone, seeds, L);
    for (int p = 0; p < n; ++p) {
        REQUIRE(h[static_cast<std::size_t>(p)] <= seeds[static_cast<std::size_t>(p)]);
        for (int q = p + 1; q < n; ++q)
            REQUIRE(std::abs(h[static_cast<std::size_t>(p)] - h[static_cast<std::size_t>(q)]) <=
                    L * cone->domainDistance(p, q) + 1e-9);
    }
    // Already-Lipschitz input (a constant) is a fixed point of the envelope.
    const std::vector<double> flat(static_cast<std::size_t>(n), 0.3);
    REQUIRE(lipschitzEnvelope(*cone, flat, L) == flat);
    REQUIRE_THROWS_AS(lipschitzEnvelope(*cone, {1.0}, L), InputError);
}

TEST_CASE("points off a strong graph see it chronologically") {
    auto cone = sharedCone();
    Rng rng(31);
    const auto g = randomStrongGraph(cone, rng);
    std::vector<ConePoint> probes;
    for (int p = 0; p < g.size(); p += 17) {
        probes.push_back({p, 2.0 * g.value(p)});   // above: the ray point is below it
        probes.push_back({p, 0.5 * g.value(p)});   // below: the ray point is above it
    }
    probes.push_back(ConeModel::apex());           // strictly below everything
    REQUIRE(chronologicallyObserving(g, probes).ok);
    // Probes sitting on the graph are outside the property's domain.
    REQUIRE_THROWS_AS(chronologicallyObserving(g, {g.point(4)}), InputError);
}

TEST_CASE("timelike pairs are intercepted by the clause matching their position") {
    auto cone = sharedCone();
    const int n = cone->vertexCount();
    Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        Rng sub = rng.fork();
        const auto g = randomStrongGraph(cone, sub);
        std::vector<std::pair<ConePoint, ConePoint>> pairs;
        std::vector<int> expected;
        for (int k = 0; k < 30; ++k) {
            const int px = static_cast<int>(sub.below(static_cast<std::uint64_t>(n)));
            const int pz = static_cast<int>(sub.below(static_cast<std::uint64_t>(n)));
            const double gap = cone->domainDistance(px, pz);
            switch (k % 3) {
                case 0: {   // straddling: x below the graph, z above it
                    const double rx = g.value(px) * std::exp(-sub.uniform(0.3, 1.5));
                    const double rz = std::max(rx * std::exp(gap + sub.uniform(0.3, 1.5)),
                                               g.value(pz) * std::exp(sub.uniform(0.05, 1.0)));
                    pairs.push_back({{px, rx}, {pz, rz}});
                    expected.push_back(2);
                    break;
                }
                case 1: {   // both strictly below the graph
                    const double rx = g.value(px) * std::exp(-2.0 - gap);
                    const double rz = std::min(rx * std::exp(gap + 0.1),
                                               g.value(pz) * std::exp(-0.01));
                    if (!(rz > rx * std::exp(gap))) continue;
                    pairs.push_back({{px, rx}, {pz, rz}});
                    expected.push_back(1);
                    break;
                }
                default: {  // both strictly above the graph
                    const double rx = g.value(px) * std::exp(0.01 + sub.uniform(0.0, 0.5));
                    const double rz = rx * std::exp(gap + sub.uniform(0.1, 1.0));
                    pairs.push_back({{px, rx}, {pz, rz}});
                    expected.push_back(3);
                    break;
                }
            }
        }
        const auto rep = weaklyTimelikeIntercepting(g, pairs, 0.01);
        REQUIRE(rep.ok);
        for (std::size_t i = 0; i < pairs.size(); ++i) REQUIRE(rep.clause[i] == expected[i]);
    }
}

TEST_CASE("radial straddling pairs are intercepted with exact additivity") {
    auto cone = sharedCone();
    Rng rng(9);
    const auto g = randomStrongGraph(cone, rng);
    const int p = 42;
    const std::vector<std::pair<ConePoint, ConePoint>> radial{
        {{p, 0.25 * g.value(p)}, {p, 4.0 * g.value(p)}}};
    const auto rep = weaklyTimelikeIntercepting(g, radial, 1e-12);
    REQUIRE(rep.ok);
    REQUIRE(rep.clause[0] == 2);
    REQUIRE(rep.witness[0] == p);

    // A pair rising from the apex is split exactly at the graph as well.
    const std::vector<std::pair<ConePoint, ConePoint>> fromApex{
        {ConeModel::apex(), {p, 4.0 * g.value(p)}}};
    const auto apexRep = weaklyTimelikeIntercepting(g, fromApex, 1e-12);
    REQUIRE(apexRep.ok);
    REQUIRE(apexRep.clause[0] == 2);

    // Spacelike pairs are outside the property's domain.
    const int q = 43;
    const double far = cone->domainDistance(p, q);
    const std::vector<std::pair<ConePoint, ConePoint>> spacelike{
        {{p, 1.0}, {q, std::exp(0.5 * far)}}};
    REQUIRE_THROWS_AS(weaklyTimelikeIntercepting(g, spacelike, 0.01), InputError);
}
