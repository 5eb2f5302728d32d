#include <catch2/catch_amalgamated.hpp>

#include "lcs/cone.hpp"
#include "lcs/hyperbolic.hpp"
#include "lcs/intrinsic.hpp"
#include "lcs/minkowski.hpp"

#include <cmath>

using namespace lcs;

TEST_CASE("hyperboloid points lie on the unit sheet") {
    for (double rho : {0.0, 0.125, 0.5, 1.0, 2.5}) {
        for (double theta : {0.0, 0.7, 3.1, 5.9}) {
            const HPoint v = hyperboloidPoint(rho, theta);
            REQUIRE(std::abs(lorentzInner(v, v) + 1.0) <= 1e-12);
            REQUIRE(v[0] >= 1.0);
        }
    }
}

TEST_CASE("hyperbolic distance matches closed forms") {
    const HPoint a = hyperboloidPoint(0.3, 1.1);
    const HPoint b = hyperboloidPoint(0.9, 1.1);
    // Same angle: distance is the radial gap exactly.
    REQUIRE(hyperbolicDistance(a, b) == Catch::Approx(0.6).margin(1e-12));
    REQUIRE(hyperbolicDistance(a, a) == 0.0);
    REQUIRE(hyperbolicDistance(a, b) == hyperbolicDistance(b, a));

    // Right triangle with legs 1, 1 at the origin: hypotenuse acosh(cosh(1)^2).
    const HPoint u = hyperboloidPoint(1.0, 0.0);
    const HPoint w = hyperboloidPoint(1.0, 1.5707963267948966);
    REQUIRE(hyperbolicDistance(u, w) == Catch::Approx(1.51337400659650396).margin(1e-12));
}

TEST_CASE("disk mesh sizes follow the ring layout") {
    // rings = 2 * resolution, ring k holds 6k vertices: n = 1 + 3*rings*(rings+1).
    REQUIRE(buildDiskMesh(1.0, 1).vertices.size() == 19);
    REQUIRE(buildDiskMesh(1.0, 2).vertices.size() == 61);
    REQUIRE(buildDiskMesh(1.0, 4).vertices.size() == 217);
}

TEST_CASE("disk mesh validates and has the expected edge scale") {
    const auto mesh = buildDiskMesh(1.0, 4);
    const auto rep = validateMesh(mesh);
    INFO(rep.failedInvariant);
    REQUIRE(rep.ok);

    IntrinsicDistanceOracle oracle(mesh);
    // Radial edges have length radius / rings = 0.125 exactly.
    REQUIRE(oracle.minEdgeWeight() == Catch::Approx(0.125).margin(1e-12));
    REQUIRE(oracle.maxEdgeWeight() < 0.22);
}

TEST_CASE("graph distance dominates ambient distance with bounded stretch") {
    const auto mesh = buildDiskMesh(1.0, 4);
    IntrinsicDistanceOracle oracle(mesh);
    const int n = oracle.size();
    double worstRatio = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double ambient = hyperbolicDistance(mesh.vertices[static_cast<std::size_t>(i)],
                                                      mesh.vertices[static_cast<std::size_t>(j)]);
            const double graph = oracle.distance(i, j);
            // Paths are concatenations of geodesic segments, so they can never
            // undercut the ambient geodesic.
            REQUIRE(graph >= ambient - 1e-12);
            if (ambient > 1e-9) worstRatio = std::max(worstRatio, graph / ambient);
        }
    }
    // Measured 1.3398 at this resolution; fails loudly if the mesh degrades.
    REQUIRE(worstRatio < 1.35);
}

TEST_CASE("center-to-rim distances are exact along spokes") {
    const auto mesh = buildDiskMesh(1.0, 4);
    IntrinsicDistanceOracle oracle(mesh);
    const int n = oracle.size();
    const int rimCount = 6 * 8;                 // outermost ring at resolution 4
    const int rimStart = n - rimCount;
    double lo = 1e9, hi = 0.0;
    for (int j = rimStart; j < n; ++j) {
        const double d = oracle.distance(0, j);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    // Every ring contains the six spoke angles, so the best rim vertex is
    // reached by a straight radial chain of total length exactly the radius.
    REQUIRE(lo == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(hi < 1.14);

    // Two opposite rim spoke vertices: both radial chains pass the center.
    REQUIRE(oracle.distance(rimStart, rimStart + rimCount / 2) ==
            Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("oracle is symmetric and satisfies the triangle inequality") {
    const auto mesh = buildDiskMesh(1.0, 2);
    IntrinsicDistanceOracle oracle(mesh);
    const int n = oracle.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            REQUIRE(oracle.distance(i, j) == oracle.distance(j, i));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; b += 3)
            for (int c = 0; c < n; c += 5)
                REQUIRE(oracle.distance(a, c) <=
                        oracle.distance(a, b) + oracle.distance(b, c) + 1e-12);
}

TEST_CASE("shortest paths walk adjacent vertices and sum to the distance") {
    const auto mesh = buildDiskMesh(1.0, 4);
    IntrinsicDistanceOracle oracle(mesh);
    const int target = oracle.size() - 1;
    const auto path = oracle.shortestPath(0, target);
    REQUIRE(path.front() == 0);
    REQUIRE(path.back() == target);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const int u = path[k], v = path[k + 1];
        bool adjacent = false;
        double w = 0.0;
        for (const auto& [nbr, len] : mesh.adjacency[static_cast<std::size_t>(u)]) {
            if (nbr == v) {
                adjacent = true;
                w = len;
            }
        }
        REQUIRE(adjacent);
        total += w;
    }
    REQUIRE(total == Catch::Approx(oracle.distance(0, target)).margin(1e-9));
}

TEST_CASE("annulus mesh forces a detour around the hole") {
    const auto mesh = buildAnnulusMesh(0.5, 1.0, 4);
    REQUIRE(mesh.vertices.size() == 432);
    const auto rep = validateMesh(mesh);
    INFO(rep.failedInvariant);
    REQUIRE(rep.ok);

    IntrinsicDistanceOracle oracle(mesh);
    // Antipodal points on the inner rim: the ambient geodesic runs straight
    // through the removed disk and has length exactly 1.
    const int half = 12 * 4 / 2;
    const double ambient = hyperbolicDistance(mesh.vertices[0], mesh.vertices[static_cast<std::size_t>(half)]);
    REQUIRE(ambient == Catch::Approx(1.0).margin(1e-12));
    const double detour = oracle.distance(0, half);
    REQUIRE(detour > 1.6);
    REQUIRE(detour < 1.7);
}

TEST_CASE("disconnected meshes are rejected") {
    HyperbolicMesh mesh;
    mesh.vertices.push_back(hyperboloidPoint(0.0, 0.0));
    mesh.vertices.push_back(hyperboloidPoint(1.0, 0.0));
    mesh.finalize();
    const auto rep = validateMesh(mesh);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.failedInvariant == "connected");
    REQUIRE_THROWS_AS(IntrinsicDistanceOracle(mesh), InputError);
}

TEST_CASE("table-backed oracles answer distances but carry no paths") {
    const auto oracle = IntrinsicDistanceOracle::fromTable(2, {0.0, 3.0, 3.0, 0.0});
    REQUIRE(oracle.size() == 2);
    REQUIRE(oracle.distance(0, 1) == 3.0);
    REQUIRE_FALSE(oracle.hasPaths());
    REQUIRE_THROWS_AS(oracle.shortestPath(0, 1), InputError);
}

TEST_CASE("cone distance formula matches closed-form values") {
    REQUIRE(coneDistanceFormula(1.0, 2.0, 0.5) ==
            Catch::Approx(0.69964000684243097).margin(1e-12));
    REQUIRE(coneDistanceFormula(0.5, 3.0, 1.0) ==
            Catch::Approx(2.14959486777259232).margin(1e-12));
    // Same ray: plain radial gap, exact.
    REQUIRE(coneDistanceFormula(1.0, 2.0, 0.0) == 1.0);
    REQUIRE(coneDistanceFormula(2.0, 1.0, 0.0) == 0.0);
    // Angular gap too wide for the radial climb: spacelike.
    REQUIRE(coneDistanceFormula(1.0, 1.2, 0.5) == 0.0);
}

TEST_CASE("cone distance vanishes continuously at the causal boundary") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const double w = rng.uniform(0.0, 2.0);
        const double ra = std::exp(rng.uniform(-1.0, 1.0));
        // Radial log-gap exactly equal to the angular distance: the exact value
        // is zero; floating point leaves at most square-root-of-ulp noise.
        REQUIRE(coneDistanceFormula(ra, ra * std::exp(w), w) <= ra * 1e-6);
    }
}

TEST_CASE("cone apex behaves as a global minimum") {
    const auto cone = makeDiskCone(1.0, 2);
    const ConePoint apex = ConeModel::apex();
    const ConePoint p{5, 1.7};
    REQUIRE(cone->distance(apex, p) == 1.7);
    REQUIRE(cone->distance(p, apex) == 0.0);
    REQUIRE(cone->causallyRelated(apex, p));
    REQUIRE_FALSE(cone->causallyRelated(p, apex));
    REQUIRE(cone->causallyRelated(apex, apex));
    // Apexes compare equal regardless of the vertex tag.
    REQUIRE(ConePoint{3, 0.0} == ConePoint{7, 0.0});
}

TEST_CASE("cone causal relation follows the radial log-gap rule") {
    const auto cone = makeDiskCone(1.0, 2);
    const int a = 1, b = cone->vertexCount() - 1;
    const double gap = cone->domainDistance(a, b);
    REQUIRE(gap > 0.1);
    const ConePoint p{a, 1.0};
    REQUIRE(cone->causallyRelated(p, ConePoint{b, std::exp(gap + 0.01)}));
    REQUIRE_FALSE(cone->causallyRelated(p, ConePoint{b, std::exp(gap - 0.01)}));
    REQUIRE(cone->distance(p, ConePoint{b, std::exp(gap + 0.01)}) > 0.0);
    REQUIRE(cone->distance(p, ConePoint{b, std::exp(gap - 0.01)}) == 0.0);
}

TEST_CASE("cone distance obeys the reverse triangle inequality on causal chains") {
    const auto cone = makeDiskCone(1.0, 2);
    const auto& oracle = cone->oracle();
    const int n = cone->vertexCount();
    Rng rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const int p1 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int p2 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const int p3 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const double r1 = std::exp(rng.uniform(-1.0, 1.0));
        const double r2 = r1 * std::exp(oracle.distance(p1, p2) + rng.uniform(0.0, 1.5));
        const double r3 = r2 * std::exp(oracle.distance(p2, p3) + rng.uniform(0.0, 1.5));
        const ConePoint a{p1, r1}, b{p2, r2}, c{p3, r3};
        REQUIRE(cone->causallyRelated(a, b));
        REQUIRE(cone->causallyRelated(b, c));
        REQUIRE(cone->distance(a, b) + cone->distance(b, c) <=
                cone->distance(a, c) + 1e-12);
        // Chains through the apex obey the same inequality.
        REQUIRE(cone->distance(ConeModel::apex(), b) + cone->distance(b, c) <=
                cone->distance(ConeModel::apex(), c) + 1e-12);
    }
}

TEST_CASE("cone distance is Lipschitz in the upper radius on deep timelike pairs") {
    // Sampled regime: angular gap in [0, 1.2], radius ratio at least 2 e^{gap}.
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const double dOmega = rng.uniform(0.0, 1.2);
        const double ra = std::exp(rng.uniform(-1.0, 1.0));
        const double rb = ra * 2.0 * std::exp(dOmega) * std::exp(rng.uniform(0.0, 1.0));
        const double delta = std::exp(rng.uniform(std::log(1e-6), std::log(0.01))) * rb;
        const double shift = std::abs(coneDistanceFormula(ra, rb + delta, dOmega) -
                                      coneDistanceFormula(ra, rb, dOmega));
        REQUIRE(shift <= (std::cosh(dOmega) + 1.0) * delta * 1.05);
    }
}

TEST_CASE("cone points are checked for range and sign") {
    const auto cone = makeDiskCone(1.0, 1);
    REQUIRE_THROWS_AS(cone->checkPoint(ConePoint{0, -1.0}), InputError);
    REQUIRE_THROWS_AS(cone->checkPoint(ConePoint{cone->vertexCount(), 1.0}), InputError);
    REQUIRE_NOTHROW(cone->checkPoint(ConePoint{cone->vertexCount() - 1, 1.0}));
    REQUIRE_NOTHROW(cone->checkPoint(ConeModel::apex()));
}

TEST_CASE("flat distance separates timelike, null and spacelike pairs") {
    REQUIRE(flatDistance({0.0, 0.0}, {5.0, 3.0}) == Catch::Approx(4.0).margin(1e-15));
    REQUIRE(flatDistance({0.0, 0.0}, {3.0, 5.0}) == 0.0);   // spacelike
    REQUIRE(flatDistance({0.0, 0.0}, {1.0, 1.0}) == 0.0);   // null
    REQUIRE(flatDistance({5.0, 3.0}, {0.0, 0.0}) == 0.0);   // backwards in time
}

TEST_CASE("time slices sample the segment uniformly") {
    const auto pts = timeSlice(0.25, -1.0, 1.0, 5);
    REQUIRE(pts.size() == 5);
    REQUIRE(pts.front() == Event{0.25, -1.0});
    REQUIRE(pts.back() == Event{0.25, 1.0});
    REQUIRE(pts[2] == Event{0.25, 0.0});
    const auto single = timeSlice(0.5, -1.0, 1.0, 1);
    REQUIRE(single.size() == 1);
    REQUIRE(single[0] == Event{0.5, 0.0});
}

TEST_CASE("the open strip knows its horizontal boundaries") {
    const StripModel strip;
    REQUIRE(strip.contains({0.5, 10.0}));
    REQUIRE_FALSE(strip.contains({0.0, 0.0}));
    REQUIRE_FALSE(strip.contains({1.0, 0.0}));
    REQUIRE(strip.nearPastBoundary({0.0005, 0.0}, 1e-3));
    REQUIRE_FALSE(strip.nearPastBoundary({0.1, 0.0}, 1e-3));
    REQUIRE(strip.nearFutureBoundary({0.9995, 0.0}, 1e-3));
    REQUIRE_FALSE(strip.nearFutureBoundary({0.9, 0.0}, 1e-3));
    REQUIRE_THROWS_AS(strip.slice(1.5, -1.0, 1.0, 3), InputError);
    REQUIRE(strip.slice(0.5, -1.0, 1.0, 3).size() == 3);

    const MinkowskiModel plane;
    REQUIRE(plane.contains({1e9, -1e9}));
    REQUIRE_FALSE(plane.nearPastBoundary({-1e9, 0.0}, 1.0));
    REQUIRE_FALSE(plane.nearFutureBoundary({1e9, 0.0}, 1.0));
    REQUIRE(plane.causallyRelated({0.0, 0.0}, {1.0, 0.5}));
    REQUIRE_FALSE(strip.causallyRelated({0.0, 0.0}, {1.0, 1.5}));
}
