#pragma once

#include "lcs/dj.hpp"
#include "lcs/io.hpp"
#include "lcs/report.hpp"
#include "lcs/time_function.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

// Pure subcommand handlers: each takes a parameter struct, runs entirely from
// the seed it is given, writes its artifacts under outDir, and returns the
// common report.  The wall time is the only non-deterministic report field.
namespace lcs::experiments {

namespace detail {

inline std::chrono::steady_clock::time_point tick() { return std::chrono::steady_clock::now(); }

inline double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline void ensureDir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError("cannot create output directory " + dir + ": " + ec.message());
}

inline std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

inline FiniteLorentzianSpace loadSpace(const std::string& path, double tolerance) {
    if (path.empty()) throw InputError("a space file is required (--space)");
    FiniteLorentzianSpace s = std::filesystem::path(path).extension() == ".csv"
                                  ? spaceFromCsv(readTextFile(path))
                                  : spaceFromJson(readJsonFile(path));
    s.tolerance = tolerance;
    return s;
}

template <typename IndexRange>  // std::vector<int> or the std::array<int, 3> witness slots
Json witnessPoints(const FiniteLorentzianSpace& s, const IndexRange& idx) {
    Json out = Json::array();
    for (const int i : idx)
        if (i >= 0) out.push_back(s.label(i));
    return out;
}

} // namespace detail

// ---- flat-region finite samples --------------------------------------------

// Twenty-point finite samples of the strip and the plane, with the ambient
// causal relation and time separation restricted to the sample.  Exact-null
// pairs are rejected so every sampled relation is decided with a margin.
//
// The uniform sampler draws points independently.  On such samples the
// maximal causal relation is typically a strict over-approximation of the
// declared one: excluding a spacelike pair (x,y) needs a sampled witness
// whose separations to x and y differ the right way, and for nearly-null
// spacelike pairs those witnesses live in thin slivers near the light cones
// that twenty random points rarely hit.  The continuum argument that the
// maximal relation recovers causality leans on points approaching x from the
// chronological past, which an independent sample does not provide.
inline FiniteLorentzianSpace flatUniformSample(std::uint64_t seed, bool strip, int count) {
    Rng rng(seed);
    std::vector<Event> pts;
    while (static_cast<int>(pts.size()) < count) {
        Event e;
        e.t = strip ? rng.uniform(0.1, 0.9) : rng.uniform(-1.0, 1.0);
        e.x = rng.uniform(-1.0, 1.0);
        bool nullPair = false;
        for (const auto& q : pts)
            if (std::abs(e.t - q.t) == std::abs(e.x - q.x)) nullPair = true;
        if (!nullPair) pts.push_back(e);
    }
    auto s = FiniteLorentzianSpace::make(count);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            if (MinkowskiModel{}.causallyRelated(pts[static_cast<std::size_t>(i)],
                                                 pts[static_cast<std::size_t>(j)])) {
                s.relate(i, j);
                s.d(i, j) = flatDistance(pts[static_cast<std::size_t>(i)],
                                         pts[static_cast<std::size_t>(j)]);
            }
        }
    return s;
}

// The chain-pair sampler realizes the missing density discretely: two
// timelike chains at x = -a and x = +a share a jittered time lattice of step
// h, so every point has a same-chain neighbor one rung below or above.
// Equal-rung cross pairs are the spacelike pairs; the neighbor rungs are the
// exclusion witnesses.  With 2a < h - 2*eps every off-rung pair is causal,
// and a^2 > eps^2 + eps*h keeps the witness separations strict, so the
// maximal causal relation equals the declared one exactly on every seed.
inline FiniteLorentzianSpace flatChainPairSample(std::uint64_t seed, bool strip, int rungs) {
    Rng rng(seed);
    const double h = strip ? 0.08 : 0.2;
    const double a = strip ? 0.02 : 0.05;
    const double eps = strip ? 0.002 : 0.01;
    const double t0 = strip ? 0.12 : -1.0;
    std::vector<Event> pts;
    for (int k = 0; k < rungs; ++k) {
        pts.push_back({t0 + k * h + rng.uniform(-eps, eps), -a});
        pts.push_back({t0 + k * h + rng.uniform(-eps, eps), +a});
    }
    auto s = FiniteLorentzianSpace::make(static_cast<int>(pts.size()));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == j) continue;
            if (MinkowskiModel{}.causallyRelated(pts[static_cast<std::size_t>(i)],
                                                 pts[static_cast<std::size_t>(j)])) {
                s.relate(i, j);
                s.d(i, j) = flatDistance(pts[static_cast<std::size_t>(i)],
                                         pts[static_cast<std::size_t>(j)]);
            }
        }
    return s;
}

// Appends a copy of point `source` (an identical distance row and column),
// producing the indistinguishable pair a duplicate observation creates.
inline FiniteLorentzianSpace withDuplicateRow(const FiniteLorentzianSpace& s, int source) {
    s.checkIndex(source);
    auto out = FiniteLorentzianSpace::make(s.n + 1);
    out.requireCausality = false;  // the duplicate is mutually causal with its source
    out.tolerance = s.tolerance;
    for (int i = 0; i < s.n; ++i) out.labels[static_cast<std::size_t>(i)] = s.label(i);
    auto copy = [&](int toI, int toJ, int fromI, int fromJ) {
        out.d(toI, toJ) = s.d(fromI, fromJ);
        if (s.related(fromI, fromJ)) out.relate(toI, toJ);
    };
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) copy(i, j, i, j);
    for (int i = 0; i < s.n; ++i) {
        copy(i, s.n, i, source);
        copy(s.n, i, source, i);
    }
    out.relate(s.n, source);
    out.relate(source, s.n);
    return out;
}

// ---- mesh build ------------------------------------------------------------

struct MeshBuildParams {
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report meshBuild(const MeshBuildParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "mesh build";
    rep.config = {{"radius", p.radius},
                  {"resolution", p.resolution},
                  {"tolerance", p.tolerance},
                  {"out", p.outDir}};
    const HyperbolicMesh mesh = buildDiskMesh(p.radius, p.resolution);
    const auto val = validateMesh(mesh, p.tolerance);
    rep.add("mesh valid", val.ok, std::nullopt, val.ok ? "" : val.failedInvariant);
    if (!val.ok)
        rep.witnesses.push_back({{"invariant", val.failedInvariant}, {"witness", val.witness}});
    rep.add("vertices", true, double(mesh.size()));
    rep.add("edges", true, double(mesh.edges.size()));
    const double minEdge = *std::min_element(mesh.weights.begin(), mesh.weights.end());
    rep.add("shortest edge", true, minEdge);
    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "mesh.json"), meshToJson(mesh).dump(2) + "\n");
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- space check -----------------------------------------------------------

struct SpaceCheckParams {
    std::string spacePath;
    double tolerance = defaultTolerance;
};

inline Report spaceCheck(const SpaceCheckParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "space check";
    rep.config = {{"space", p.spacePath}, {"tolerance", p.tolerance}};
    const auto s = detail::loadSpace(p.spacePath, p.tolerance);

    const auto val = validateSpace(s);
    rep.add("space axioms", val.ok, std::nullopt, val.ok ? "" : val.failedInvariant);
    if (!val.ok)
        rep.witnesses.push_back(
            {{"invariant", val.failedInvariant}, {"points", detail::witnessPoints(s, val.witness)}});

    const auto ts = checkTimeSeparation(timeSeparationOf(s), true);
    rep.add("extended time separation", ts.ok, std::nullopt, ts.ok ? "" : ts.failedInvariant);
    if (!ts.ok)
        rep.witnesses.push_back(
            {{"invariant", ts.failedInvariant}, {"points", detail::witnessPoints(s, ts.witness)}});

    const auto dis = verifyDistinguishing(s);
    rep.add("distinguishing", dis.ok, std::nullopt,
            dis.ok ? ""
                   : "points " + s.label(dis.indistinguishablePair.first) + " and " +
                         s.label(dis.indistinguishablePair.second) + " share a profile");
    if (!dis.ok)
        rep.witnesses.push_back({{"invariant", "distinguishing"},
                                 {"points", Json::array({s.label(dis.indistinguishablePair.first),
                                                         s.label(dis.indistinguishablePair.second)})}});

    if (val.ok) {
        const auto lev = verifyCausalityLevel(s);
        rep.add("causality level", true, std::nullopt, causalityLevelName(lev.level));
        const auto bd = computeBoundaries(s);
        rep.add("boundaries", true, std::nullopt,
                "past=" + std::to_string(bd.pastChronological.size()) +
                    " future=" + std::to_string(bd.futureChronological.size()) +
                    " spacelike=" + std::to_string(bd.spacelikeBoundary.size()) +
                    " bubblingEmpty=" + (bd.bubblingEmpty ? std::string("yes") : std::string("no")));
    }
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- jd compute ------------------------------------------------------------

struct JdComputeParams {
    std::string spacePath;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report jdCompute(const JdComputeParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "jd compute";
    rep.config = {{"space", p.spacePath}, {"tolerance", p.tolerance}, {"out", p.outDir}};
    const auto s = detail::loadSpace(p.spacePath, p.tolerance);
    const auto jd = maximalCausalRelation(s);

    bool contained = true;
    int extras = 0;
    for (int i = 0; i < s.n && contained; ++i)
        for (int j = 0; j < s.n; ++j) {
            const bool declared = s.related(i, j);
            const bool maximal = jd[static_cast<std::size_t>(i) * s.n + j] != 0;
            if (declared && !maximal) {
                contained = false;
                rep.witnesses.push_back({{"invariant", "declaredInMaximal"},
                                         {"points", Json::array({s.label(i), s.label(j)})}});
                break;
            }
            if (!declared && maximal) ++extras;
        }
    rep.add("declared relation contained in the maximal one", contained);
    rep.add("maximal relation equals the declared one", true, double(extras),
            extras == 0 ? "yes" : "no: " + std::to_string(extras) + " extra pairs");
    detail::ensureDir(p.outDir);
    Json out;
    out["labels"] = s.labels;
    out["jd"] = jd;
    writeTextFile(detail::join(p.outDir, "jd.json"), out.dump(2) + "\n");
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- graph validate --------------------------------------------------------

struct GraphValidateParams {
    std::string graphPath;
    std::string generate;  // "", "strong", or "violating"
    double radius = 1.0;
    int resolution = 4;
    double margin = 0.05;
    std::uint64_t seed = 0;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report graphValidate(const GraphValidateParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "graph validate";
    rep.config = {{"graph", p.graphPath}, {"generate", p.generate}, {"radius", p.radius},
                  {"resolution", p.resolution}, {"margin", p.margin}, {"seed", p.seed},
                  {"tolerance", p.tolerance}, {"out", p.outDir}};

    std::optional<CauchyGraph> loaded;
    if (!p.generate.empty()) {
        if (p.generate != "strong" && p.generate != "violating")
            throw InputError("graph validate: --generate takes strong or violating");
        auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
        Rng rng(p.seed);
        loaded = p.generate == "strong" ? randomStrongGraph(model, rng)
                                        : makeViolatingGraph(model, rng);
        detail::ensureDir(p.outDir);
        writeTextFile(detail::join(p.outDir, "mesh.json"),
                      meshToJson(model->mesh()).dump(2) + "\n");
        writeTextFile(detail::join(p.outDir, "graph.json"),
                      graphToJson(*loaded, "mesh.json").dump(2) + "\n");
    } else {
        loaded = readGraphFile(p.graphPath);
    }
    const CauchyGraph& g = *loaded;

    const auto vc = validateGraph(g, GraphMode::cauchy);
    rep.add("log-Lipschitz bound 1 (Cauchy)", vc.ok, vc.worstRatio);
    if (!vc.ok)
        rep.witnesses.push_back(
            {{"invariant", "logLipschitz"}, {"vertices", Json::array({vc.p, vc.q})}});
    const auto vs = validateGraph(g, GraphMode::strong, p.margin);
    rep.add("strict bound 1 - margin (strong)", vs.ok, vs.worstRatio);
    if (!vs.ok)
        rep.witnesses.push_back(
            {{"invariant", "strictLogLipschitz"}, {"vertices", Json::array({vs.p, vs.q})}});
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- dj pair ---------------------------------------------------------------

struct DjPairParams {
    std::string model = "strip";  // strip | minkowski | cone
    double a = 0.2, b = 0.7;      // slice times, or constant radii on the cone
    int samples = 41;
    double x0 = -1.0, x1 = 1.0;
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
};

inline Report djPair(const DjPairParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "dj pair";
    rep.config = {{"model", p.model}, {"a", p.a},      {"b", p.b},
                  {"samples", p.samples}, {"x0", p.x0}, {"x1", p.x1},
                  {"radius", p.radius},   {"resolution", p.resolution},
                  {"tolerance", p.tolerance}};
    double value = 0.0;
    if (p.model == "strip" || p.model == "minkowski") {
        DJReport r;
        if (p.model == "strip") {
            const StripModel m{p.tolerance};
            r = djSet(m, m.slice(p.a, p.x0, p.x1, p.samples), m.slice(p.b, p.x0, p.x1, p.samples));
        } else {
            const MinkowskiModel m{p.tolerance};
            r = djSet(m, m.slice(p.a, p.x0, p.x1, p.samples), m.slice(p.b, p.x0, p.x1, p.samples));
        }
        value = r.value;
        rep.add("dj(S_a, S_b)", true, r.value,
                "witness samples " + std::to_string(r.witnessA) + "," + std::to_string(r.witnessB));
    } else if (p.model == "cone") {
        if (!(p.a > 0.0) || !(p.b > 0.0))
            throw InputError("dj pair: cone radii must be positive");
        auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
        const std::vector<double> fa(static_cast<std::size_t>(model->vertexCount()), p.a);
        const std::vector<double> fb(static_cast<std::size_t>(model->vertexCount()), p.b);
        const auto r = djGraphs(CauchyGraph(model, fa), CauchyGraph(model, fb));
        value = r.value;
        rep.add("dj(S_a, S_b)", true, r.value,
                "witness vertices " + std::to_string(r.witnessA) + "," +
                    std::to_string(r.witnessB));
    } else {
        throw InputError("dj pair: model must be strip, minkowski, or cone");
    }
    rep.add("matches |a - b|", std::abs(value - std::abs(p.a - p.b)) <= 1e-9,
            std::abs(value - std::abs(p.a - p.b)));
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- dj matrix -------------------------------------------------------------

struct DjMatrixParams {
    std::vector<std::string> graphPaths;  // empty: generate `count` strong graphs
    int count = 5;
    std::uint64_t seed = 0;
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report djMatrix(const DjMatrixParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "dj matrix";
    rep.config = {{"graphs", p.graphPaths}, {"count", p.count},         {"seed", p.seed},
                  {"radius", p.radius},     {"resolution", p.resolution},
                  {"tolerance", p.tolerance}, {"out", p.outDir}};
    std::vector<CauchyGraph> graphs;
    std::vector<std::string> names;
    if (p.graphPaths.empty()) {
        if (p.count < 1) throw InputError("dj matrix: count must be positive");
        auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
        Rng rng(p.seed);
        for (int i = 0; i < p.count; ++i) {
            graphs.push_back(randomStrongGraph(model, rng));
            names.push_back("g" + std::to_string(i));
        }
    } else {
        graphs = readGraphFiles(p.graphPaths);
        for (const auto& path : p.graphPaths)
            names.push_back(std::filesystem::path(path).stem().string());
    }
    const std::size_t n = graphs.size();
    std::vector<double> matrix(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = djGraphs(graphs[i], graphs[j]).value;
            matrix[i * n + j] = v;
            matrix[j * n + i] = v;
        }
    rep.add("pairwise distances computed", true, double(n * n));
    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "dj_matrix.csv"), djMatrixCsv(names, matrix));
    if (p.graphPaths.empty()) {
        writeTextFile(detail::join(p.outDir, "mesh.json"),
                      meshToJson(graphs.front().model().mesh()).dump(2) + "\n");
        Json arr = Json::array();
        for (const auto& g : graphs) arr.push_back(graphToJson(g, "mesh.json"));
        writeTextFile(detail::join(p.outDir, "graphs.json"), arr.dump(2) + "\n");
    }
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- dj axioms -------------------------------------------------------------

struct DjAxiomsParams {
    int count = 50;
    int trials = 200;
    std::uint64_t seed = 0;
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
    double selfTolerance = 1e-6;
};

inline Report djAxioms(const DjAxiomsParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "dj axioms";
    rep.config = {{"count", p.count},   {"trials", p.trials},
                  {"seed", p.seed},     {"radius", p.radius},
                  {"resolution", p.resolution}, {"tolerance", p.tolerance},
                  {"selfTolerance", p.selfTolerance}};
    if (p.count < 2) throw InputError("dj axioms: need at least 2 graphs");
    auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
    Rng grng(p.seed);
    std::vector<CauchyGraph> sets;
    for (int i = 0; i < p.count; ++i) sets.push_back(randomStrongGraph(model, grng));
    Rng trng(p.seed + 1);
    const auto r = verifyMetricAxioms(sets, p.trials, trng, p.selfTolerance);

    rep.add("identity: self distance", r.worstSelf <= p.selfTolerance, r.worstSelf);
    rep.add("symmetry: worst gap", r.worstSymmetryGap == 0.0, r.worstSymmetryGap);
    rep.add("definiteness: distinct sets separated", r.failedAxiom != "definiteness",
            r.smallestDistinctValue, "smallest distance between distinct sets");
    rep.add("triangle inequality: worst defect",
            r.worstTriangleDefect <= 3.0 * p.tolerance, r.worstTriangleDefect,
            std::to_string(r.trianglesChecked) + " random triples");
    rep.add("all axioms", r.ok, std::nullopt, r.ok ? "" : "failed: " + r.failedAxiom);
    if (!r.ok)
        rep.witnesses.push_back({{"invariant", r.failedAxiom}, {"sets", r.witness}});
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- curves crossings ------------------------------------------------------

struct CurvesCrossingsParams {
    int curves = 100;
    int graphs = 100;
    int violations = 20;
    std::uint64_t seed = 0;
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report curvesCrossings(const CurvesCrossingsParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "curves crossings";
    rep.config = {{"curves", p.curves},   {"graphs", p.graphs},
                  {"violations", p.violations}, {"seed", p.seed},
                  {"radius", p.radius},   {"resolution", p.resolution},
                  {"tolerance", p.tolerance}, {"out", p.outDir}};
    if (p.curves < 1 || p.graphs < 1) throw InputError("curves crossings: counts must be positive");
    auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
    Rng rng(p.seed);
    std::vector<CauchyGraph> graphs;
    for (int i = 0; i < p.graphs; ++i) graphs.push_back(randomStrongGraph(model, rng));
    std::vector<ConeCurve> curves;
    for (int i = 0; i < p.curves; ++i) curves.push_back(makeInextendibleTimelikeCurve(model, rng));

    std::vector<std::array<int, 3>> rows;
    rows.reserve(static_cast<std::size_t>(p.curves) * static_cast<std::size_t>(p.graphs));
    int off = 0;
    for (int c = 0; c < p.curves; ++c)
        for (int g = 0; g < p.graphs; ++g) {
            const int count = crossingCount(curves[static_cast<std::size_t>(c)],
                                            graphs[static_cast<std::size_t>(g)]).count;
            rows.push_back({c, g, count});
            if (count != 1 && off < 5) {
                rep.witnesses.push_back({{"invariant", "singleCrossing"},
                                         {"curve", c},
                                         {"graph", g},
                                         {"crossings", count}});
                ++off;
            }
        }
    const bool allOnce = off == 0;
    rep.add("every curve crosses every strong graph exactly once", allOnce,
            double(rows.size()), "curve-graph pairs");

    int witnessed = 0;
    for (int v = 0; v < p.violations; ++v) {
        const auto bad = makeViolatingGraph(model, rng);
        const auto val = validateGraph(bad, GraphMode::cauchy);
        if (val.ok) continue;  // generator failed to violate; counted below
        const auto witness = makeDoubleCrossingWitness(bad, val.p, val.q);
        if (crossingCount(witness, bad).count != 1) ++witnessed;
    }
    rep.add("every violating graph has a witness curve missing single-crossing",
            witnessed == p.violations, double(witnessed),
            "of " + std::to_string(p.violations) + " violating graphs");
    rep.add("theorem coverage", true, std::nullopt,
            "the single-crossing theorem is a proof; this run probes its statement on "
            "generated instances and does not reproduce the proof numerically");

    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "crossings.csv"), crossingsCsv(rows));
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- complete strip --------------------------------------------------------

struct CompleteStripParams {
    int jmax = 64;
    int deepExponent = 20;  // deep-tail candidate slice at time 2^-deepExponent
    double epsilon = 0.04;
    int samples = 41;
    double x0 = -1.0, x1 = 1.0;
    double tolerance = defaultTolerance;
};

inline Report completeStrip(const CompleteStripParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "complete strip";
    rep.config = {{"jmax", p.jmax},       {"deepExponent", p.deepExponent},
                  {"epsilon", p.epsilon}, {"samples", p.samples},
                  {"x0", p.x0},           {"x1", p.x1},
                  {"tolerance", p.tolerance}};
    if (p.jmax < 5) throw InputError("complete strip: jmax must be at least 5");
    std::vector<double> times;
    for (int j = 2; j <= p.jmax; ++j) times.push_back(1.0 / j);
    const double deep = std::pow(2.0, -p.deepExponent);

    const StripModel strip{p.tolerance};
    const auto rs = sliceSequenceLimit(strip, times, deep, p.epsilon, 1e-3, p.x0, p.x1, p.samples);
    rep.add("slice sequence is certified Cauchy", rs.certificateWorst <= p.epsilon,
            rs.certificateWorst, "sup of tail pair distances");
    rep.add("strip verdict: boundary escape", rs.verdict == LimitVerdict::boundaryEscape,
            std::nullopt, limitVerdictName(rs.verdict) + (": " + rs.reason));

    const MinkowskiModel mink{p.tolerance};
    const auto rm = sliceSequenceLimit(mink, times, deep, p.epsilon, 1e-3, p.x0, p.x1, p.samples);
    rep.add("plane verdict: converged", rm.verdict == LimitVerdict::converged, std::nullopt,
            limitVerdictName(rm.verdict) + (": " + rm.reason));
    if (rm.verdict == LimitVerdict::converged) {
        const auto s0 = mink.slice(0.0, p.x0, p.x1, p.samples);
        const double off = djSet(mink, rm.limit, s0).value;
        rep.add("plane limit matches the time-zero slice", off <= 1e-6, off,
                "dj to the accumulation slice");
    }
    rep.add("theorem coverage", true, std::nullopt,
            "the completeness and compactness theorems are proofs; this run probes their "
            "statements on concrete sequences and does not reproduce the proofs numerically");
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- complete cone ---------------------------------------------------------

struct CompleteConeParams {
    int terms = 12;
    double epsilon = 0.02;
    std::uint64_t seed = 0;
    double radius = 1.0;
    int resolution = 4;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report completeCone(const CompleteConeParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "complete cone";
    rep.config = {{"terms", p.terms},   {"epsilon", p.epsilon},
                  {"seed", p.seed},     {"radius", p.radius},
                  {"resolution", p.resolution}, {"tolerance", p.tolerance},
                  {"out", p.outDir}};
    if (p.terms < 4) throw InputError("complete cone: need at least 4 terms");
    auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
    const std::size_t n = static_cast<std::size_t>(model->vertexCount());

    std::vector<CauchyGraph> down;
    for (int k = 1; k <= p.terms; ++k)
        down.emplace_back(model, std::vector<double>(n, 1.0 + std::pow(2.0, -k)));
    const auto rd = limitOfCauchySequence(down, p.epsilon);
    rep.add("descending constants converge", rd.verdict == LimitVerdict::converged,
            rd.certificateWorst, limitVerdictName(rd.verdict));
    rep.add("limit set validates", rd.limitValid);

    std::vector<CauchyGraph> sink;
    for (int k = 1; k <= p.terms; ++k)
        sink.emplace_back(model, std::vector<double>(n, std::pow(2.0, -k)));
    const auto rs = limitOfCauchySequence(sink, p.epsilon);
    rep.add("apex-bound constants escape", rs.verdict == LimitVerdict::boundaryEscape,
            rs.certificateWorst, limitVerdictName(rs.verdict) + (": " + rs.reason));

    Rng rng(p.seed);
    std::vector<double> baseSeeds(n), bump(n);
    for (auto& v : baseSeeds) v = rng.uniform(-0.05, 0.05);
    for (auto& v : bump) v = rng.uniform(0.0, 0.03);
    std::vector<CauchyGraph> env;
    for (int k = 1; k <= p.terms; ++k) {
        std::vector<double> seeds(n);
        for (std::size_t v = 0; v < n; ++v) seeds[v] = baseSeeds[v] + std::pow(2.0, -k) * bump[v];
        const auto h = lipschitzEnvelope(*model, seeds, 0.95);
        std::vector<double> f(n);
        for (std::size_t v = 0; v < n; ++v) f[v] = std::exp(h[v]);
        env.emplace_back(model, f);
    }
    const auto re = limitOfCauchySequence(env, p.epsilon);
    rep.add("seeded envelope sequence converges", re.verdict == LimitVerdict::converged,
            re.certificateWorst, limitVerdictName(re.verdict));
    rep.add("envelope limit validates", re.limitValid);
    rep.add("theorem coverage", true, std::nullopt,
            "the completeness theorem for graph sequences is a proof; this run probes its "
            "statement on concrete sequences and does not reproduce the proof numerically");

    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "mesh.json"), meshToJson(model->mesh()).dump(2) + "\n");
    if (re.limit)
        writeTextFile(detail::join(p.outDir, "limit.json"),
                      graphToJson(*re.limit, "mesh.json").dump(2) + "\n");
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- complete finite -------------------------------------------------------

struct CompleteFiniteParams {
    std::string spacePath;  // empty: the unit 4-chain
    double tolerance = defaultTolerance;
};

inline Report completeFinite(const CompleteFiniteParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "complete finite";
    rep.config = {{"space", p.spacePath}, {"tolerance", p.tolerance}};
    const FiniteLorentzianSpace s = p.spacePath.empty()
                                        ? chainSpace({1.0, 1.0, 1.0})
                                        : detail::loadSpace(p.spacePath, p.tolerance);
    const auto val = validateSpace(s);
    rep.add("space axioms", val.ok, std::nullopt, val.ok ? "" : val.failedInvariant);
    if (!val.ok) {
        rep.wallSeconds = detail::since(t0);
        return rep;  // the chain search below needs the acyclic chronological order
    }

    // Longest chronological chain by edge relaxation; on a valid space the
    // chronological relation is acyclic, so n-1 rounds reach the fixpoint.
    const int n = s.n;
    std::vector<int> best(static_cast<std::size_t>(n), 1), prev(static_cast<std::size_t>(n), -1);
    bool changed = true;
    for (int round = 0; round < n && changed; ++round) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (s.chronological(i, j) && best[static_cast<std::size_t>(i)] + 1 >
                                                 best[static_cast<std::size_t>(j)]) {
                    best[static_cast<std::size_t>(j)] = best[static_cast<std::size_t>(i)] + 1;
                    prev[static_cast<std::size_t>(j)] = i;
                    changed = true;
                }
    }
    const int end = int(std::max_element(best.begin(), best.end()) - best.begin());
    std::vector<int> chain;
    for (int v = end; v != -1 && int(chain.size()) <= n; v = prev[static_cast<std::size_t>(v)])
        chain.push_back(v);
    std::reverse(chain.begin(), chain.end());

    if (chain.size() < 2) {
        rep.add("timelike chain found", false, double(chain.size()),
                "no chronological pair to test");
    } else {
        rep.add("timelike chain found", true, double(chain.size()), "points in the chain");
        const auto rc = timelikeCauchyCompletenessCheck(s, chain, Sense::future);
        rep.add("timelike Cauchy completeness",
                rc.verdict == SequenceCompletenessReport::Verdict::convergent, std::nullopt,
                rc.reason);
    }
    const auto rk = finiteCompactnessCheck(s);
    rep.add("finite compactness", rk.ok && rk.tailConverged, std::nullopt, rk.reason);
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- timefn build ----------------------------------------------------------

struct TimefnBuildParams {
    std::string spacePath;
    std::vector<std::string> enumeration;  // labels; empty = index order
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline std::vector<int> resolveEnumeration(const FiniteLorentzianSpace& s,
                                           const std::vector<std::string>& labels) {
    std::vector<int> order;
    if (labels.empty()) {
        order.resize(static_cast<std::size_t>(s.n));
        for (int i = 0; i < s.n; ++i) order[static_cast<std::size_t>(i)] = i;
    } else {
        for (const auto& l : labels) order.push_back(s.indexOf(l));
    }
    return order;
}

inline Report timefnBuild(const TimefnBuildParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "timefn build";
    rep.config = {{"space", p.spacePath}, {"enumeration", p.enumeration},
                  {"tolerance", p.tolerance}, {"out", p.outDir}};
    const auto s = detail::loadSpace(p.spacePath, p.tolerance);
    const auto tf = buildTimeFunction(s, resolveEnumeration(s, p.enumeration));
    rep.add("strict monotonicity on causal pairs", true, std::nullopt,
            "verified during construction");
    rep.add("boundary dichotomy", true, std::nullopt,
            "f and g vanish exactly on the past and future boundaries");
    double lo = infinity, hi = -infinity;
    int finiteCount = 0;
    for (const double t : tf.tau)
        if (std::isfinite(t)) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
            ++finiteCount;
        }
    rep.add("finite values", true, double(finiteCount),
            finiteCount ? "range [" + formatDouble(lo) + ", " + formatDouble(hi) + "]"
                        : "all points lie on the boundary");
    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "tau.csv"), tauTableCsv(s, tf));
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- timefn levels ---------------------------------------------------------

struct TimefnLevelsParams {
    std::string spacePath;
    std::vector<std::string> enumeration;
    std::vector<double> levels;  // empty: median and midpoint of the finite values
    std::int64_t chainBudget = 200000;
    double tolerance = defaultTolerance;
};

inline Report timefnLevels(const TimefnLevelsParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "timefn levels";
    rep.config = {{"space", p.spacePath}, {"enumeration", p.enumeration},
                  {"levels", p.levels},   {"chainBudget", p.chainBudget},
                  {"tolerance", p.tolerance}};
    const auto s = detail::loadSpace(p.spacePath, p.tolerance);
    const auto tf = buildTimeFunction(s, resolveEnumeration(s, p.enumeration));

    std::vector<double> levels = p.levels;
    if (levels.empty()) {
        std::vector<double> finite;
        for (const double t : tf.tau)
            if (std::isfinite(t)) finite.push_back(t);
        std::sort(finite.begin(), finite.end());
        if (finite.empty()) {
            levels.push_back(0.0);
        } else {
            levels.push_back(finite[finite.size() / 2]);
            levels.push_back((finite.front() + finite.back()) / 2);
        }
    }
    for (const double level : levels) {
        const auto r = verifyLevelCrossing(s, tf, level, p.chainBudget);
        rep.add("level " + formatDouble(level) + " crossed exactly once", r.ok && !r.truncated,
                double(r.chainsChecked),
                "chains; straddling=" + std::to_string(r.straddling) +
                    " nonStraddling=" + std::to_string(r.nonStraddling) +
                    (r.truncated ? " TRUNCATED" : ""));
        if (!r.ok)
            rep.witnesses.push_back({{"invariant", "singleCrossing"},
                                     {"level", level},
                                     {"chain", detail::witnessPoints(s, r.badChain)},
                                     {"crossings", r.badCrossings}});
        if (r.nonStraddling > 0)
            rep.witnesses.push_back({{"invariant", "chainStraddlesLevel"},
                                     {"level", level},
                                     {"chain", detail::witnessPoints(s, r.firstNonStraddling)}});
    }
    rep.wallSeconds = detail::since(t0);
    return rep;
}

// ---- blaschke net ----------------------------------------------------------

struct BlaschkeNetParams {
    double r = 0.5;
    double epsilon = 0.05;
    int probes = 500;
    double centerRadius = 1.0;
    std::uint64_t seed = 0;
    double radius = 1.0;
    int resolution = 4;
    double margin = 0.05;
    double tolerance = defaultTolerance;
    std::string outDir = ".";
};

inline Report blaschkeNetRun(const BlaschkeNetParams& p) {
    const auto t0 = detail::tick();
    Report rep;
    rep.subcommand = "blaschke net";
    rep.config = {{"r", p.r},           {"epsilon", p.epsilon},
                  {"probes", p.probes}, {"centerRadius", p.centerRadius},
                  {"seed", p.seed},     {"radius", p.radius},
                  {"resolution", p.resolution}, {"margin", p.margin},
                  {"tolerance", p.tolerance}, {"out", p.outDir}};
    if (!(p.centerRadius > 0.0)) throw InputError("blaschke net: center radius must be positive");
    auto model = makeDiskCone(p.radius, p.resolution, p.tolerance);
    const CauchyGraph center(
        model, std::vector<double>(static_cast<std::size_t>(model->vertexCount()), p.centerRadius));
    Rng rng(p.seed);
    const auto r = blaschkeNet(center, p.r, p.epsilon, rng, p.probes, p.margin);

    rep.add("probe coverage within epsilon", r.worstCoverage <= p.epsilon, r.worstCoverage,
            "max distance from a probe to its net member");
    rep.add("net members validate", r.allMembersValid);
    rep.add("net size", true, double(r.net.size()), "finite and reported");
    rep.add("probes used", r.probesUsed == p.probes, double(r.probesUsed));
    rep.add("quantization step", true, r.quantStep);

    detail::ensureDir(p.outDir);
    writeTextFile(detail::join(p.outDir, "mesh.json"), meshToJson(model->mesh()).dump(2) + "\n");
    Json arr = Json::array();
    for (const auto& g : r.net) arr.push_back(graphToJson(g, "mesh.json"));
    writeTextFile(detail::join(p.outDir, "net.json"), arr.dump(2) + "\n");
    rep.wallSeconds = detail::since(t0);
    return rep;
}

} // namespace lcs::experiments
