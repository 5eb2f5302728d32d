// lcs — command-line driver for the finite Lorentzian space toolkit.
//
// Every subcommand prints a verdict table to stdout and stores the same data
// as report.json under --out.  Exit codes: 0 all verdicts pass, 2 at least
// one verdict fails, 3 the input was unusable.

#include <CLI11.hpp>

#include "lcs/experiments.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using lcs::Report;
namespace ex = lcs::experiments;

int emitReport(const Report& rep, const std::string& outDir) {
    ex::detail::ensureDir(outDir);
    lcs::writeTextFile(ex::detail::join(outDir, "report.json"), rep.toJson().dump(2) + "\n");
    std::cout << rep.table();
    return rep.allOk() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational synthetic Lorentzian geometry: finite spaces, conical "
                 "spacetimes over hyperbolic meshes, Cauchy sets and their metric"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file ([section] per subcommand)");
    app.fallthrough();

    int rc = 0;

    // ---- mesh build --------------------------------------------------------
    auto* mesh = app.add_subcommand("mesh", "hyperbolic mesh construction");
    mesh->require_subcommand(1);
    {
        static ex::MeshBuildParams p;
        auto* c = mesh->add_subcommand("build", "triangulate a hyperbolic disk and validate it");
        c->add_option("--radius", p.radius, "disk radius (intrinsic)");
        c->add_option("--resolution", p.resolution, "rings in the triangulation");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::meshBuild(p), p.outDir); });
    }

    // ---- space check -------------------------------------------------------
    auto* space = app.add_subcommand("space", "finite Lorentzian space checks");
    space->require_subcommand(1);
    {
        static ex::SpaceCheckParams p;
        static std::string out = ".";
        auto* c = space->add_subcommand("check", "validate the axioms of a stored space");
        c->add_option("--space", p.spacePath, "space file (.json or .csv)")->required();
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::spaceCheck(p), out); });
    }

    // ---- jd compute --------------------------------------------------------
    auto* jd = app.add_subcommand("jd", "maximal causal relation");
    jd->require_subcommand(1);
    {
        static ex::JdComputeParams p;
        auto* c = jd->add_subcommand("compute",
                                     "recover the largest causal relation the metric supports");
        c->add_option("--space", p.spacePath, "space file (.json or .csv)")->required();
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::jdCompute(p), p.outDir); });
    }

    // ---- graph validate ----------------------------------------------------
    auto* graph = app.add_subcommand("graph", "Cauchy graphs over the cone");
    graph->require_subcommand(1);
    {
        static ex::GraphValidateParams p;
        auto* c = graph->add_subcommand("validate",
                                        "check the log-Lipschitz characterization of a graph");
        c->add_option("--graph", p.graphPath, "graph file referencing its mesh");
        c->add_option("--generate", p.generate, "generate instead of loading: strong | violating");
        c->add_option("--radius", p.radius, "disk radius for generated meshes");
        c->add_option("--resolution", p.resolution, "mesh rings for generated meshes");
        c->add_option("--margin", p.margin, "strict-bound margin");
        c->add_option("--seed", p.seed, "generator seed");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::graphValidate(p), p.outDir); });
    }

    // ---- dj ----------------------------------------------------------------
    auto* dj = app.add_subcommand("dj", "the Hausdorff-type metric on Cauchy sets");
    dj->require_subcommand(1);
    {
        static ex::DjPairParams p;
        static std::string out = ".";
        auto* c = dj->add_subcommand("pair", "distance between two canonical Cauchy sets");
        c->add_option("--model", p.model, "strip | minkowski | cone");
        c->add_option("--a", p.a, "first slice time (or cone radius)");
        c->add_option("--b", p.b, "second slice time (or cone radius)");
        c->add_option("--samples", p.samples, "samples per flat slice");
        c->add_option("--x0", p.x0, "left end of the sampled window");
        c->add_option("--x1", p.x1, "right end of the sampled window");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::djPair(p), out); });
    }
    {
        static ex::DjMatrixParams p;
        auto* c = dj->add_subcommand("matrix", "pairwise distances of a graph family");
        c->add_option("--graphs", p.graphPaths, "graph files sharing one mesh");
        c->add_option("--count", p.count, "generated family size when no files are given");
        c->add_option("--seed", p.seed, "generator seed");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::djMatrix(p), p.outDir); });
    }
    {
        static ex::DjAxiomsParams p;
        static std::string out = ".";
        auto* c = dj->add_subcommand("axioms", "machine-check the metric axioms on an ensemble");
        c->add_option("--count", p.count, "ensemble size");
        c->add_option("--trials", p.trials, "random triangle trials");
        c->add_option("--seed", p.seed, "generator seed");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--self-tol", p.selfTolerance, "allowed self distance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::djAxioms(p), out); });
    }

    // ---- curves crossings --------------------------------------------------
    auto* curves = app.add_subcommand("curves", "inextendible causal curves");
    curves->require_subcommand(1);
    {
        static ex::CurvesCrossingsParams p;
        auto* c = curves->add_subcommand(
            "crossings", "count curve-graph crossings over a random ensemble");
        c->add_option("--curves", p.curves, "number of random timelike curves");
        c->add_option("--graphs", p.graphs, "number of random strong graphs");
        c->add_option("--violations", p.violations, "number of violating graphs to witness");
        c->add_option("--seed", p.seed, "generator seed");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::curvesCrossings(p), p.outDir); });
    }

    // ---- complete ----------------------------------------------------------
    auto* complete = app.add_subcommand("complete", "completeness and compactness probes");
    complete->require_subcommand(1);
    {
        static ex::CompleteStripParams p;
        static std::string out = ".";
        auto* c = complete->add_subcommand(
            "strip", "slice sequences on the unit strip versus the full plane");
        c->add_option("--jmax", p.jmax, "last denominator of the 1/j slice times");
        c->add_option("--deep-exponent", p.deepExponent, "deep-tail slice at time 2^-k");
        c->add_option("--epsilon", p.epsilon, "Cauchy certificate threshold");
        c->add_option("--samples", p.samples, "samples per slice");
        c->add_option("--x0", p.x0, "left end of the sampled window");
        c->add_option("--x1", p.x1, "right end of the sampled window");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::completeStrip(p), out); });
    }
    {
        static ex::CompleteConeParams p;
        auto* c = complete->add_subcommand(
            "cone", "graph sequences on the cone: convergence and apex escape");
        c->add_option("--terms", p.terms, "sequence length");
        c->add_option("--epsilon", p.epsilon, "Cauchy certificate threshold");
        c->add_option("--seed", p.seed, "generator seed");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::completeCone(p), p.outDir); });
    }
    {
        static ex::CompleteFiniteParams p;
        static std::string out = ".";
        auto* c = complete->add_subcommand(
            "finite", "timelike Cauchy completeness and compactness of a finite space");
        c->add_option("--space", p.spacePath, "space file; omitted: the unit 4-chain");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::completeFinite(p), out); });
    }

    // ---- timefn ------------------------------------------------------------
    auto* timefn = app.add_subcommand("timefn", "Cauchy time functions ln(f/g)");
    timefn->require_subcommand(1);
    {
        static ex::TimefnBuildParams p;
        auto* c = timefn->add_subcommand("build", "build the time function of a stored space");
        c->add_option("--space", p.spacePath, "space file (.json or .csv)")->required();
        c->add_option("--enumeration", p.enumeration, "point labels in enumeration order");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::timefnBuild(p), p.outDir); });
    }
    {
        static ex::TimefnLevelsParams p;
        static std::string out = ".";
        auto* c = timefn->add_subcommand(
            "levels", "verify that every maximal chain crosses each level set once");
        c->add_option("--space", p.spacePath, "space file (.json or .csv)")->required();
        c->add_option("--enumeration", p.enumeration, "point labels in enumeration order");
        c->add_option("--levels", p.levels, "levels to check; omitted: median and midpoint");
        c->add_option("--chain-budget", p.chainBudget, "maximal chains to enumerate");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", out, "output directory");
        c->callback([&] { rc = emitReport(ex::timefnLevels(p), out); });
    }

    // ---- blaschke net ------------------------------------------------------
    auto* blaschke = app.add_subcommand("blaschke", "compactness experiments on Cauchy sets");
    blaschke->require_subcommand(1);
    {
        static ex::BlaschkeNetParams p;
        auto* c = blaschke->add_subcommand(
            "net", "cover a ball of Cauchy sets by a finite quantization net");
        c->add_option("--r", p.r, "ball radius around the center set");
        c->add_option("--epsilon", p.epsilon, "net mesh");
        c->add_option("--probes", p.probes, "random sets probed for coverage");
        c->add_option("--center-radius", p.centerRadius, "radius of the constant center set");
        c->add_option("--seed", p.seed, "probe seed");
        c->add_option("--radius", p.radius, "cone disk radius");
        c->add_option("--resolution", p.resolution, "cone mesh rings");
        c->add_option("--margin", p.margin, "strong-graph margin for net members");
        c->add_option("--tol", p.tolerance, "comparison tolerance");
        c->add_option("--out", p.outDir, "output directory");
        c->callback([&] { rc = emitReport(ex::blaschkeNetRun(p), p.outDir); });
    }

    // ---- report ------------------------------------------------------------
    {
        static std::vector<std::string> files;
        auto* c = app.add_subcommand("report", "re-render stored report JSON files");
        c->add_option("--in", files, "report.json files")->required();
        c->callback([&] {
            for (const auto& path : files) {
                const Report rep = lcs::reportFromJson(lcs::readJsonFile(path));
                std::cout << rep.table();
                if (!rep.allOk()) rc = 2;
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;  // help text is a success; anything else is bad input
    } catch (const lcs::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
