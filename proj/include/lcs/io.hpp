#pragma once

#include "lcs/cauchy_graph.hpp"
#include "lcs/curves.hpp"
#include "lcs/finite_space.hpp"
#include "lcs/time_function.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lcs {

// Ordered JSON keeps key order stable across runs, which the report
// determinism contract relies on.
using Json = nlohmann::ordered_json;

// ---- plain files ----------------------------------------------------------

inline std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

inline Json parseJsonText(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InputError("invalid JSON in " + origin + ": " + e.what());
    }
}

inline Json readJsonFile(const std::string& path) { return parseJsonText(readTextFile(path), path); }

// Shortest round-trip formatting for CSV cells; JSON uses the library's own
// round-trip printer.
inline std::string formatDouble(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline const Json& requireKey(const Json& j, const char* key, const std::string& origin) {
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(origin + ": missing key \"" + key + "\"");
    return *it;
}

} // namespace detail

// ---- finite Lorentzian spaces ---------------------------------------------

inline Json spaceToJson(const FiniteLorentzianSpace& s) {
    Json j;
    j["labels"] = s.labels;
    j["dist"] = s.dist;
    j["causal"] = s.causal;
    return j;
}

inline FiniteLorentzianSpace spaceFromJson(const Json& j) {
    const std::string origin = "space";
    const auto labels = detail::requireKey(j, "labels", origin).get<std::vector<std::string>>();
    const auto dist = detail::requireKey(j, "dist", origin).get<std::vector<double>>();
    const auto causalRaw = detail::requireKey(j, "causal", origin).get<std::vector<int>>();
    const int n = static_cast<int>(labels.size());
    const std::size_t n2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (dist.size() != n2) throw InputError("space: dist must hold " + std::to_string(n2) + " entries");
    if (causalRaw.size() != n2)
        throw InputError("space: causal must hold " + std::to_string(n2) + " entries");
    FiniteLorentzianSpace s = FiniteLorentzianSpace::make(n);
    s.labels = labels;
    s.dist = dist;
    for (std::size_t i = 0; i < n2; ++i) {
        if (causalRaw[i] != 0 && causalRaw[i] != 1)
            throw InputError("space: causal entries must be 0 or 1");
        s.causal[i] = static_cast<std::uint8_t>(causalRaw[i]);
    }
    return s;
}

// CSV alternative: one value per line in [labels], comma-separated rows in
// the [dist] and [causal] sections.
inline std::string spaceToCsv(const FiniteLorentzianSpace& s) {
    std::ostringstream out;
    out << "[labels]\n";
    for (const auto& l : s.labels) out << l << "\n";
    out << "[dist]\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) out << (j ? "," : "") << formatDouble(s.d(i, j));
        out << "\n";
    }
    out << "[causal]\n";
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) out << (j ? "," : "") << (s.related(i, j) ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

inline FiniteLorentzianSpace spaceFromCsv(const std::string& text) {
    std::istringstream in(text);
    std::string line, section;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> dist, causal;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            if (section != "labels" && section != "dist" && section != "causal")
                throw InputError("space CSV: unknown section [" + section + "]");
            continue;
        }
        if (section == "labels") {
            labels.push_back(line);
        } else if (section == "dist" || section == "causal") {
            std::vector<double> row;
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ',')) {
                try {
                    std::size_t used = 0;
                    row.push_back(std::stod(cell, &used));
                    if (used != cell.size()) throw std::invalid_argument(cell);
                } catch (const std::exception&) {
                    throw InputError("space CSV: bad number \"" + cell + "\"");
                }
            }
            (section == "dist" ? dist : causal).push_back(std::move(row));
        } else {
            throw InputError("space CSV: data before any section header");
        }
    }
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(dist.size()) != n || static_cast<int>(causal.size()) != n)
        throw InputError("space CSV: need one dist and causal row per label");
    FiniteLorentzianSpace s = FiniteLorentzianSpace::make(n);
    s.labels = labels;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dist[static_cast<std::size_t>(i)].size()) != n ||
            static_cast<int>(causal[static_cast<std::size_t>(i)].size()) != n)
            throw InputError("space CSV: row " + std::to_string(i) + " has the wrong width");
        for (int j = 0; j < n; ++j) {
            s.d(i, j) = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double c = causal[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != 0.0 && c != 1.0) throw InputError("space CSV: causal entries must be 0 or 1");
            s.causal[static_cast<std::size_t>(i) * n + j] = c == 1.0 ? 1 : 0;
        }
    }
    return s;
}

// ---- hyperbolic meshes ----------------------------------------------------

inline Json meshToJson(const HyperbolicMesh& m) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : m.vertices) j["vertices"].push_back({v[0], v[1], v[2]});
    j["edges"] = Json::array();
    for (const auto& [a, b] : m.edges) j["edges"].push_back({a, b});
    return j;
}

inline HyperbolicMesh meshFromJson(const Json& j) {
    HyperbolicMesh m;
    for (const auto& v : detail::requireKey(j, "vertices", "mesh")) {
        if (!v.is_array() || v.size() != 3)
            throw InputError("mesh: each vertex needs three coordinates");
        m.vertices.push_back({v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
    }
    for (const auto& e : detail::requireKey(j, "edges", "mesh")) {
        if (!e.is_array() || e.size() != 2) throw InputError("mesh: each edge needs two indices");
        const int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= m.size() || b >= m.size() || a == b)
            throw InputError("mesh: edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") is out of range");
        m.addEdge(a, b);
    }
    m.finalize();
    return m;
}

// ---- Cauchy graphs --------------------------------------------------------

inline Json graphToJson(const CauchyGraph& g, const std::string& meshRef) {
    Json j;
    j["mesh"] = meshRef;
    j["f"] = g.values();
    return j;
}

inline CauchyGraph graphFromJson(const Json& j, std::shared_ptr<const ConeModel> model) {
    const auto f = detail::requireKey(j, "f", "graph").get<std::vector<double>>();
    if (static_cast<int>(f.size()) != model->vertexCount())
        throw InputError("graph: f holds " + std::to_string(f.size()) + " radii but the mesh has " +
                         std::to_string(model->vertexCount()) + " vertices");
    return CauchyGraph(std::move(model), f);
}

// Reads a graph file, loading the mesh it references (a path resolved
// relative to the graph file) and building the cone model over it.
inline CauchyGraph readGraphFile(const std::string& path) {
    const Json j = readJsonFile(path);
    const std::string ref = detail::requireKey(j, "mesh", "graph").get<std::string>();
    const auto meshPath = std::filesystem::path(path).parent_path() / ref;
    auto model = std::make_shared<const ConeModel>(meshFromJson(readJsonFile(meshPath.string())));
    return graphFromJson(j, std::move(model));
}

// Reads several graph files that must all reference the same mesh; the cone
// model is built once and shared, so the graphs are mutually comparable.
inline std::vector<CauchyGraph> readGraphFiles(const std::vector<std::string>& paths) {
    if (paths.empty()) throw InputError("readGraphFiles: no graph files given");
    std::vector<CauchyGraph> out;
    std::shared_ptr<const ConeModel> model;
    std::filesystem::path firstMesh;
    for (const auto& path : paths) {
        const Json j = readJsonFile(path);
        const std::string ref = detail::requireKey(j, "mesh", "graph").get<std::string>();
        auto meshPath = std::filesystem::path(path).parent_path() / ref;
        if (!model) {
            firstMesh = meshPath;
            model = std::make_shared<const ConeModel>(meshFromJson(readJsonFile(meshPath.string())));
        } else if (meshPath != firstMesh) {
            throw InputError("readGraphFiles: " + path + " references mesh " + meshPath.string() +
                             " but earlier graphs use " + firstMesh.string());
        }
        out.push_back(graphFromJson(j, model));
    }
    return out;
}

// ---- discrete causal curves -----------------------------------------------

inline EndBehavior endBehaviorFromName(const std::string& name) {
    if (name == "attainedEndpoint") return EndBehavior::attainedEndpoint;
    if (name == "escapesToInfinity") return EndBehavior::escapesToInfinity;
    if (name == "approachesBoundary") return EndBehavior::approachesBoundary;
    throw InputError("unknown end behavior: " + name);
}

inline Json curveToJson(const ConeCurve& c) {
    Json j;
    j["samples"] = Json::array();
    for (const auto& [t, p] : c.samples)
        j["samples"].push_back({t, Json{{"vertex", p.vertex}, {"radius", p.radius}}});
    j["past"] = endBehaviorName(c.pastBehavior);
    j["future"] = endBehaviorName(c.futureBehavior);
    j["timelike"] = c.timelike;
    const auto limitJson = [](const ConePoint& p) {
        return Json{{"vertex", p.vertex}, {"radius", p.radius}};
    };
    if (c.pastLimit) j["pastLimit"] = limitJson(*c.pastLimit);
    if (c.futureLimit) j["futureLimit"] = limitJson(*c.futureLimit);
    return j;
}

inline ConeCurve curveFromJson(const Json& j, std::shared_ptr<const ConeModel> model) {
    ConeCurve c;
    c.model = std::move(model);
    for (const auto& entry : detail::requireKey(j, "samples", "curve")) {
        if (!entry.is_array() || entry.size() != 2)
            throw InputError("curve: each sample is a [parameter, point] pair");
        const auto& p = entry[1];
        c.samples.emplace_back(entry[0].get<double>(),
                               ConePoint{detail::requireKey(p, "vertex", "curve").get<int>(),
                                         detail::requireKey(p, "radius", "curve").get<double>()});
    }
    c.pastBehavior = endBehaviorFromName(detail::requireKey(j, "past", "curve").get<std::string>());
    c.futureBehavior =
        endBehaviorFromName(detail::requireKey(j, "future", "curve").get<std::string>());
    c.timelike = detail::requireKey(j, "timelike", "curve").get<bool>();
    const auto limitFrom = [](const Json& p) {
        return ConePoint{detail::requireKey(p, "vertex", "curve limit").get<int>(),
                         detail::requireKey(p, "radius", "curve limit").get<double>()};
    };
    if (j.contains("pastLimit")) c.pastLimit = limitFrom(j["pastLimit"]);
    if (j.contains("futureLimit")) c.futureLimit = limitFrom(j["futureLimit"]);
    return c;
}

// ---- tabular emissions ----------------------------------------------------

// Time-value table; infinite values are spelled -inf / +inf.
inline std::string tauTableCsv(const FiniteLorentzianSpace& s, const TimeFunctionValues& tf) {
    if (static_cast<int>(tf.tau.size()) != s.n)
        throw InputError("tauTableCsv: values do not match the space");
    std::ostringstream out;
    out << "label,f,g,tau\n";
    for (int i = 0; i < s.n; ++i) {
        const double t = tf.tau[static_cast<std::size_t>(i)];
        out << s.label(i) << "," << formatDouble(tf.fVal[static_cast<std::size_t>(i)]) << ","
            << formatDouble(tf.gVal[static_cast<std::size_t>(i)]) << ",";
        if (std::isinf(t))
            out << (t < 0 ? "-inf" : "+inf");
        else
            out << formatDouble(t);
        out << "\n";
    }
    return out.str();
}

// Pairwise distance matrix with a leading header row and row names.
inline std::string djMatrixCsv(const std::vector<std::string>& names,
                               const std::vector<double>& matrix) {
    const std::size_t n = names.size();
    if (matrix.size() != n * n) throw InputError("djMatrixCsv: matrix size does not match names");
    std::ostringstream out;
    for (const auto& name : names) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << names[i];
        for (std::size_t j = 0; j < n; ++j) out << "," << formatDouble(matrix[i * n + j]);
        out << "\n";
    }
    return out.str();
}

// Crossing-count ensemble rows: (curve id, graph id, crossings).
inline std::string crossingsCsv(const std::vector<std::array<int, 3>>& rows) {
    std::ostringstream out;
    out << "curve,graph,crossings\n";
    for (const auto& r : rows) out << r[0] << "," << r[1] << "," << r[2] << "\n";
    return out.str();
}

} // namespace lcs
