#pragma once

#include "lcs/io.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace lcs {

// One named check inside a report: pass/fail, an optional headline number,
// and a short note with the supporting detail.
struct Verdict {
    std::string name;
    bool ok = true;
    std::optional<double> value;
    std::string note;
};

// The report schema shared by every subcommand: the subcommand name, the
// effective configuration, the verdict list, witness tuples for failures, and
// the wall time.  Everything except the wall time is deterministic for a
// fixed configuration and seed.
struct Report {
    std::string subcommand;
    Json config = Json::object();
    std::vector<Verdict> verdicts;
    std::vector<Json> witnesses;
    double wallSeconds = 0.0;

    bool allOk() const {
        return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok; });
    }

    void add(std::string name, bool ok, std::optional<double> value = std::nullopt,
             std::string note = "") {
        verdicts.push_back({std::move(name), ok, value, std::move(note)});
    }

    Json toJson() const {
        Json j;
        j["subcommand"] = subcommand;
        j["config"] = config;
        j["verdicts"] = Json::array();
        for (const auto& v : verdicts) {
            Json e;
            e["name"] = v.name;
            e["ok"] = v.ok;
            if (v.value) e["value"] = *v.value;
            if (!v.note.empty()) e["note"] = v.note;
            j["verdicts"].push_back(std::move(e));
        }
        j["witnesses"] = witnesses;
        j["timing"] = Json{{"wallSeconds", wallSeconds}};
        return j;
    }

    // Aligned text table for terminals.
    std::string table() const {
        std::size_t nameWidth = 7;
        for (const auto& v : verdicts) nameWidth = std::max(nameWidth, v.name.size());
        std::ostringstream out;
        out << "subcommand: " << subcommand << "\n";
        out << pad("verdict", nameWidth) << "  status  value\n";
        for (const auto& v : verdicts) {
            out << pad(v.name, nameWidth) << "  " << (v.ok ? "pass  " : "FAIL  ") << "  ";
            if (v.value) out << formatDouble(*v.value);
            if (!v.note.empty()) out << (v.value ? "  " : "") << v.note;
            out << "\n";
        }
        if (!witnesses.empty()) {
            out << "witnesses:\n";
            for (const auto& w : witnesses) out << "  " << w.dump() << "\n";
        }
        out << "wall time: " << formatDouble(wallSeconds) << " s\n";
        return out.str();
    }

private:
    static std::string pad(const std::string& s, std::size_t width) {
        std::string out = s;
        out.resize(std::max(width, s.size()), ' ');
        return out;
    }
};

// Rebuilds a report from its stored JSON so saved runs can be re-rendered.
inline Report reportFromJson(const Json& j) {
    Report r;
    r.subcommand = detail::requireKey(j, "subcommand", "report").get<std::string>();
    r.config = j.value("config", Json::object());
    for (const auto& e : detail::requireKey(j, "verdicts", "report")) {
        Verdict v;
        v.name = detail::requireKey(e, "name", "report verdict").get<std::string>();
        v.ok = detail::requireKey(e, "ok", "report verdict").get<bool>();
        if (e.contains("value")) v.value = e["value"].get<double>();
        v.note = e.value("note", "");
        r.verdicts.push_back(std::move(v));
    }
    if (j.contains("witnesses")) r.witnesses = j["witnesses"].get<std::vector<Json>>();
    if (j.contains("timing")) r.wallSeconds = j["timing"].value("wallSeconds", 0.0);
    return r;
}

} // namespace lcs
