#pragma once

// JSON file formats and report serialization. nlohmann::json with the default
// std::map object storage keeps keys sorted, so every payload is byte-stable
// across runs and thread counts. Infinities are carried as the string
// "infinity" since JSON has no literal for them.

#include <fstream>

#include <json.hpp>

#include "boundedness.hpp"
#include "chains.hpp"
#include "convexity.hpp"
#include "covers.hpp"
#include "generators.hpp"
#include "metric_space.hpp"

namespace metriclab {

using json = nlohmann::json;

inline json num_json(double v) {
    if (std::isinf(v)) return v > 0 ? json("infinity") : json("-infinity");
    return json(v);
}

inline double num_from(const json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "infinity") return kInf;
        if (s == "-infinity") return -kInf;
        throw std::invalid_argument("not a number: " + s);
    }
    return j.get<double>();
}

// ---------------------------------------------------------------------------
// Space files: {"labels": [...], "matrix": [[...]]} or
// {"points": [[...], ...], "metric": "euclidean"|"l1"|"chebyshev"},
// optionally with "axiom_tol". Loading validates the metric axioms.

inline FiniteMetricSpace space_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("space file must be a JSON object");
    if (j.contains("matrix")) {
        auto labels = j.value("labels", std::vector<std::string>{});
        auto rows = j.at("matrix");
        if (!rows.is_array()) throw std::invalid_argument("matrix must be an array of rows");
        std::vector<std::vector<double>> matrix;
        matrix.reserve(rows.size());
        double max_entry = 0.0;
        for (const auto& row : rows) {
            std::vector<double> r;
            r.reserve(row.size());
            for (const auto& v : row) {
                r.push_back(num_from(v));
                max_entry = std::max(max_entry, r.back());
            }
            matrix.push_back(std::move(r));
        }
        if (labels.empty())
            for (std::size_t i = 0; i < matrix.size(); ++i) labels.push_back("p" + std::to_string(i));
        double tol = j.contains("axiom_tol") ? num_from(j.at("axiom_tol")) : default_axiom_tol(max_entry);
        return build_space_from_matrix(std::move(labels), matrix, tol);
    }
    if (j.contains("points")) {
        auto pts = j.at("points").get<std::vector<std::vector<double>>>();
        MetricName metric = metric_name_from(j.value("metric", "euclidean"));
        double tol;
        if (j.contains("axiom_tol")) {
            tol = num_from(j.at("axiom_tol"));
        } else {
            double max_entry = 0.0;
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t k = i + 1; k < pts.size(); ++k)
                    max_entry = std::max(max_entry, point_distance(pts[i], pts[k], metric));
            tol = default_axiom_tol(max_entry);
        }
        return build_space_from_points(pts, metric, tol);
    }
    throw std::invalid_argument("space file needs either \"matrix\" or \"points\"");
}

inline json space_to_json(const FiniteMetricSpace& s) {
    json rows = json::array();
    for (int i = 0; i < s.n(); ++i) {
        json row = json::array();
        for (int k = 0; k < s.n(); ++k) row.push_back(num_json(s.d(i, k)));
        rows.push_back(std::move(row));
    }
    return json{{"axiom_tol", num_json(s.axiom_tol())}, {"labels", s.labels()}, {"matrix", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Cover files: {"target": [...], "elements": [...], "families": [...]}.
// Element kinds: {"kind":"ball","center":i,"radius":r,"open":b},
// {"kind":"explicit","points":[...]}, {"kind":"complement","points":[...]}.
// Family: {"range":N,"centers":[...],"radius":{"type":...,"c":v},"open":b}.
// A missing "target" means the whole space (resolved at load time).

inline RadiusFormula radius_formula_from_json(const json& j) {
    RadiusFormula f;
    std::string type = j.at("type").get<std::string>();
    if (type == "constant")
        f.type = RadiusFormula::Type::constant;
    else if (type == "harmonic")
        f.type = RadiusFormula::Type::harmonic;
    else if (type == "scaled")
        f.type = RadiusFormula::Type::scaled;
    else
        throw std::invalid_argument("unknown radius type: " + type);
    f.c = j.contains("c") ? num_from(j.at("c")) : 0.0;
    return f;
}

inline Cover cover_from_json(const json& j, const FiniteMetricSpace& space_for_default_target) {
    if (!j.is_object()) throw std::invalid_argument("cover file must be a JSON object");
    Cover c;
    for (const auto& ej : j.value("elements", json::array())) {
        CoverElement e;
        std::string kind = ej.at("kind").get<std::string>();
        if (kind == "ball") {
            e = ball_element(ej.at("center").get<int>(), num_from(ej.at("radius")), ej.value("open", true));
        } else if (kind == "explicit") {
            e = explicit_element(ej.at("points").get<PointSet>());
        } else if (kind == "complement") {
            e = complement_element(ej.at("points").get<PointSet>());
        } else {
            throw std::invalid_argument("unknown element kind: " + kind);
        }
        e.label = ej.value("label", "");
        c.elements.push_back(std::move(e));
    }
    for (const auto& fj : j.value("families", json::array())) {
        ParametricBallFamily f;
        f.range = fj.at("range").get<int>();
        f.centers = fj.at("centers").get<std::vector<int>>();
        f.radius = radius_formula_from_json(fj.at("radius"));
        f.open = fj.value("open", true);
        f.label = fj.value("label", "");
        c.families.push_back(std::move(f));
    }
    if (j.contains("target"))
        c.target = j.at("target").get<PointSet>();
    else
        c.target = detail::all_points(space_for_default_target);
    return c;
}

inline json cover_to_json(const Cover& c) {
    json elements = json::array();
    for (const auto& e : c.elements) {
        json ej;
        switch (e.kind) {
            case CoverElement::Kind::open_ball:
                ej = json{{"kind", "ball"}, {"center", e.center}, {"radius", num_json(e.radius)}, {"open", e.open}};
                break;
            case CoverElement::Kind::explicit_set:
                ej = json{{"kind", "explicit"}, {"points", e.points}};
                break;
            case CoverElement::Kind::complement_of:
                ej = json{{"kind", "complement"}, {"points", e.points}};
                break;
        }
        if (!e.label.empty()) ej["label"] = e.label;
        elements.push_back(std::move(ej));
    }
    json families = json::array();
    for (const auto& f : c.families) {
        json fj{{"range", f.range},
                {"centers", f.centers},
                {"radius", json{{"type", to_string(f.radius.type)}, {"c", num_json(f.radius.c)}}},
                {"open", f.open}};
        if (!f.label.empty()) fj["label"] = f.label;
        families.push_back(std::move(fj));
    }
    return json{{"elements", std::move(elements)}, {"families", std::move(families)}, {"target", c.target}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return j;
}

inline FiniteMetricSpace load_space(const std::string& path) { return space_from_json(load_json_file(path)); }

inline Cover load_cover(const std::string& path, const FiniteMetricSpace& space) {
    return cover_from_json(load_json_file(path), space);
}

// ---------------------------------------------------------------------------
// Report payloads.

inline json to_json(const MetricViolation& v) {
    json w = json::array();
    for (int i = 0; i < v.witness_count; ++i) w.push_back(v.witness[static_cast<std::size_t>(i)]);
    return json{{"kind", to_string(v.kind)}, {"magnitude", num_json(v.magnitude)}, {"witness", std::move(w)}};
}

inline json to_json(const std::vector<MetricViolation>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline json to_json(const ChainCertificate& c) {
    return json{{"eps", num_json(c.eps)}, {"length", c.length()}, {"points", c.points}};
}

inline json components_json(const std::vector<PointSet>& parts) {
    json a = json::array();
    for (const auto& p : parts) a.push_back(p);
    return json{{"components", std::move(a)}, {"count", parts.size()}};
}

inline json to_json(const FiniteChainabilityResult& r) {
    json assign = json::array();
    for (const auto& [point, ca] : r.assignment)
        assign.push_back(json{{"point", point}, {"center", ca.first}, {"chain", to_json(ca.second)}});
    json j{{"ok", r.ok},
           {"eps", num_json(r.eps)},
           {"m", r.m},
           {"centers", r.centers},
           {"assignment", std::move(assign)}};
    j["unreachable"] = r.unreachable ? json(*r.unreachable) : json(nullptr);
    return j;
}

inline json to_json(const NetCertificate& c) {
    json assign = json::array();
    for (const auto& [point, center] : c.assignment) assign.push_back(json{{"center", center}, {"point", point}});
    return json{{"assignment", std::move(assign)}, {"centers", c.centers}, {"eps", num_json(c.eps)}};
}

inline json to_json(const SeparationWitness& w) {
    return json{{"eps", num_json(w.eps)}, {"indices", w.indices}};
}

inline json to_json(const LebesgueReport& r) {
    json j{{"ball_bound", num_json(r.ball_bound)},
           {"complete", r.complete},
           {"method", r.method}};
    if (r.complete) {
        j["exact"] = num_json(r.exact);
    } else {
        j["lower"] = num_json(r.lower);
        j["upper"] = num_json(r.upper);
    }
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    return j;
}

inline json to_json(const LocalFinitenessProfile& p) {
    json inc = json::array();
    for (const auto& [point, count] : p.incidence) inc.push_back(json{{"count", count}, {"point", point}});
    return json{{"incidence", std::move(inc)}, {"max_incidence", p.max_incidence}};
}

inline json to_json(const SubcoverResult& r) {
    json j{{"labels", r.labels}, {"ok", r.ok}};
    j["uncovered"] = r.uncovered ? json(*r.uncovered) : json(nullptr);
    return j;
}

inline json to_json(const SpectrumReport& r) {
    json d = json::array();
    for (double v : r.sorted_distances) d.push_back(num_json(v));
    return json{{"basepoint", r.basepoint},
                {"gap_location", json::array({num_json(r.gap_location.first), num_json(r.gap_location.second)})},
                {"max_gap", num_json(r.max_gap)},
                {"sorted_distances", std::move(d)},
                {"sup", num_json(r.sup)}};
}

inline json to_json(const ConvexityReport& r) {
    json vs = json::array();
    for (const auto& v : r.violations) vs.push_back(json{{"points", v.points}, {"value", num_json(v.value)}});
    return json{{"holds", r.holds}, {"kind", r.kind}, {"tol", num_json(r.tol)}, {"violations", std::move(vs)}};
}

inline json to_json(const std::vector<RealizedMember>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(json{{"label", m.label}, {"points", m.points}});
    return a;
}

inline json to_json(const std::vector<ExpectationResult>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(json{{"claim", r.claim}, {"details", r.details}, {"pass", r.pass}});
    return a;
}

}  // namespace metriclab
