#pragma once

// JSON document formats: curve graphs, embedding certificates, and the
// classification report. Field-level schemas are documented in
// docs/formats.md; parsing is strict and every violation surfaces as
// qhpp::parse_error.

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "curve_graph.hpp"
#include "obstruct.hpp"
#include "pipeline.hpp"

namespace qhpp {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* name, const char* what) {
    if (!j.is_object()) throw parse_error(std::string(what) + ": document is not an object");
    auto it = j.find(name);
    if (it == j.end()) throw parse_error(std::string(what) + ": missing field '" + name + "'");
    return *it;
}

inline std::string as_string(const json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

} // namespace detail

// ---- curve graphs -------------------------------------------------------

inline CurveGraph graph_from_json(const json& j) {
    const std::string name = detail::as_string(detail::field(j, "name", "graph"), "graph name");
    const json& jverts = detail::field(j, "vertices", "graph");
    if (!jverts.is_array()) throw parse_error("graph vertices must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : jverts) vertices.push_back(detail::as_string(v, "vertex label"));

    const json& jedges = detail::field(j, "edges", "graph");
    if (!jedges.is_array()) throw parse_error("graph edges must be an array");
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : jedges) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw parse_error("each edge must be [labelA, labelB] or [labelA, labelB, weight]");
        const std::string a = detail::as_string(e[0], "edge endpoint");
        const std::string b = detail::as_string(e[1], "edge endpoint");
        const long long w = e.size() == 3 ? detail::as_int(e[2], "edge weight") : 1;
        if (w < 1 || w > 1000000) throw parse_error("edge weight out of range");
        edges.emplace_back(a, b, static_cast<int>(w));
    }
    try {
        return CurveGraph::make(name, std::move(vertices), edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid graph: ") + e.what());
    }
}

inline CurveGraph parse_graph_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("graph document is not valid JSON: ") + e.what());
    }
    return graph_from_json(j);
}

inline json graph_to_json(const CurveGraph& g) {
    json j;
    j["name"] = g.name();
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json::array({g.vertices()[e.a], g.vertices()[e.b], e.weight}));
    j["edges"] = std::move(edges);
    return j;
}

// ---- embedding certificates ---------------------------------------------

inline EmbeddingCertificate certificate_from_json(const json& j) {
    EmbeddingCertificate cert{AdeComponent(AdeFamily::A, 1), {}, {}, {}};

    const std::string ambient = detail::as_string(detail::field(j, "ambient", "certificate"), "ambient");
    const AdeType t = parse_type(ambient); // propagates parse_error on bad type strings
    if (t.summands() != 1)
        throw parse_error("ambient '" + ambient + "' must be a single irreducible component");
    cert.ambient = t.components()[0];

    const json& jvecs = detail::field(j, "vectors", "certificate");
    if (!jvecs.is_object() || jvecs.empty())
        throw parse_error("certificate vectors must be a non-empty object");
    for (const auto& [name, coords] : jvecs.items()) {
        if (!coords.is_array()) throw parse_error("vector '" + name + "' must be an integer array");
        std::vector<long long> v;
        for (const auto& x : coords) v.push_back(detail::as_int(x, "vector coordinate"));
        if (static_cast<int>(v.size()) != cert.ambient.rank)
            throw parse_error("vector '" + name + "' has " + std::to_string(v.size()) +
                              " coordinates, ambient rank is " + std::to_string(cert.ambient.rank));
        cert.vectors.emplace_back(name, std::move(v));
    }
    auto known = [&](const std::string& name) {
        for (const auto& [n, v] : cert.vectors)
            if (n == name) return true;
        return false;
    };

    if (auto it = j.find("expected_self"); it != j.end()) {
        if (!it->is_object()) throw parse_error("expected_self must be an object");
        for (const auto& [name, val] : it->items()) {
            if (!known(name)) throw parse_error("expected_self names unknown vector '" + name + "'");
            cert.expected_self.emplace_back(name, detail::as_int(val, "expected self product"));
        }
    }
    if (auto it = j.find("expected_pairs"); it != j.end()) {
        if (!it->is_array()) throw parse_error("expected_pairs must be an array");
        for (const auto& p : *it) {
            if (!p.is_array() || p.size() != 3)
                throw parse_error("each expected pair must be [nameA, nameB, value]");
            const std::string a = detail::as_string(p[0], "pair name");
            const std::string b = detail::as_string(p[1], "pair name");
            if (!known(a)) throw parse_error("expected_pairs names unknown vector '" + a + "'");
            if (!known(b)) throw parse_error("expected_pairs names unknown vector '" + b + "'");
            cert.expected_pairs.emplace_back(a, b, detail::as_int(p[2], "expected pair product"));
        }
    }
    if (cert.expected_self.empty() && cert.expected_pairs.empty())
        throw parse_error("certificate has nothing to check (no expected_self, no expected_pairs)");
    return cert;
}

inline EmbeddingCertificate parse_certificate_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("certificate document is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

// ---- classification report ----------------------------------------------

inline const char* admission_class_name(AdmissionClass c) {
    return c == AdmissionClass::k_trivial ? "K_TRIVIAL" : "K_NEGATIVE_CANDIDATE";
}

inline const char* verdict_reason_name(VerdictReason r) {
    switch (r) {
        case VerdictReason::not_obstructed: return "NOT_OBSTRUCTED";
        case VerdictReason::five_point_theorem: return "FIVE_POINT_THEOREM";
        case VerdictReason::square_value: return "SQUARE_VALUE";
        case VerdictReason::epsilon_witness: return "EPSILON_WITNESS";
    }
    return "?";
}

inline const char* realization_name(Realization r) {
    return r == Realization::unknown_realization ? "UNKNOWN_REALIZATION" : "REALIZED";
}

inline json report_to_json(const ClassificationReport& report) {
    json j;
    j["schema"] = "qhpp-report/1";
    json entries = json::array();
    for (const TypeVerdict& v : report.entries) {
        json e;
        e["type"] = v.type.str();
        e["rank"] = v.rank;
        e["k_squared"] = v.k_squared;
        e["abs_det"] = v.abs_det;
        e["verdict"] = v.admitted ? "admitted" : "excluded";
        e["reason"] = verdict_reason_name(v.reason);
        if (v.square_value) e["square_value"] = *v.square_value;
        if (v.witness_prime) e["witness_prime"] = *v.witness_prime;
        if (v.admitted) {
            e["class"] = admission_class_name(v.admission_class);
            e["realization"] = realization_name(v.realization);
            e["injected"] = v.injected;
        }
        entries.push_back(std::move(e));
    }
    j["candidates"] = std::move(entries);
    json counts;
    counts["enumerated"] = report.counts.enumerated;
    counts["injected"] = report.counts.injected;
    counts["admitted"] = report.counts.admitted;
    counts["admitted_k_negative_candidate"] = report.counts.admitted_k_negative;
    counts["admitted_k_trivial"] = report.counts.admitted_k_trivial;
    counts["square_excluded"] = report.counts.square_excluded;
    counts["epsilon_excluded"] = report.counts.epsilon_excluded;
    j["counts"] = std::move(counts);
    return j;
}

// ---- small file helper ----------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace qhpp
