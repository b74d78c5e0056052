// qhpp command line tool: enumeration and classification of ADE singularity
// types on Gorenstein Q-homology projective planes, per-type local
// invariants, embedding obstruction checks, ADE configuration search in
// curve graphs, and verification of explicit embedding certificates.
//
// Every command builds one JSON document; --json prints it verbatim and the
// table view is rendered from the same document, so the two modes carry the
// same facts. Exit codes: 0 success, 1 usage error, 2 parse error (type
// string, graph file, certificate), 3 internal inconsistency.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "qhpp/bundled.hpp"
#include "qhpp/io.hpp"

namespace {

using qhpp::json;

std::string fmt_eps(int e) { return e > 0 ? "+1" : "-1"; }

json epsilon_object(const qhpp::LocalInvariantProfile& prof) {
    json eps;
    for (const auto& [place, value] : prof.epsilons) {
        if (place.is_infinite()) eps["infinity"] = value;
        else eps[std::to_string(place.prime())] = value;
    }
    return eps;
}

// ---- enumerate ------------------------------------------------------------

json run_enumerate(int max_summands, int max_rank) {
    json doc;
    doc["schema"] = "qhpp-enumerate/1";
    doc["max_summands"] = max_summands;
    doc["max_rank"] = max_rank;
    json rows = json::array();
    for (const qhpp::Candidate& c : qhpp::enumerate_candidates(max_summands, max_rank)) {
        long long d = qhpp::det(qhpp::gram_sum(c.type));
        if (d < 0) d = -d;
        json row;
        row["type"] = c.type.str();
        row["rank"] = c.rank;
        row["abs_det"] = d;
        row["summands"] = c.summands;
        rows.push_back(std::move(row));
    }
    doc["count"] = rows.size();
    doc["candidates"] = std::move(rows);
    return doc;
}

void print_enumerate(const json& doc) {
    for (const auto& row : doc["candidates"]) {
        std::printf("%-16s rank=%d  |det|=%lld\n", row["type"].get<std::string>().c_str(),
                    row["rank"].get<int>(), row["abs_det"].get<long long>());
    }
    std::printf("%zu candidates\n", doc["count"].get<std::size_t>());
}

// ---- classify ---------------------------------------------------------------

void print_classify(const json& doc) {
    const auto& counts = doc["counts"];
    std::printf("ADMITTED (%d)\n", counts["admitted"].get<int>());
    std::printf("  %-14s %-5s %-22s %-19s %s\n", "TYPE", "RANK", "CLASS", "REASON", "REALIZATION");
    for (const auto& e : doc["candidates"]) {
        if (e["verdict"] != "admitted") continue;
        std::printf("  %-14s %-5d %-22s %-19s %s\n", e["type"].get<std::string>().c_str(),
                    e["rank"].get<int>(), e["class"].get<std::string>().c_str(),
                    e["reason"].get<std::string>().c_str(),
                    e["realization"].get<std::string>().c_str());
    }
    std::printf("EXCLUDED (%d)\n", counts["square_excluded"].get<int>() +
                                       counts["epsilon_excluded"].get<int>());
    std::printf("  %-14s %-5s %-17s %s\n", "TYPE", "RANK", "REASON", "DETAIL");
    for (const auto& e : doc["candidates"]) {
        if (e["verdict"] != "excluded") continue;
        std::string detail;
        if (e["reason"] == "SQUARE_VALUE")
            detail = "|det|*K^2 = " + std::to_string(e["square_value"].get<long long>());
        else
            detail = "p = " + std::to_string(e["witness_prime"].get<long long>());
        std::printf("  %-14s %-5d %-17s %s\n", e["type"].get<std::string>().c_str(),
                    e["rank"].get<int>(), e["reason"].get<std::string>().c_str(), detail.c_str());
    }
    std::printf("%d admitted (%d + %d), %d square-excluded, %d embedding-excluded\n",
                counts["admitted"].get<int>(), counts["admitted_k_negative_candidate"].get<int>(),
                counts["admitted_k_trivial"].get<int>(), counts["square_excluded"].get<int>(),
                counts["epsilon_excluded"].get<int>());
}

// ---- invariants -------------------------------------------------------------

json run_invariants(const std::string& type_string) {
    const qhpp::AdeType t = qhpp::parse_type(type_string);
    const qhpp::GramMatrix g = qhpp::gram_sum(t);
    const qhpp::LocalInvariantProfile prof = qhpp::invariant_profile(g);
    const long long d = qhpp::det(g);

    json doc;
    doc["schema"] = "qhpp-invariants/1";
    doc["type"] = t.str();
    doc["rank"] = t.total_rank();
    doc["det"] = d;
    doc["disc_class"] = prof.disc.value();
    if (t.total_rank() < 9) {
        const long long k2 = 9 - t.total_rank();
        doc["k_squared"] = k2;
        doc["square_value"] = (d < 0 ? -d : d) * k2;
        doc["square_value_is_square"] = qhpp::is_perfect_square((d < 0 ? -d : d) * k2);
    }
    doc["epsilon"] = epsilon_object(prof);
    return doc;
}

void print_invariants(const json& doc) {
    std::printf("type: %s\n", doc["type"].get<std::string>().c_str());
    std::printf("rank: %d\n", doc["rank"].get<int>());
    std::printf("det: %lld\n", doc["det"].get<long long>());
    std::printf("disc class: %lld\n", doc["disc_class"].get<long long>());
    if (doc.contains("k_squared")) {
        std::printf("K^2: %lld\n", doc["k_squared"].get<long long>());
        std::printf("|det|*K^2: %lld (%s)\n", doc["square_value"].get<long long>(),
                    doc["square_value_is_square"].get<bool>() ? "a square" : "not a square");
    }
    std::printf("epsilon invariants:\n");
    for (const auto& [place, value] : doc["epsilon"].items()) {
        if (place == "infinity") std::printf("  infinity: eps = %s\n", fmt_eps(value.get<int>()).c_str());
        else std::printf("  p=%s: eps = %s\n", place.c_str(), fmt_eps(value.get<int>()).c_str());
    }
}

// ---- check ------------------------------------------------------------------

json run_check(const std::string& type_string, const std::string& target) {
    const qhpp::AdeType t = qhpp::parse_type(type_string);
    const int rank = t.total_rank();

    std::string resolved = target;
    if (resolved == "auto") resolved = rank == 9 ? "even19" : "odd";
    if (resolved == "even19" && rank != 9)
        throw CLI::ValidationError("check", "--target even19 needs a rank-9 type, got rank " +
                                                std::to_string(rank));
    if (resolved == "odd" && (rank < 1 || rank > 8))
        throw CLI::ValidationError("check", "--target odd needs rank 1..8, got rank " +
                                                std::to_string(rank));

    const std::optional<long long> witness = resolved == "even19"
                                                 ? qhpp::even_embedding_obstruction(t)
                                                 : qhpp::odd_embedding_obstruction(t);
    json doc;
    doc["schema"] = "qhpp-check/1";
    doc["type"] = t.str();
    doc["target"] = resolved;
    doc["obstructed"] = witness.has_value();
    doc["witness_prime"] = witness ? json(*witness) : json(nullptr);
    return doc;
}

void print_check(const json& doc) {
    if (doc["obstructed"].get<bool>())
        std::printf("OBSTRUCTED(p=%lld)\n", doc["witness_prime"].get<long long>());
    else
        std::printf("NOT_OBSTRUCTED\n");
}

// ---- ade-search ---------------------------------------------------------------

// bundled names resolve first; an explicit path like ./S1 still reaches a file
qhpp::CurveGraph load_graph(const std::string& arg) {
    if (arg == "S1" || arg == "S2") return qhpp::bundled_graph(arg);
    return qhpp::parse_graph_document(qhpp::read_file(arg));
}

json run_ade_search(const std::string& graph_arg, int size, bool with_subsets) {
    const qhpp::CurveGraph g = load_graph(graph_arg);
    if (size < 1 || size > g.size())
        throw CLI::ValidationError("ade-search", "--size " + std::to_string(size) +
                                                     " out of range 1.." + std::to_string(g.size()));
    const qhpp::AdeSearchResult res = qhpp::search_configurations(g, size, with_subsets);

    json doc;
    doc["schema"] = "qhpp-ade-search/1";
    doc["graph"] = g.name();
    doc["vertices"] = g.size();
    doc["size"] = size;
    json types = json::array();
    for (const qhpp::AdeType& t : res.types) types.push_back(t.str());
    doc["count"] = types.size();
    doc["types"] = std::move(types);
    if (with_subsets) {
        json confs = json::array();
        for (const qhpp::AdeConfiguration& c : res.configurations) {
            json e;
            e["type"] = c.type.str();
            e["subset"] = c.subset;
            confs.push_back(std::move(e));
        }
        doc["configurations"] = std::move(confs);
    }
    return doc;
}

void print_ade_search(const json& doc) {
    if (doc.contains("configurations")) {
        for (const auto& c : doc["configurations"]) {
            std::string subset;
            for (const auto& label : c["subset"]) {
                if (!subset.empty()) subset += ' ';
                subset += label.get<std::string>();
            }
            std::printf("%-16s {%s}\n", c["type"].get<std::string>().c_str(), subset.c_str());
        }
    } else {
        for (const auto& t : doc["types"]) std::printf("%s\n", t.get<std::string>().c_str());
    }
    std::printf("%zu types of size %d on %s\n", doc["count"].get<std::size_t>(),
                doc["size"].get<int>(), doc["graph"].get<std::string>().c_str());
}

// ---- verify ---------------------------------------------------------------------

json run_verify(const std::string& path) {
    const qhpp::EmbeddingCertificate cert = qhpp::parse_certificate_document(qhpp::read_file(path));
    qhpp::EmbeddingReport report;
    try {
        report = qhpp::verify_embedding(cert);
    } catch (const std::invalid_argument& e) {
        throw qhpp::parse_error(std::string("invalid certificate: ") + e.what());
    }
    json doc;
    doc["schema"] = "qhpp-verify/1";
    doc["ambient"] = cert.ambient.str();
    doc["vectors"] = cert.vectors.size();
    doc["checked"] = cert.expected_self.size() + cert.expected_pairs.size();
    doc["verified"] = report.verified();
    json mism = json::array();
    for (const qhpp::EmbeddingMismatch& m : report.mismatches) {
        json e;
        e["lhs"] = m.lhs;
        e["rhs"] = m.rhs;
        e["expected"] = m.expected;
        e["actual"] = m.actual;
        mism.push_back(std::move(e));
    }
    doc["mismatches"] = std::move(mism);
    return doc;
}

void print_verify(const json& doc) {
    if (doc["verified"].get<bool>()) {
        std::printf("VERIFIED (%zu inner products in %s)\n", doc["checked"].get<std::size_t>(),
                    doc["ambient"].get<std::string>().c_str());
        return;
    }
    for (const auto& m : doc["mismatches"]) {
        std::printf("mismatch: <%s,%s> expected %lld, got %lld\n",
                    m["lhs"].get<std::string>().c_str(), m["rhs"].get<std::string>().c_str(),
                    m["expected"].get<long long>(), m["actual"].get<long long>());
    }
    std::printf("%zu mismatches\n", doc["mismatches"].size());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of ADE singularity types on Gorenstein Q-homology "
                 "projective planes"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "print the machine-readable JSON document");

    auto* enumerate = app.add_subcommand("enumerate", "list the candidate singularity types");
    int max_summands = 4, max_rank = 9;
    enumerate->add_option("--max-summands", max_summands, "maximum number of components")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--max-rank", max_rank, "maximum total rank")->check(CLI::PositiveNumber);

    auto* classify = app.add_subcommand("classify", "run the full classification");

    auto* invariants = app.add_subcommand("invariants", "print local invariants of one type");
    std::string inv_type;
    invariants->add_option("type", inv_type, "type string, e.g. A6+A3")->required();

    auto* check = app.add_subcommand("check", "embedding obstruction check for one type");
    std::string check_type, target = "auto";
    check->add_option("type", check_type, "type string, e.g. D4+A5")->required();
    check->add_option("--target", target, "target lattice: auto, even19 (rank 9), odd (rank < 9)")
        ->check(CLI::IsMember({"auto", "even19", "odd"}));

    auto* search = app.add_subcommand("ade-search", "find ADE configurations in a curve graph");
    std::string graph_arg;
    int size = 0;
    bool with_subsets = false;
    search->add_option("graph", graph_arg, "bundled name (S1, S2) or graph file path")->required();
    search->add_option("--size", size, "number of curves in a configuration")->required();
    search->add_flag("--with-subsets", with_subsets, "list every witnessing subset");

    auto* verify = app.add_subcommand("verify", "verify an embedding certificate file");
    std::string cert_path;
    verify->add_option("certificate", cert_path, "certificate file path")->required();

    // accept --json after the subcommand as well
    for (auto* sub : {enumerate, classify, invariants, check, search, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        json doc;
        if (enumerate->parsed()) doc = run_enumerate(max_summands, max_rank);
        else if (classify->parsed()) doc = qhpp::report_to_json(qhpp::classify_all());
        else if (invariants->parsed()) doc = run_invariants(inv_type);
        else if (check->parsed()) doc = run_check(check_type, target);
        else if (search->parsed()) doc = run_ade_search(graph_arg, size, with_subsets);
        else doc = run_verify(cert_path);

        if (json_out) {
            std::printf("%s\n", doc.dump(2).c_str());
            return 0;
        }
        if (enumerate->parsed()) print_enumerate(doc);
        else if (classify->parsed()) print_classify(doc);
        else if (invariants->parsed()) print_invariants(doc);
        else if (check->parsed()) print_check(doc);
        else if (search->parsed()) print_ade_search(doc);
        else print_verify(doc);
        return 0;
    } catch (const qhpp::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qhpp::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
}
