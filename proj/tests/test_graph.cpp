#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "qhpp/bundled.hpp"
#include "qhpp/curve_graph.hpp"
#include "qhpp/obstruct.hpp"
#include "qhpp/pipeline.hpp"

using namespace qhpp;

namespace {

CurveGraph path_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1], 1);
    return CurveGraph::make("path", labels, edges);
}

CurveGraph cycle_graph(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n], 1);
    return CurveGraph::make("cycle", labels, edges);
}

// star with the given arm lengths hanging off a central vertex
CurveGraph star_graph(const std::vector<int>& arms) {
    std::vector<std::string> labels{"center"};
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (std::size_t a = 0; a < arms.size(); ++a) {
        std::string prev = "center";
        for (int i = 0; i < arms[a]; ++i) {
            const std::string cur = "a" + std::to_string(a) + "_" + std::to_string(i);
            labels.push_back(cur);
            edges.emplace_back(prev, cur, 1);
            prev = cur;
        }
    }
    return CurveGraph::make("star", labels, edges);
}

std::vector<std::string> all_labels(const CurveGraph& g) { return g.vertices(); }

} // namespace

TEST_CASE("recognize_ade: paths, stars, cycles", "[graph]") {
    const CurveGraph p9 = path_graph(9);
    auto t = recognize_ade(p9, all_labels(p9));
    REQUIRE(t.has_value());
    CHECK(t->str() == "A9");

    const CurveGraph d4 = star_graph({1, 1, 1});
    t = recognize_ade(d4, all_labels(d4));
    REQUIRE(t.has_value());
    CHECK(t->str() == "D4");

    for (int n = 3; n <= 9; ++n) {
        const CurveGraph c = cycle_graph(n);
        CHECK_FALSE(recognize_ade(c, all_labels(c)).has_value()); // affine, rejected
    }
}

TEST_CASE("recognize_ade: every Dynkin diagram recognizes as itself", "[graph]") {
    for (const Candidate& c : enumerate_candidates(4, 9)) {
        // build the dual graph of the whole type and recognize all vertices
        std::vector<std::string> labels;
        std::vector<std::tuple<std::string, std::string, int>> edges;
        int off = 0;
        for (const AdeComponent& comp : c.type.components()) {
            for (int i = 0; i < comp.rank; ++i) labels.push_back("n" + std::to_string(off + i));
            for (const auto& [a, b] : dynkin_edges(comp))
                edges.emplace_back("n" + std::to_string(off + a), "n" + std::to_string(off + b), 1);
            off += comp.rank;
        }
        const CurveGraph g = CurveGraph::make(c.type.str(), labels, edges);
        const auto t = recognize_ade(g, labels);
        REQUIRE(t.has_value());
        REQUIRE(*t == c.type);
    }
}

TEST_CASE("recognize_ade rejects affine and overweight shapes", "[graph]") {
    const CurveGraph d4t = star_graph({1, 1, 1, 1}); // four arms: degree 4
    CHECK_FALSE(recognize_ade(d4t, all_labels(d4t)).has_value());

    const CurveGraph e6t = star_graph({2, 2, 2});
    CHECK_FALSE(recognize_ade(e6t, all_labels(e6t)).has_value());
    const CurveGraph e7t = star_graph({1, 3, 3});
    CHECK_FALSE(recognize_ade(e7t, all_labels(e7t)).has_value());
    const CurveGraph e8t = star_graph({1, 2, 5});
    CHECK_FALSE(recognize_ade(e8t, all_labels(e8t)).has_value());

    // two fork vertices
    const CurveGraph h = CurveGraph::make(
        "H", {"a", "b", "c", "d", "e", "f"},
        {{"a", "b", 1}, {"b", "c", 1}, {"b", "d", 1}, {"c", "e", 1}, {"c", "f", 1}});
    CHECK_FALSE(recognize_ade(h, all_labels(h)).has_value());

    // doubled edge inside the subset
    const CurveGraph w = CurveGraph::make("w", {"a", "b"}, {{"a", "b", 2}});
    CHECK_FALSE(recognize_ade(w, {"a", "b"}).has_value());
    CHECK(recognize_ade(w, {"a"})->str() == "A1");
}

TEST_CASE("recognize_ade arm-length table for D and E", "[graph]") {
    CHECK(recognize_ade(star_graph({1, 1, 2}), all_labels(star_graph({1, 1, 2})))->str() == "D5");
    CHECK(recognize_ade(star_graph({1, 1, 5}), all_labels(star_graph({1, 1, 5})))->str() == "D8");
    CHECK(recognize_ade(star_graph({1, 2, 2}), all_labels(star_graph({1, 2, 2})))->str() == "E6");
    CHECK(recognize_ade(star_graph({1, 2, 3}), all_labels(star_graph({1, 2, 3})))->str() == "E7");
    CHECK(recognize_ade(star_graph({1, 2, 4}), all_labels(star_graph({1, 2, 4})))->str() == "E8");
}

TEST_CASE("recognize_ade validates labels", "[graph]") {
    const CurveGraph p3 = path_graph(3);
    CHECK_THROWS_AS(recognize_ade(p3, {"nope"}), std::invalid_argument);
    CHECK_THROWS_AS(recognize_ade(p3, {"p0", "p0"}), std::invalid_argument);
    CHECK(recognize_ade(p3, std::vector<std::string>{})->str().empty()); // empty subset, empty type
}

TEST_CASE("bundled S1 has the documented shape", "[graph]") {
    const CurveGraph s1 = bundled_graph("S1");
    CHECK(s1.size() == 16);
    CHECK(s1.edges().size() == 30);
    CHECK(s1.weight(s1.index_of("D1"), s1.index_of("D2")) == 2);
    CHECK(s1.weight(s1.index_of("D1"), s1.index_of("F11")) == 2);
    CHECK(s1.weight(s1.index_of("F11"), s1.index_of("L12")) == 1);
    CHECK(s1.weight(s1.index_of("F11"), s1.index_of("F12")) == 0);

    const auto t = recognize_ade(
        s1, {"F14", "F13", "L'34", "F34", "L34", "F31", "L'12", "F12", "D1"});
    REQUIRE(t.has_value());
    CHECK(t->str() == "D8+A1");
}

TEST_CASE("bundled S2 has the documented shape", "[graph]") {
    const CurveGraph s2 = bundled_graph("S2");
    CHECK(s2.size() == 12);
    CHECK(s2.edges().size() == 14);
    CHECK(s2.weight(s2.index_of("F11"), s2.index_of("D1")) == 2);
    CHECK(s2.weight(s2.index_of("L12"), s2.index_of("B")) == 2);

    const auto t =
        recognize_ade(s2, {"F14", "L44", "F34", "L33", "F13", "F23", "L21", "B", "D1"});
    REQUIRE(t.has_value());
    CHECK(t->str() == "E7+2A1");

    CHECK_THROWS_AS(bundled_graph("S3"), std::invalid_argument);
}

TEST_CASE("search_configurations on a path", "[graph]") {
    const CurveGraph p9 = path_graph(9);
    const AdeSearchResult nine = search_configurations(p9, 9);
    REQUIRE(nine.types.size() == 1);
    CHECK(nine.types[0].str() == "A9");

    const AdeSearchResult three = search_configurations(p9, 3);
    std::vector<std::string> names;
    for (const AdeType& t : three.types) names.push_back(t.str());
    CHECK(names == std::vector<std::string>{"3A1", "A2+A1", "A3"});

    CHECK_THROWS_AS(search_configurations(p9, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_configurations(p9, 10), std::invalid_argument);
}

TEST_CASE("search_configurations matches an exhaustive oracle scan", "[graph]") {
    const CurveGraph s2 = bundled_graph("S2");
    const int k = 5;
    // oracle: scan all subsets with the independent recognizer
    std::set<std::string> expect;
    std::vector<int> comb(k);
    std::function<void(int, int)> scan = [&](int start, int depth) {
        if (depth == k) {
            std::vector<int> subset(comb.begin(), comb.end());
            if (auto t = oracle::oracle_recognize(s2, subset)) expect.insert(t->str());
            return;
        }
        for (int v = start; v < s2.size(); ++v) {
            comb[depth] = v;
            scan(v + 1, depth + 1);
        }
    };
    scan(0, 0);

    std::set<std::string> got;
    for (const AdeType& t : search_configurations(s2, k).types) got.insert(t.str());
    REQUIRE(got == expect);
}

TEST_CASE("triangle graphs contain no size-3 configuration", "[graph]") {
    const CurveGraph tri = cycle_graph(3);
    CHECK(search_configurations(tri, 3).types.empty());
}

TEST_CASE("search on S1 finds D8+A1; S2 finds E7+2A1", "[graph]") {
    const AdeSearchResult s1 = search_configurations(bundled_graph("S1"), 9);
    bool has_d8a1 = false;
    for (const AdeType& t : s1.types) has_d8a1 |= t.str() == "D8+A1";
    CHECK(has_d8a1);

    const AdeSearchResult s2 = search_configurations(bundled_graph("S2"), 9, true);
    bool has_e7 = false;
    for (const AdeType& t : s2.types) has_e7 |= t.str() == "E7+2A1";
    CHECK(has_e7);

    // with-subsets mode lists the witnessing subset from the construction
    std::vector<std::string> want = {"B", "D1", "F13", "F14", "F23", "F34", "L21", "L33", "L44"};
    bool listed = false;
    for (const AdeConfiguration& c : s2.configurations)
        listed |= (c.type.str() == "E7+2A1" && c.subset == want);
    CHECK(listed);

    // every rank-9 type found on an Enriques-surface graph embeds without
    // obstruction into the even (1,9) lattice
    for (const AdeType& t : s1.types) {
        INFO(t.str());
        CHECK_FALSE(even_embedding_obstruction(t).has_value());
    }
    for (const AdeType& t : s2.types) {
        INFO(t.str());
        CHECK_FALSE(even_embedding_obstruction(t).has_value());
    }
}

TEST_CASE("types-only agrees with the deduplicated with-subsets mode", "[graph]") {
    const CurveGraph s2 = bundled_graph("S2");
    const AdeSearchResult plain = search_configurations(s2, 6, false);
    const AdeSearchResult full = search_configurations(s2, 6, true);
    REQUIRE(plain.types == full.types);
    std::set<std::string> from_subsets;
    for (const AdeConfiguration& c : full.configurations) from_subsets.insert(c.type.str());
    std::set<std::string> types;
    for (const AdeType& t : plain.types) types.insert(t.str());
    CHECK(types == from_subsets);
    // every listed induced subgraph really recognizes to its type
    for (const AdeConfiguration& c : full.configurations) {
        const auto t = recognize_ade(s2, c.subset);
        REQUIRE(t.has_value());
        CHECK(*t == c.type);
    }
}

TEST_CASE("search results are independent of vertex order", "[graph]") {
    const CurveGraph s1 = bundled_graph("S1");
    // rebuild S1 with shuffled vertex list
    std::vector<std::string> labels = s1.vertices();
    std::mt19937 rng(99);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (const auto& e : s1.edges())
        edges.emplace_back(s1.vertices()[e.a], s1.vertices()[e.b], e.weight);
    const CurveGraph shuffled = CurveGraph::make("S1-shuffled", labels, edges);

    const AdeSearchResult a = search_configurations(s1, 9);
    const AdeSearchResult b = search_configurations(shuffled, 9);
    REQUIRE(a.types == b.types);
}

TEST_CASE("production recognizer agrees with the algebraic oracle", "[graph]") {
    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 120; ++trial) {
        const CurveGraph g = oracle::random_graph(rng, 12);
        for (int s = 0; s < 40; ++s) {
            const std::vector<int> subset = oracle::random_subset(rng, g.size());
            std::vector<std::string> labels;
            for (int v : subset) labels.push_back(g.vertices()[v]);
            const auto got = recognize_ade(g, labels);
            const auto want = oracle::oracle_recognize(g, subset);
            INFO("subset size " << subset.size());
            REQUIRE(got.has_value() == want.has_value());
            if (got) REQUIRE(*got == *want);
        }
    }
}

TEST_CASE("CurveGraph::make validates the documented constraints", "[graph]") {
    using E = std::vector<std::tuple<std::string, std::string, int>>;
    CHECK_THROWS_AS(CurveGraph::make("g", {"a", "a"}, E{}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {"a", "b"}, E{{"a", "a", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {"a", "b"}, E{{"a", "b", 1}, {"b", "a", 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {"a", "b"}, E{{"a", "c", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {"a", "b"}, E{{"a", "b", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {"a b"}, E{}), std::invalid_argument);
    CHECK_THROWS_AS(CurveGraph::make("g", {""}, E{}), std::invalid_argument);
}
