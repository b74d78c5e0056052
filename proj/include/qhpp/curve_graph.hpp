#pragma once

// Weighted intersection graphs of (-2)-curves, recognition of disjoint
// unions of ADE Dynkin diagrams inside them, and enumeration of all k-vertex
// ADE configurations up to type.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ade.hpp"

namespace qhpp {

// Undirected graph with positive integer edge weights (intersection
// numbers). Vertices are labelled; an absent pair has weight 0. No self
// loops, no duplicate pairs.
class CurveGraph {
public:
    struct Edge {
        int a = 0, b = 0; // a < b, indices into vertices()
        int weight = 1;
    };

    static CurveGraph make(std::string name, std::vector<std::string> vertices,
                           const std::vector<std::tuple<std::string, std::string, int>>& edges) {
        CurveGraph g;
        g.name_ = std::move(name);
        g.vertices_ = std::move(vertices);
        for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
            const std::string& label = g.vertices_[i];
            if (label.empty()) throw std::invalid_argument("empty vertex label");
            for (char ch : label)
                if (static_cast<unsigned char>(ch) > 126 || ch <= ' ')
                    throw std::invalid_argument("vertex label '" + label +
                                                "' must be printable ASCII without whitespace");
            if (!g.index_.emplace(label, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate vertex label '" + label + "'");
        }
        const int n = static_cast<int>(g.vertices_.size());
        g.weight_.assign(static_cast<std::size_t>(n) * n, 0);
        for (const auto& [la, lb, w] : edges) g.add_edge(la, lb, w);
        return g;
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(vertices_.size()); }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }

    int weight(int i, int j) const {
        if (i < 0 || j < 0 || i >= size() || j >= size())
            throw std::out_of_range("vertex index out of range");
        return weight_[static_cast<std::size_t>(i) * size() + j];
    }

private:
    void add_edge(const std::string& la, const std::string& lb, int w) {
        const int a = index_of(la), b = index_of(lb);
        if (a < 0) throw std::invalid_argument("edge endpoint '" + la + "' is not a vertex");
        if (b < 0) throw std::invalid_argument("edge endpoint '" + lb + "' is not a vertex");
        if (a == b) throw std::invalid_argument("self loop at '" + la + "'");
        if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
        if (weight(a, b) != 0)
            throw std::invalid_argument("duplicate edge " + la + " -- " + lb);
        weight_[static_cast<std::size_t>(a) * size() + b] = w;
        weight_[static_cast<std::size_t>(b) * size() + a] = w;
        edges_.push_back({std::min(a, b), std::max(a, b), w});
    }

    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> index_;
    std::vector<int> weight_;
};

namespace detail {

// Classify one connected induced component given its vertex list and the
// degree/adjacency within the subset. Returns nullopt unless it is a path
// (A_n) or a single-fork tree with arm lengths {1,1,k} (D_{k+3}), {1,2,2}
// (E6), {1,2,3} (E7) or {1,2,4} (E8). Cycles, degree >= 4, and double forks
// never reach here (rejected by the caller's counts).
inline std::optional<AdeComponent> classify_component(
    const std::vector<int>& comp, const std::vector<std::vector<int>>& adj,
    const std::vector<int>& degree) {
    const int n = static_cast<int>(comp.size());
    int fork = -1;
    for (int v : comp) {
        if (degree[v] >= 4) return std::nullopt;
        if (degree[v] == 3) {
            if (fork != -1) return std::nullopt;
            fork = v;
        }
    }
    if (fork == -1) return AdeComponent(AdeFamily::A, n); // path (or isolated vertex)

    std::vector<int> arms;
    for (int start : adj[fork]) {
        int len = 1, prev = fork, cur = start;
        while (true) {
            int next = -1;
            for (int u : adj[cur])
                if (u != prev) { next = u; break; }
            if (next == -1) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1) return AdeComponent(AdeFamily::D, arms[2] + 3);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return AdeComponent(AdeFamily::E, arms[2] + 4);
    return std::nullopt;
}

// Core recognizer over vertex indices (assumed distinct and in range).
inline std::optional<AdeType> recognize_indices(const CurveGraph& g, const std::vector<int>& subset) {
    const int m = static_cast<int>(subset.size());
    std::vector<int> local(g.size(), -1);
    for (int i = 0; i < m; ++i) local[subset[i]] = i;

    std::vector<std::vector<int>> adj(m);
    int edge_count = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const int w = g.weight(subset[i], subset[j]);
            if (w == 0) continue;
            if (w >= 2) return std::nullopt; // doubled edge: affine pattern, not simply laced
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edge_count;
        }

    // components via depth-first walk; a component with a cycle fails the
    // tree edge count below
    std::vector<int> comp_id(m, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < m; ++s) {
        if (comp_id[s] != -1) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        comp_id[s] = static_cast<int>(comps.size()) - 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int u : adj[v])
                if (comp_id[u] == -1) {
                    comp_id[u] = comp_id[v];
                    stack.push_back(u);
                }
        }
    }
    if (edge_count != m - static_cast<int>(comps.size())) return std::nullopt; // some component has a cycle

    std::vector<int> degree(m);
    for (int v = 0; v < m; ++v) degree[v] = static_cast<int>(adj[v].size());

    std::vector<AdeComponent> types;
    for (const auto& comp : comps) {
        auto c = classify_component(comp, adj, degree);
        if (!c) return std::nullopt;
        types.push_back(*c);
    }
    return AdeType(std::move(types));
}

} // namespace detail

// The induced subgraph on the given labels, recognized as a disjoint union
// of Dynkin diagrams; nullopt if it is anything else.
inline std::optional<AdeType> recognize_ade(const CurveGraph& g,
                                            const std::vector<std::string>& subset) {
    std::vector<int> idx;
    std::set<int> seen;
    idx.reserve(subset.size());
    for (const std::string& label : subset) {
        const int i = g.index_of(label);
        if (i < 0) throw std::invalid_argument("unknown vertex label '" + label + "'");
        if (!seen.insert(i).second)
            throw std::invalid_argument("duplicate vertex label '" + label + "' in subset");
        idx.push_back(i);
    }
    return detail::recognize_indices(g, idx);
}

struct AdeConfiguration {
    std::vector<std::string> subset; // labels, sorted
    AdeType type;
};

struct AdeSearchResult {
    std::vector<AdeType> types;               // deduplicated, sorted by canonical string
    std::vector<AdeConfiguration> configurations; // with-subsets mode only
};

// All k-subsets whose induced subgraph is a disjoint union of Dynkin
// diagrams, collected up to type (the type determines the isomorphism class
// of such a union). Enumeration is lexicographic over vertex indices with
// early pruning: a partial subset already containing a doubled edge, a
// vertex of degree >= 4, or a cycle cannot extend to a Dynkin union.
inline AdeSearchResult search_configurations(const CurveGraph& g, int k, bool with_subsets = false) {
    if (k < 1 || k > g.size())
        throw std::invalid_argument("subset size " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(g.size()));

    AdeSearchResult result;
    std::set<AdeType> found;

    const int n = g.size();
    std::vector<int> chosen;
    std::vector<int> degree(n, 0);
    // union-find over chosen vertices for incremental cycle detection
    std::vector<int> parent(n);
    auto find_root = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };

    std::function<void(int)> extend = [&](int start) {
        if (static_cast<int>(chosen.size()) == k) {
            if (auto t = detail::recognize_indices(g, chosen)) {
                found.insert(*t);
                if (with_subsets) {
                    std::vector<std::string> labels;
                    for (int v : chosen) labels.push_back(g.vertices()[v]);
                    std::sort(labels.begin(), labels.end());
                    result.configurations.push_back({std::move(labels), *t});
                }
            }
            return;
        }
        const int remaining = k - static_cast<int>(chosen.size());
        for (int v = start; v <= n - remaining; ++v) {
            bool ok = true;
            int new_edges = 0;
            parent[v] = v;
            for (int u : chosen) {
                const int w = g.weight(u, v);
                if (w == 0) continue;
                if (w >= 2 || degree[u] == 3 || new_edges == 3) { ok = false; break; }
                if (find_root(u) == v) { ok = false; break; } // closes a cycle
                parent[find_root(u)] = v;
                ++new_edges;
            }
            if (ok) {
                for (int u : chosen)
                    if (g.weight(u, v) >= 1) ++degree[u];
                degree[v] = new_edges;
                chosen.push_back(v);
                extend(v + 1);
                chosen.pop_back();
                for (int u : chosen)
                    if (g.weight(u, v) >= 1) --degree[u];
                degree[v] = 0;
            }
            // rebuild union-find for the current subset after the trial merge
            for (int u : chosen) parent[u] = u;
            for (std::size_t a = 0; a < chosen.size(); ++a)
                for (std::size_t b = a + 1; b < chosen.size(); ++b)
                    if (g.weight(chosen[a], chosen[b]) == 1) {
                        const int ra = find_root(chosen[a]), rb = find_root(chosen[b]);
                        if (ra != rb) parent[ra] = rb;
                    }
        }
    };
    for (int i = 0; i < n; ++i) parent[i] = i;
    extend(0);

    result.types.assign(found.begin(), found.end());
    std::sort(result.types.begin(), result.types.end(),
              [](const AdeType& a, const AdeType& b) { return a.str() < b.str(); });
    std::sort(result.configurations.begin(), result.configurations.end(),
              [](const AdeConfiguration& a, const AdeConfiguration& b) {
                  if (a.type.str() != b.type.str()) return a.type.str() < b.type.str();
                  return a.subset < b.subset;
              });
    return result;
}

} // namespace qhpp
