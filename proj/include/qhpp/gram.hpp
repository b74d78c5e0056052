#pragma once

// Gram matrices of root lattices in the negative-definite convention
// (diagonal -2, adjacent simple roots pair to 1), exact integer determinants
// via fraction-free elimination, and congruence diagonalization over Q.

#include <cstdint>
#include <random>
#include <vector>

#include "ade.hpp"
#include "rational.hpp"

namespace qhpp {

// Symmetric integer matrix; set() writes both (i,j) and (j,i).
class GramMatrix {
public:
    GramMatrix() = default;

    explicit GramMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("negative matrix size");
    }

    static GramMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        const int n = static_cast<int>(rows.size());
        GramMatrix g(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("matrix rows must all have length n");
            for (int j = 0; j < n; ++j) g.a_[idx(n, i, j)] = rows[i][j];
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.at(i, j) != g.at(j, i))
                    throw std::invalid_argument("matrix is not symmetric");
        return g;
    }

    int rank() const { return n_; }

    long long at(int i, int j) const {
        check(i);
        check(j);
        return a_[idx(n_, i, j)];
    }

    void set(int i, int j, long long v) {
        check(i);
        check(j);
        a_[idx(n_, i, j)] = v;
        a_[idx(n_, j, i)] = v;
    }

    bool operator==(const GramMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const GramMatrix& o) const { return !(*this == o); }

private:
    static std::size_t idx(int n, int i, int j) {
        return static_cast<std::size_t>(i) * n + j;
    }
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("matrix index out of range");
    }

    int n_ = 0;
    std::vector<long long> a_;
};

// Dynkin diagram of one irreducible component, as a list of adjacent node
// pairs over nodes 0..rank-1. A_n: a path. D_n: a path on nodes 0..n-2 with
// node n-1 attached to node 1. E_n: a path on nodes 0..n-2 with node n-1
// attached to node 2. The E-shape matches the extended-diagram arithmetic
// (the highest root of E_7 is 2e1+3e2+4e3+3e4+2e5+e6+2e7 with e7 on e3).
inline std::vector<std::pair<int, int>> dynkin_edges(const AdeComponent& c) {
    std::vector<std::pair<int, int>> edges;
    const int n = c.rank;
    switch (c.family) {
        case AdeFamily::A:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case AdeFamily::D:
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, n - 1);
            break;
        case AdeFamily::E:
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2, n - 1);
            break;
    }
    return edges;
}

inline GramMatrix gram_irreducible(const AdeComponent& c) {
    GramMatrix g(c.rank);
    for (int i = 0; i < c.rank; ++i) g.set(i, i, -2);
    for (const auto& [a, b] : dynkin_edges(c)) g.set(a, b, 1);
    return g;
}

// Block-diagonal Gram of all components in canonical order.
inline GramMatrix gram_sum(const AdeType& t) {
    if (t.empty()) throw std::invalid_argument("gram_sum of empty type");
    GramMatrix g(t.total_rank());
    int off = 0;
    for (const auto& c : t.components()) {
        const GramMatrix block = gram_irreducible(c);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                if (block.at(i, j) != 0) g.set(off + i, off + j, block.at(i, j));
        off += c.rank;
    }
    return g;
}

// Exact determinant of a general integer matrix, Bareiss fraction-free
// elimination. Intermediate values are minors of the input, kept in 128-bit.
inline long long det_int(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must all have length n");
        for (int j = 0; j < n; ++j) m[i][j] = rows[i][j];
    }
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    const __int128 d = sign * m[n - 1][n - 1];
    const __int128 lim = static_cast<__int128>(INT64_MAX);
    if (d > lim || d < -lim) throw std::overflow_error("determinant exceeds 64 bits");
    return static_cast<long long>(d);
}

inline long long det(const GramMatrix& g) {
    std::vector<std::vector<long long>> rows(g.rank(), std::vector<long long>(g.rank()));
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j) rows[i][j] = g.at(i, j);
    return det_int(rows);
}

// Entries of a rational diagonal form equivalent to the source matrix over Q.
// The square class of the entry product equals that of the determinant.
using DiagonalForm = std::vector<Rational>;

namespace detail {

// Symmetric congruence diagonalization. Pivot choice among the admissible
// candidates is randomized when an engine is supplied; the resulting forms
// differ but carry the same local invariants.
inline DiagonalForm diagonalize_impl(const GramMatrix& g, std::mt19937* rng) {
    const int n = g.rank();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(g.at(i, j));

    auto swap_basis = [&](int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
    };
    // v_a <- v_a + v_b; turns a zero diagonal into 2*m[a][b] when m[b][b] = 0
    auto add_basis = [&](int a, int b) {
        for (int j = 0; j < n; ++j) m[a][j] += m[b][j];
        for (int i = 0; i < n; ++i) m[i][a] += m[i][b];
    };
    auto pick = [&](int count) {
        if (count <= 1 || rng == nullptr) return 0;
        return static_cast<int>((*rng)() % static_cast<unsigned>(count));
    };

    DiagonalForm out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::vector<int> diag_pivots;
        for (int j = k; j < n; ++j)
            if (m[j][j] != 0) diag_pivots.push_back(j);
        if (!diag_pivots.empty()) {
            swap_basis(k, diag_pivots[static_cast<std::size_t>(pick(static_cast<int>(diag_pivots.size())))]);
        } else {
            std::vector<std::pair<int, int>> off_pivots;
            for (int i = k; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) off_pivots.emplace_back(i, j);
            if (off_pivots.empty())
                throw singular_error("diagonalize: matrix is singular");
            const auto [a, b] = off_pivots[static_cast<std::size_t>(pick(static_cast<int>(off_pivots.size())))];
            add_basis(a, b);
            swap_basis(k, a);
        }
        const Rational pivot = m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational c = m[i][k] / pivot;
            for (int j = k; j < n; ++j) m[i][j] -= c * m[k][j];
            for (int j = k; j < n; ++j) m[j][i] = m[i][j];
        }
        out.push_back(pivot);
    }
    return out;
}

} // namespace detail

inline DiagonalForm diagonalize(const GramMatrix& g) {
    return detail::diagonalize_impl(g, nullptr);
}

inline DiagonalForm diagonalize(const GramMatrix& g, std::mt19937& pivot_rng) {
    return detail::diagonalize_impl(g, &pivot_rng);
}

} // namespace qhpp
