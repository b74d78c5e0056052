#pragma once

// Exclusion filters and verification tools for singularity types R on
// Q-homology projective planes:
//   * square_filter          — |det(R)| * K^2 must be a perfect square when
//                              K is not numerically trivial (rank < 9),
//   * even_embedding_obstruction — rank-9 R against the even unimodular
//                              lattice of signature (1,9) (H + E8),
//   * odd_embedding_obstruction  — rank-L R against the odd unimodular
//                              lattice of signature (1,L),
//   * verify_embedding       — checks explicit vectors inside an ambient
//                              root lattice against expected inner products,
//   * isometric_small        — exhaustive small-entry basis-change search.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "padic.hpp"

namespace qhpp {

inline bool is_perfect_square(long long v) {
    if (v < 0) return false;
    const long long r = std::llround(std::sqrt(static_cast<double>(v)));
    for (long long c = std::max<long long>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) return true;
    return false;
}

// The unimodular lattices singularity types are tested against. The
// hyperbolic plane H only ever hosts rank-1 sublattices (negative definite
// of rank >= 2 cannot sit in signature (1,1), and A1 = <-2> visibly embeds
// via (1,-1)), so the classification needs no separate H test.
enum class TargetLattice { even_1_9, odd_1_l, hyperbolic_h };

// Gram matrix of a target: H + E8 for the even (1,9) lattice, diag(1,-1^L)
// for the odd one, [[0,1],[1,0]] for H. L is used by odd_1_l only.
inline GramMatrix target_gram(TargetLattice kind, int L = 0) {
    switch (kind) {
        case TargetLattice::hyperbolic_h:
            return GramMatrix::from_rows({{0, 1}, {1, 0}});
        case TargetLattice::even_1_9: {
            GramMatrix g(10);
            g.set(0, 1, 1);
            const GramMatrix e8 = gram_irreducible(AdeComponent(AdeFamily::E, 8));
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    if (e8.at(i, j) != 0) g.set(2 + i, 2 + j, e8.at(i, j));
            return g;
        }
        case TargetLattice::odd_1_l: {
            if (L < 1) throw std::invalid_argument("odd target needs L >= 1");
            GramMatrix g(L + 1);
            g.set(0, 0, 1);
            for (int i = 1; i <= L; ++i) g.set(i, i, -1);
            return g;
        }
    }
    throw std::invalid_argument("unknown target lattice");
}

enum class FilterKind { square_value, epsilon_witness };

struct FilterVerdict {
    bool passed = false;
    FilterKind reason = FilterKind::square_value;
    // |det|*K^2 for the square filter; the witness prime for a failed
    // embedding check; absent on a passed embedding check.
    std::optional<long long> detail;
};

// K^2 = 9 - rank(R). Applicable only when K is nontrivial, i.e. rank < 9.
inline FilterVerdict square_filter(const AdeType& t) {
    const int r = t.total_rank();
    if (r == 9)
        throw std::invalid_argument("square_filter does not apply at rank 9 (K is numerically trivial)");
    if (r < 1 || r > 9)
        throw std::invalid_argument("square_filter needs rank 1..8, got " + std::to_string(r));
    const long long k2 = 9 - r;
    long long abs_det = det(gram_sum(t));
    if (abs_det < 0) abs_det = -abs_det;
    const long long value = abs_det * k2;
    return FilterVerdict{is_perfect_square(value), FilterKind::square_value, value};
}

namespace detail {

// Both obstruction tests reduce to epsilon mismatches at odd primes.
//
// If R embeds in the target T with rank(T) = rank(R) + 1, the complement is
// a rank-1 lattice <c> and R + <c> matches T over every completion Q_v.
// Matching discriminants force the square class of c, matching rank and
// signature settle the real place, and a rank-1 form has trivial epsilon, so
// the only freedom left is eps_p(R + <c>) = eps_p(T) at finite p.
//
// The search runs over odd relevant primes only. That is sound: at odd p
// the target invariants are +1 (unit diagonal entries), so a mismatch is
// genuine. It is also complete: epsilon over all places multiplies to +1
// for any form (Hilbert reciprocity), and the real places agree, so the two
// forms cannot disagree at p = 2 alone. Any odd prime outside the relevant
// set has all symbols +1 and cannot witness either.
inline std::optional<long long> odd_prime_witness(const DiagonalForm& d,
                                                  std::optional<SquareClass> extra_pair) {
    for (long long p : relevant_primes(d)) {
        if (p == 2) continue;
        const Place v = Place::finite(p);
        int eps = epsilon_invariant(d, v);
        if (extra_pair) {
            const SquareClass disc = [&] {
                Rational prod(1);
                for (const Rational& x : d) prod *= x;
                return square_class(prod);
            }();
            eps *= hilbert_symbol(disc, *extra_pair, v);
        }
        if (eps == -1) return p;
    }
    return std::nullopt;
}

} // namespace detail

// Smallest odd prime p with eps_p(R) = -1, if any. For rank-9 R inside
// H + E8 the forced complement class is -d(R), and (d, -d)_p = +1 kills the
// cross term, so the mismatch criterion is eps_p(R) itself (the target has
// eps_p = +1 everywhere, being a sum of H ~ <2,-2> and the unimodular E8).
// "No witness" does not assert embeddability.
inline std::optional<long long> even_embedding_obstruction(const AdeType& t) {
    if (t.total_rank() != 9)
        throw std::invalid_argument("even_embedding_obstruction needs rank 9, got " +
                                    std::to_string(t.total_rank()));
    return detail::odd_prime_witness(diagonalize(gram_sum(t)), std::nullopt);
}

// Smallest odd prime p with eps_p(R + <c>) = -1 where <c> is the forced
// rank-1 complement of R in the odd unimodular lattice of signature
// (1, rank R): its class is (-1)^L d(R) = |d(R)|, positive, so the real
// places agree. Cross term (d(R), |d(R)|)_p survives into the criterion.
inline std::optional<long long> odd_embedding_obstruction(const AdeType& t) {
    const int L = t.total_rank();
    if (L < 1 || L > 8)
        throw std::invalid_argument("odd_embedding_obstruction needs rank 1..8, got " +
                                    std::to_string(L));
    const GramMatrix g = gram_sum(t);
    const SquareClass disc = square_class(det(g));
    const long long complement = disc.value() < 0 ? -disc.value() : disc.value();
    return detail::odd_prime_witness(diagonalize(g), square_class(complement));
}

// Named integer vectors in the simple-root basis of a single irreducible
// ambient lattice, with claimed self- and pairwise inner products.
struct EmbeddingCertificate {
    AdeComponent ambient{AdeFamily::A, 1};
    std::vector<std::pair<std::string, std::vector<long long>>> vectors;
    std::vector<std::pair<std::string, long long>> expected_self;
    std::vector<std::tuple<std::string, std::string, long long>> expected_pairs;
};

struct EmbeddingMismatch {
    std::string lhs, rhs; // lhs == rhs for a self product
    long long expected = 0;
    long long actual = 0;
};

struct EmbeddingReport {
    std::vector<EmbeddingMismatch> mismatches;
    bool verified() const { return mismatches.empty(); }
};

inline EmbeddingReport verify_embedding(const EmbeddingCertificate& c) {
    const GramMatrix g = gram_irreducible(c.ambient);
    const int n = g.rank();
    std::map<std::string, const std::vector<long long>*> by_name;
    for (const auto& [name, coords] : c.vectors) {
        if (static_cast<int>(coords.size()) != n)
            throw std::invalid_argument("vector '" + name + "' has " +
                                        std::to_string(coords.size()) + " coordinates, ambient rank is " +
                                        std::to_string(n));
        if (!by_name.emplace(name, &coords).second)
            throw std::invalid_argument("duplicate vector name '" + name + "'");
    }
    auto lookup = [&](const std::string& name) -> const std::vector<long long>& {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw std::invalid_argument("unknown vector name '" + name + "'");
        return *it->second;
    };
    auto inner = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += a[i] * g.at(i, j) * b[j];
        return s;
    };

    EmbeddingReport report;
    for (const auto& [name, expected] : c.expected_self) {
        const long long actual = inner(lookup(name), lookup(name));
        if (actual != expected) report.mismatches.push_back({name, name, expected, actual});
    }
    for (const auto& [a, b, expected] : c.expected_pairs) {
        const long long actual = inner(lookup(a), lookup(b));
        if (actual != expected) report.mismatches.push_back({a, b, expected, actual});
    }
    return report;
}

using IntMatrix = std::vector<std::vector<long long>>;

namespace detail {

inline std::pair<int, int> signature(const GramMatrix& g) {
    int pos = 0, neg = 0;
    for (const Rational& x : diagonalize(g)) {
        if (x > 0) ++pos;
        else ++neg;
    }
    return {pos, neg};
}

inline long long column_pairing(const GramMatrix& g, const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    long long s = 0;
    const int n = g.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += a[i] * g.at(i, j) * b[j];
    return s;
}

} // namespace detail

// Exhaustive search for an integer basis change P with entries in
// [-bound, bound] and det P = +-1 such that P^T g1 P = g2. Columns are
// assembled depth-first in lexicographic order (entries -bound..bound,
// column-major), so the first hit is the lexicographically least witness.
// No witness at the given bound proves nothing; equal determinants and
// signatures are prechecked since a congruence by det +-1 preserves both.
inline std::optional<IntMatrix> isometric_small(const GramMatrix& g1, const GramMatrix& g2,
                                                long long bound) {
    if (g1.rank() != g2.rank())
        throw std::invalid_argument("isometric_small: rank mismatch");
    if (bound < 1) throw std::invalid_argument("isometric_small: bound must be >= 1");
    const int n = g1.rank();
    if (n == 0) return IntMatrix{};

    const long long d1 = det(g1), d2 = det(g2);
    if (d1 != d2) return std::nullopt;
    if (d1 != 0 && detail::signature(g1) != detail::signature(g2)) return std::nullopt;

    // candidate columns per target diagonal value
    std::map<long long, std::vector<std::vector<long long>>> by_norm;
    std::vector<long long> needed;
    for (int j = 0; j < n; ++j) needed.push_back(g2.at(j, j));
    {
        std::vector<long long> col(n, -bound);
        while (true) {
            const long long norm = detail::column_pairing(g1, col, col);
            for (long long want : needed)
                if (norm == want) { by_norm[want].push_back(col); break; }
            int i = n - 1;
            while (i >= 0 && col[i] == bound) { col[i] = -bound; --i; }
            if (i < 0) break;
            ++col[i];
        }
    }
    for (long long want : needed)
        if (by_norm.find(want) == by_norm.end()) return std::nullopt;

    std::vector<const std::vector<long long>*> chosen(n, nullptr);
    auto dfs = [&](auto&& self, int j) -> bool {
        if (j == n) {
            IntMatrix p(n, std::vector<long long>(n));
            for (int col = 0; col < n; ++col)
                for (int row = 0; row < n; ++row) p[row][col] = (*chosen[col])[row];
            const long long dp = det_int(p);
            if (dp != 1 && dp != -1) return false;
            return true;
        }
        for (const auto& cand : by_norm[g2.at(j, j)]) {
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                ok = detail::column_pairing(g1, *chosen[i], cand) == g2.at(i, j);
            if (!ok) continue;
            chosen[j] = &cand;
            if (self(self, j + 1)) return true;
        }
        chosen[j] = nullptr;
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    IntMatrix p(n, std::vector<long long>(n));
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) p[row][col] = (*chosen[col])[row];
    return p;
}

} // namespace qhpp
