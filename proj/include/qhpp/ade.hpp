#pragma once

// ADE singularity types: irreducible root-lattice components A_n, D_n, E_n
// and finite multisets of them, with the canonical "2A3+A2+A1" string form.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhpp {

// Thrown by the type-string, graph and certificate parsers. The CLI maps it
// to its dedicated exit code.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computed total contradicts a cross-checked invariant.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown by diagonalize and friends on det = 0 input.
class singular_error : public std::invalid_argument {
public:
    explicit singular_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class AdeFamily { A, D, E };

inline char family_letter(AdeFamily f) {
    switch (f) {
        case AdeFamily::A: return 'A';
        case AdeFamily::D: return 'D';
        case AdeFamily::E: return 'E';
    }
    return '?';
}

// One irreducible component. Valid ranks: A_n n>=1, D_n n>=4, E_n n in {6,7,8}.
struct AdeComponent {
    AdeFamily family;
    int rank;

    AdeComponent(AdeFamily f, int r) : family(f), rank(r) {
        const bool ok = (f == AdeFamily::A && r >= 1) ||
                        (f == AdeFamily::D && r >= 4) ||
                        (f == AdeFamily::E && r >= 6 && r <= 8);
        if (!ok)
            throw std::invalid_argument("invalid ADE component " +
                                        std::string(1, family_letter(f)) + std::to_string(r));
    }

    bool operator==(const AdeComponent& o) const { return family == o.family && rank == o.rank; }
    bool operator!=(const AdeComponent& o) const { return !(*this == o); }

    std::string str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

// Canonical component order: rank descending, then family descending with
// A < D < E (so D4 sorts before A4, E6 before D6).
inline bool canonical_before(const AdeComponent& a, const AdeComponent& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return static_cast<int>(a.family) > static_cast<int>(b.family);
}

// A multiset of components, kept in canonical order so equality and rendering
// are decidable by plain comparison.
class AdeType {
public:
    AdeType() = default;

    explicit AdeType(std::vector<AdeComponent> comps) : comps_(std::move(comps)) {
        std::sort(comps_.begin(), comps_.end(), canonical_before);
    }

    const std::vector<AdeComponent>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    int summands() const { return static_cast<int>(comps_.size()); }

    int total_rank() const {
        int r = 0;
        for (const auto& c : comps_) r += c.rank;
        return r;
    }

    bool operator==(const AdeType& o) const { return comps_ == o.comps_; }
    bool operator!=(const AdeType& o) const { return !(*this == o); }

    bool operator<(const AdeType& o) const {
        return std::lexicographical_compare(comps_.begin(), comps_.end(),
                                            o.comps_.begin(), o.comps_.end(), canonical_before);
    }

    // Canonical rendering, e.g. {A3,A3,A1,A1,A1} -> "2A3+3A1".
    std::string str() const {
        std::string out;
        std::size_t i = 0;
        while (i < comps_.size()) {
            std::size_t j = i;
            while (j < comps_.size() && comps_[j] == comps_[i]) ++j;
            if (!out.empty()) out += '+';
            const std::size_t mult = j - i;
            if (mult > 1) out += std::to_string(mult);
            out += comps_[i].str();
            i = j;
        }
        return out;
    }

private:
    std::vector<AdeComponent> comps_;
};

// Parses the type-string grammar TYPE := TERM ("+" TERM)*,
// TERM := [multiplicity] FAMILY RANK. ASCII only, whitespace forbidden,
// omitted multiplicity means 1. Accepts non-canonical input ("A1+A3+A3");
// rendering canonicalizes.
inline AdeType parse_type(const std::string& s) {
    if (s.empty()) throw parse_error("empty type string");

    // guards against absurd numerals, not a semantic limit
    constexpr long kNumeralCap = 1024;

    std::vector<AdeComponent> comps;
    std::size_t pos = 0;
    while (true) {
        long mult = 1;
        if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            mult = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                mult = mult * 10 + (s[pos] - '0');
                if (mult > kNumeralCap) throw parse_error("multiplicity out of range in '" + s + "'");
                ++pos;
            }
            if (mult == 0) throw parse_error("zero multiplicity in '" + s + "'");
        }
        if (pos >= s.size()) throw parse_error("missing family letter in '" + s + "'");
        AdeFamily fam;
        switch (s[pos]) {
            case 'A': fam = AdeFamily::A; break;
            case 'D': fam = AdeFamily::D; break;
            case 'E': fam = AdeFamily::E; break;
            default: throw parse_error(std::string("bad family letter '") + s[pos] + "' in '" + s + "'");
        }
        ++pos;
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
            throw parse_error("missing rank after family letter in '" + s + "'");
        long rank = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            rank = rank * 10 + (s[pos] - '0');
            if (rank > kNumeralCap) throw parse_error("rank out of range in '" + s + "'");
            ++pos;
        }
        if (fam == AdeFamily::A && rank < 1) throw parse_error("A-rank must be >= 1 in '" + s + "'");
        if (fam == AdeFamily::D && rank < 4) throw parse_error("D-rank must be >= 4 in '" + s + "'");
        if (fam == AdeFamily::E && (rank < 6 || rank > 8))
            throw parse_error("E-rank must be 6, 7 or 8 in '" + s + "'");
        for (long m = 0; m < mult; ++m) comps.emplace_back(fam, static_cast<int>(rank));

        if (pos == s.size()) break;
        if (s[pos] != '+') throw parse_error(std::string("unexpected character '") + s[pos] + "' in '" + s + "'");
        ++pos;
        if (pos == s.size()) throw parse_error("trailing '+' in '" + s + "'");
    }
    return AdeType(std::move(comps));
}

} // namespace qhpp
