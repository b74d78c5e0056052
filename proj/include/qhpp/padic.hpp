#pragma once

// Local invariants of rational quadratic forms: square classes, Hilbert
// symbols at every place of Q, and epsilon (Hasse) invariants of diagonal
// forms. All arithmetic is exact; numbers stay tiny (rank <= 10 lattices).

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "gram.hpp"

namespace qhpp {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// prime -> exponent of |n|, trial division
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    if (n < 0) n = -n;
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// A nonzero rational modulo nonzero rational squares, stored as the canonical
// squarefree integer representative (sign preserved).
class SquareClass {
public:
    explicit SquareClass(long long squarefree_value) : v_(squarefree_value) {
        if (v_ == 0) throw std::invalid_argument("square class of zero");
        for (const auto& [p, e] : factorize(v_))
            if (e > 1) throw std::invalid_argument("value is not squarefree");
    }

    long long value() const { return v_; }

    SquareClass operator*(const SquareClass& o) const;

    bool operator==(const SquareClass& o) const { return v_ == o.v_; }
    bool operator!=(const SquareClass& o) const { return v_ != o.v_; }

private:
    long long v_;
};

// Squarefree representative of num/den modulo squares; num/den ~ num*den.
inline SquareClass square_class(long long num, long long den = 1) {
    if (num == 0 || den == 0) throw std::invalid_argument("square class of zero");
    const __int128 prod = static_cast<__int128>(num) * den;
    long long sf = prod < 0 ? -1 : 1;
    long long mag = static_cast<long long>(prod < 0 ? -prod : prod);
    for (const auto& [p, e] : factorize(mag))
        if (e % 2 == 1) sf *= p;
    return SquareClass(sf);
}

inline SquareClass square_class(const Rational& x) {
    return square_class(x.numerator(), x.denominator());
}

inline SquareClass SquareClass::operator*(const SquareClass& o) const {
    return square_class(v_, o.v_);
}

// A place of Q: a finite prime (checked) or the real place.
class Place {
public:
    static Place finite(long long p) {
        if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
        return Place(p);
    }
    static Place infinite() { return Place(0); }

    bool is_infinite() const { return p_ == 0; }
    long long prime() const {
        if (is_infinite()) throw std::logic_error("prime() at the real place");
        return p_;
    }

    bool operator==(const Place& o) const { return p_ == o.p_; }
    bool operator!=(const Place& o) const { return p_ != o.p_; }

private:
    explicit Place(long long p) : p_(p) {}
    long long p_; // 0 encodes the real place
};

// (a|p) for odd prime p and a coprime to p, by modular exponentiation.
inline int legendre_symbol(long long a, long long p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre_symbol needs an odd prime");
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument("legendre_symbol of a multiple of p");
    unsigned long long base = static_cast<unsigned long long>(r), acc = 1;
    unsigned long long e = static_cast<unsigned long long>((p - 1) / 2);
    const unsigned long long mod = static_cast<unsigned long long>(p);
    while (e > 0) {
        if (e & 1) acc = static_cast<unsigned long long>((static_cast<unsigned __int128>(acc) * base) % mod);
        base = static_cast<unsigned long long>((static_cast<unsigned __int128>(base) * base) % mod);
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

namespace detail {

// split a squarefree integer as p^alpha * unit (alpha in {0,1})
inline void split_at(long long sf, long long p, int& alpha, long long& unit) {
    if (sf % p == 0) {
        alpha = 1;
        unit = sf / p;
    } else {
        alpha = 0;
        unit = sf;
    }
}

inline int mod2_eps(long long u) { // (u-1)/2 mod 2 for odd u
    long long r = u % 4;
    if (r < 0) r += 4;
    return r == 3 ? 1 : 0;
}

inline int mod2_omega(long long u) { // (u^2-1)/8 mod 2 for odd u
    long long r = u % 8;
    if (r < 0) r += 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace detail

// Hilbert symbol (a,b)_v in {+1,-1}. Closed formulas:
//   odd p, a = p^alpha u, b = p^beta v:
//     (-1)^(alpha beta (p-1)/2) * (u|p)^beta * (v|p)^alpha
//   p = 2: (-1)^(eps(u)eps(v) + alpha omega(v) + beta omega(u))
//   real place: -1 iff a < 0 and b < 0.
inline int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v) {
    if (v.is_infinite()) return (a.value() < 0 && b.value() < 0) ? -1 : 1;
    const long long p = v.prime();
    int alpha, beta;
    long long u, w;
    detail::split_at(a.value(), p, alpha, u);
    detail::split_at(b.value(), p, beta, w);
    if (p == 2) {
        const int exp = detail::mod2_eps(u) * detail::mod2_eps(w) +
                        alpha * detail::mod2_omega(w) + beta * detail::mod2_omega(u);
        return exp % 2 == 0 ? 1 : -1;
    }
    int sym = 1;
    if (alpha * beta != 0 && ((p - 1) / 2) % 2 == 1) sym = -sym;
    if (beta != 0) sym *= legendre_symbol(u, p);
    if (alpha != 0) sym *= legendre_symbol(w, p);
    return sym;
}

inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    return hilbert_symbol(square_class(a), square_class(b), v);
}

inline int hilbert_symbol(long long a, long long b, const Place& v) {
    return hilbert_symbol(square_class(a), square_class(b), v);
}

// {2} together with every odd prime dividing a numerator or denominator of
// the form; at any odd prime outside this set all pairwise symbols are +1.
inline std::vector<long long> relevant_primes(const DiagonalForm& d) {
    std::set<long long> primes{2};
    for (const Rational& x : d) {
        if (x == 0) throw std::invalid_argument("diagonal form with zero entry");
        for (const auto& [p, e] : factorize(x.numerator())) primes.insert(p);
        for (const auto& [p, e] : factorize(x.denominator())) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

// Hasse invariant: product of (d_i, d_j)_v over i < j; +1 for rank <= 1.
inline int epsilon_invariant(const DiagonalForm& d, const Place& v) {
    std::vector<SquareClass> cls;
    cls.reserve(d.size());
    for (const Rational& x : d) cls.push_back(square_class(x));
    int eps = 1;
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            eps *= hilbert_symbol(cls[i], cls[j], v);
    return eps;
}

inline int epsilon_invariant(const GramMatrix& g, const Place& v) {
    return epsilon_invariant(diagonalize(g), v);
}

// Rank, discriminant class, and epsilon at every relevant finite prime plus
// the real place. p = 2 is always listed; an omitted odd prime has eps = +1.
struct LocalInvariantProfile {
    int rank = 0;
    SquareClass disc{1};
    std::vector<std::pair<Place, int>> epsilons; // finite places ascending, then the real place

    int epsilon_at(const Place& v) const {
        for (const auto& [place, eps] : epsilons)
            if (place == v) return eps;
        if (v.is_infinite())
            throw std::logic_error("profile is missing the real place");
        return 1;
    }
};

inline LocalInvariantProfile invariant_profile(const GramMatrix& g) {
    const long long dg = det(g);
    if (dg == 0) throw singular_error("invariant_profile: matrix is singular");
    LocalInvariantProfile prof;
    prof.rank = g.rank();
    prof.disc = square_class(dg);
    const DiagonalForm d = diagonalize(g);
    for (long long p : relevant_primes(d)) {
        const Place v = Place::finite(p);
        prof.epsilons.emplace_back(v, epsilon_invariant(d, v));
    }
    prof.epsilons.emplace_back(Place::infinite(), epsilon_invariant(d, Place::infinite()));
    return prof;
}

} // namespace qhpp
