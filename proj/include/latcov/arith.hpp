#pragma once

/**
 * @file arith.hpp
 * @brief Arithmetic functions behind lattice coverings of Z^2.
 *
 * psi(N) counts the points of the projective line over Z/NZ, which is also
 * the number of cocyclic sublattices of index N. G is the additive function
 * with G(p^e) = e(p-1) + 1 that bounds the size of an irredundant covering
 * from below. Weights are exact rationals; nothing here touches floating
 * point.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace latcov {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Non-negative remainder of a modulo n (n > 0).
constexpr Int mod_floor(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

/// One prime power p^e in a factorization.
struct PrimePower {
    Int prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
    std::vector<PrimePower> entries;

    Int value() const {
        Int v = 1;
        for (const auto& pp : entries)
            for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
        return v;
    }

    /// Exponent of p in the factorization (0 when p does not divide).
    int order(Int p) const {
        for (const auto& pp : entries)
            if (pp.prime == p) return pp.exponent;
        return 0;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

namespace detail {
inline void require_positive(Int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}
}  // namespace detail

/// Trial division.
inline Factorization factorize(Int n) {
    detail::require_positive(n, "factorize");
    Factorization f;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.entries.push_back({p, e});
    }
    if (n > 1) f.entries.push_back({n, 1});
    return f;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// True when n = p^e with e >= 1.
inline bool is_prime_power(Int n) {
    return n >= 2 && factorize(n).entries.size() == 1;
}

/// Sorted list of all positive divisors.
inline std::vector<Int> divisors(Int n) {
    detail::require_positive(n, "divisors");
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// psi(N) = N * prod_{p | N} (1 + 1/p).
inline Int psi(Int n) {
    detail::require_positive(n, "psi");
    Int r = 1;
    for (const auto& [p, e] : factorize(n).entries) {
        Int pe1 = 1;
        for (int i = 1; i < e; ++i) pe1 *= p;
        r *= pe1 * (p + 1);
    }
    return r;
}

/// G(p^e) = e(p-1) + 1, extended additively; G(1) = 0.
inline Int big_g(Int n) {
    detail::require_positive(n, "big_g");
    Int g = 0;
    for (const auto& [p, e] : factorize(n).entries) g += e * (p - 1) + 1;
    return g;
}

/// Totally additive F with F(p) = p - 1.
inline Int big_f(Int n) {
    detail::require_positive(n, "big_f");
    Int f = 0;
    for (const auto& [p, e] : factorize(n).entries) f += e * (p - 1);
    return f;
}

/// Number of distinct prime factors.
inline Int omega(Int n) {
    detail::require_positive(n, "omega");
    return static_cast<Int>(factorize(n).entries.size());
}

/// G(m) + G(n) == G(lcm) + G(gcd). Always true; kept as a test hook.
inline bool g_lcm_gcd_identity_check(Int m, Int n) {
    return big_g(m) + big_g(n) == big_g(std::lcm(m, n)) + big_g(std::gcd(m, n));
}

/**
 * All N with psi(N) = m.
 *
 * A prime p can divide N only if p + 1 | m, and p^e | N forces
 * p^(e-1) | m; the search walks those candidates in increasing order.
 */
inline std::set<Int> psi_preimages(Int m) {
    std::set<Int> out;
    if (m < 1) return out;
    std::vector<Int> primes;
    for (Int p = 2; p + 1 <= m; ++p)
        if (m % (p + 1) == 0 && is_prime(p)) primes.push_back(p);

    auto rec = [&](auto&& self, std::size_t i, Int remaining, Int n) -> void {
        if (remaining == 1) out.insert(n);
        for (std::size_t j = i; j < primes.size(); ++j) {
            const Int p = primes[j];
            if (remaining % (p + 1) != 0) continue;
            Int rem = remaining / (p + 1);
            Int pn = n * p;
            while (true) {
                self(self, j + 1, rem, pn);
                if (rem % p != 0) break;
                rem /= p;
                pn *= p;
            }
        }
    };
    rec(rec, 0, m, 1);
    return out;
}

/// A multiset of positive integers, stored sorted ascending.
using Multiset = std::vector<Int>;

/**
 * All multisets {M_1..M_n} of positive integers with sum 1/M_i = target.
 *
 * The smallest element M satisfies 1/target < M <= n/target when n >= 2
 * (and M = 1/target when n = 1), so elements are generated in
 * non-decreasing order with that bound at each level.
 */
inline std::set<Multiset> unit_fraction_solutions(Int n, Rational target) {
    std::set<Multiset> out;
    if (n < 1 || target <= 0) return out;
    Multiset cur;
    auto rec = [&](auto&& self, Int slots, Rational t, Int lo) -> void {
        if (slots == 1) {
            if (t.numerator() == 1 && t.denominator() >= lo) {
                cur.push_back(t.denominator());
                out.insert(cur);
                cur.pop_back();
            }
            return;
        }
        // 1/t < M <= slots/t, with M >= lo for non-decreasing order.
        const Int strict_lower = t.denominator() / t.numerator() + 1;
        const Int upper = (slots * t.denominator()) / t.numerator();
        for (Int m = std::max(lo, strict_lower); m <= upper; ++m) {
            cur.push_back(m);
            self(self, slots - 1, t - Rational(1, m), m);
            cur.pop_back();
        }
    };
    rec(rec, n, target, 1);
    return out;
}

/**
 * All index multisets {N_1..N_n} with sum 1/psi(N_i) = 1.
 *
 * With nontrivial set, every N_i must be >= 2 (so the trivial covering's
 * {1} is excluded).
 */
inline std::set<Multiset> solve_weight_equation(Int n, bool nontrivial) {
    std::set<Multiset> out;
    for (const auto& psis : unit_fraction_solutions(n, Rational(1))) {
        std::vector<std::vector<Int>> choices;
        bool feasible = true;
        for (Int m : psis) {
            auto pre = psi_preimages(m);
            std::vector<Int> c;
            for (Int x : pre)
                if (!nontrivial || x >= 2) c.push_back(x);
            if (c.empty()) {
                feasible = false;
                break;
            }
            choices.push_back(std::move(c));
        }
        if (!feasible) continue;
        Multiset pick(choices.size());
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == choices.size()) {
                Multiset s = pick;
                std::sort(s.begin(), s.end());
                out.insert(std::move(s));
                return;
            }
            for (Int x : choices[i]) {
                pick[i] = x;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// True when some pair of entries is coprime (two 1s count as coprime).
inline bool has_coprime_pair(const Multiset& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (std::gcd(s[i], s[j]) == 1) return true;
    return false;
}

/// Extended Euclid: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        const Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

/// Solves x = r1 (mod n1), x = r2 (mod n2) modulo lcm(n1, n2). Throws if the residues disagree mod gcd.
inline Int crt_pair(Int r1, Int n1, Int r2, Int n2) {
    Int s, t;
    const Int g = ext_gcd(n1, n2, s, t);
    if (mod_floor(r2 - r1, g) != 0) throw std::logic_error("crt_pair: incompatible residues");
    const Int l = n1 / g * n2;
    // x = r1 + n1 * k, with n1 k = r2 - r1 (mod n2)
    const Int m2 = n2 / g;
    const Int k = m2 == 1 ? 0 : mod_floor(mod_floor((r2 - r1) / g, m2) * mod_floor(s, m2), m2);
    return mod_floor(r1 + n1 * k, l);
}

}  // namespace latcov
