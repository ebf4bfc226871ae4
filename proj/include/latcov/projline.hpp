#pragma once

/**
 * @file projline.hpp
 * @brief The projective line P^1(Z/NZ).
 *
 * A point (c:d)_N is a pair with gcd(c, d, N) = 1 modulo scaling by units of
 * Z/NZ. Points are always held in canonical form: the lexicographically
 * least pair in the unit orbit. For N = 1 the single point is (0,0).
 */

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace latcov {

/// An integer vector (x, y) in Z^2.
struct Vec2 {
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x << ',' << v.y << ')';
}

/// v1 ^ v2 = c1 d2 - c2 d1.
constexpr Int wedge(Vec2 a, Vec2 b) { return a.x * b.y - b.x * a.y; }

inline bool is_primitive(Vec2 v) { return std::gcd(v.x, v.y) == 1; }

namespace detail {

/// Units of Z/NZ in increasing order; {0} for N = 1. Cached per modulus.
inline const std::vector<Int>& units_mod(Int n) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<const std::vector<Int>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto v = std::make_unique<std::vector<Int>>();
    if (n == 1) {
        v->push_back(0);
    } else {
        for (Int u = 1; u < n; ++u)
            if (std::gcd(u, n) == 1) v->push_back(u);
    }
    return *cache.emplace(n, std::move(v)).first->second;
}

}  // namespace detail

class ProjPoint {
public:
    /// Canonical point of P^1(Z/NZ) represented by (c, d). Throws if gcd(c, d, N) != 1.
    static ProjPoint normalize(Int c, Int d, Int n) {
        detail::require_positive(n, "ProjPoint::normalize");
        if (n == 1) return ProjPoint(1, 0, 0);
        c = mod_floor(c, n);
        d = mod_floor(d, n);
        if (std::gcd(std::gcd(c, d), n) != 1)
            throw std::invalid_argument("ProjPoint::normalize: gcd(" + std::to_string(c) + "," + std::to_string(d) +
                                        "," + std::to_string(n) + ") != 1");
        Int best_c = c, best_d = d;
        for (Int u : detail::units_mod(n)) {
            const Int uc = (u * c) % n;
            const Int ud = (u * d) % n;
            if (uc < best_c || (uc == best_c && ud < best_d)) {
                best_c = uc;
                best_d = ud;
            }
        }
        return ProjPoint(n, best_c, best_d);
    }

    /// The unique point of P^1(Z/1Z).
    static ProjPoint trivial() { return ProjPoint(1, 0, 0); }

    Int modulus() const { return n_; }
    Int c() const { return c_; }
    Int d() const { return d_; }
    Vec2 pair() const { return {c_, d_}; }

    /// Ordered by modulus, then lexicographically on the canonical pair.
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

private:
    ProjPoint(Int n, Int c, Int d) : n_(n), c_(c), d_(d) {}

    Int n_;
    Int c_;
    Int d_;
};

inline std::string to_string(const ProjPoint& p) {
    return std::to_string(p.c()) + ":" + std::to_string(p.d()) + ";" + std::to_string(p.modulus());
}

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << to_string(p); }

inline ProjPoint normalize(Int c, Int d, Int n) { return ProjPoint::normalize(c, d, n); }

/// Cross-product test c1 d2 = c2 d1 (mod N). Throws on modulus mismatch.
inline bool equal(const ProjPoint& a, const ProjPoint& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("equal: modulus mismatch");
    return mod_floor(wedge(a.pair(), b.pair()), a.modulus()) == 0;
}

/// All psi(N) points of P^1(Z/NZ), in canonical order.
inline std::vector<ProjPoint> enumerate_points(Int n) {
    detail::require_positive(n, "enumerate_points");
    if (n == 1) return {ProjPoint::trivial()};
    // Pairs are visited in lex order, so the first unseen pair of each unit
    // orbit is its canonical representative.
    const auto& units = detail::units_mod(n);
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    std::vector<ProjPoint> out;
    for (Int c = 0; c < n; ++c) {
        for (Int d = 0; d < n; ++d) {
            if (seen[static_cast<std::size_t>(c * n + d)] || std::gcd(std::gcd(c, d), n) != 1) continue;
            for (Int u : units) seen[static_cast<std::size_t>((u * c) % n * n + (u * d) % n)] = true;
            out.push_back(ProjPoint::normalize(c, d, n));
        }
    }
    return out;
}

namespace detail {

/// enumerate_points(N), computed once per modulus.
inline const std::vector<ProjPoint>& cached_points(Int n) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<const std::vector<ProjPoint>>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto pts = std::make_unique<const std::vector<ProjPoint>>(enumerate_points(n));
    std::lock_guard lock(mu);
    return *cache.emplace(n, std::move(pts)).first->second;
}

}  // namespace detail

/// Image of p under P^1(Z/NZ) -> P^1(Z/MZ). Throws unless M | N.
inline ProjPoint reduce(const ProjPoint& p, Int m) {
    detail::require_positive(m, "reduce");
    if (p.modulus() % m != 0)
        throw std::invalid_argument("reduce: " + std::to_string(m) + " does not divide " + std::to_string(p.modulus()));
    if (m == p.modulus()) return p;
    return ProjPoint::normalize(p.c(), p.d(), m);
}

/**
 * A coprime integer pair reducing to p.
 *
 * Scans (c + tN, d + sN) for t, s >= 0 by increasing t + s, ties broken by
 * smaller t, and returns the first pair with gcd 1.
 */
inline Vec2 coprime_rep(const ProjPoint& p) {
    const Int n = p.modulus();
    for (Int k = 0;; ++k) {
        for (Int t = 0; t <= k; ++t) {
            const Vec2 v{p.c() + t * n, p.d() + (k - t) * n};
            if (std::gcd(v.x, v.y) == 1) return v;
        }
    }
}

/// Preimages of p in P^1(Z/qNZ): q of them if q | N, else q + 1. Throws unless q is prime.
inline std::vector<ProjPoint> lifts(const ProjPoint& p, Int q) {
    if (!is_prime(q)) throw std::invalid_argument("lifts: " + std::to_string(q) + " is not prime");
    const Int n = p.modulus();
    const Int qn = q * n;
    // Every preimage has a representative congruent to (c, d) mod N.
    std::set<ProjPoint> out;
    for (Int i = 0; i < q; ++i) {
        for (Int j = 0; j < q; ++j) {
            const Int c = p.c() + i * n;
            const Int d = p.d() + j * n;
            if (std::gcd(std::gcd(c, d), qn) != 1) continue;
            out.insert(ProjPoint::normalize(c, d, qn));
        }
    }
    return {out.begin(), out.end()};
}

/// All preimages of p in P^1(Z/NZ), by chaining prime lifts. Throws unless modulus(p) | N.
inline std::vector<ProjPoint> lifts_to(const ProjPoint& p, Int n) {
    detail::require_positive(n, "lifts_to");
    if (n % p.modulus() != 0)
        throw std::invalid_argument("lifts_to: " + std::to_string(p.modulus()) + " does not divide " +
                                    std::to_string(n));
    std::vector<ProjPoint> level{p};
    for (const auto& [q, e] : factorize(n / p.modulus()).entries) {
        for (int k = 0; k < e; ++k) {
            std::vector<ProjPoint> next;
            for (const auto& x : level) {
                auto l = lifts(x, q);
                next.insert(next.end(), l.begin(), l.end());
            }
            level = std::move(next);
        }
    }
    std::sort(level.begin(), level.end());
    return level;
}

/**
 * Common preimage of a and b in P^1(Z/lcm), if one exists.
 *
 * The points must agree in P^1(Z/gcd). Given that, a unit u coprime to N1
 * with u (c1, d1) = (c2, d2) mod gcd is found, and the integer CRT glues
 * u (c1, d1) mod N1 to (c2, d2) mod N2.
 */
inline std::optional<ProjPoint> crt_lift(const ProjPoint& a, const ProjPoint& b) {
    const Int n1 = a.modulus();
    const Int n2 = b.modulus();
    const Int g = std::gcd(n1, n2);
    const Int l = n1 / g * n2;
    if (reduce(a, g) != reduce(b, g)) return std::nullopt;
    const Vec2 v1 = coprime_rep(a);
    const Vec2 v2 = coprime_rep(b);
    Int u = 1;
    if (n1 > 1) {
        bool found = false;
        for (Int cand : detail::units_mod(n1)) {
            if (mod_floor(cand * v1.x - v2.x, g) == 0 && mod_floor(cand * v1.y - v2.y, g) == 0) {
                u = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("crt_lift: no unit matches at the gcd level");
    }
    const Int c = crt_pair(mod_floor(u * v1.x, n1), n1, mod_floor(v2.x, n2), n2);
    const Int d = crt_pair(mod_floor(u * v1.y, n1), n1, mod_floor(v2.y, n2), n2);
    return ProjPoint::normalize(c, d, l);
}

}  // namespace latcov
