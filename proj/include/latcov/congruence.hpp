#pragma once

/**
 * @file congruence.hpp
 * @brief Classical covering systems of residue classes R(a;N) = a + NZ.
 *
 * All predicates scan one period [0, lcm) of the moduli.
 */

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"

namespace latcov {

struct ResidueClass {
    Int a = 0;  ///< in [0, n)
    Int n = 1;

    /// R(a mod n; n).
    static ResidueClass make(Int a, Int n) {
        detail::require_positive(n, "ResidueClass::make");
        return ResidueClass{mod_floor(a, n), n};
    }

    bool contains(Int x) const { return mod_floor(x - a, n) == 0; }

    /// Sorted by modulus, then residue.
    friend auto operator<=>(const ResidueClass& l, const ResidueClass& r) {
        return std::tie(l.n, l.a) <=> std::tie(r.n, r.a);
    }
    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ResidueClass& r) { return os << "R(" << r.a << ";" << r.n << ")"; }

class CongruenceCovering {
public:
    CongruenceCovering() = default;

    /// Sorts; throws std::invalid_argument on duplicates.
    explicit CongruenceCovering(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
        std::sort(classes_.begin(), classes_.end());
        if (std::adjacent_find(classes_.begin(), classes_.end()) != classes_.end())
            throw std::invalid_argument("CongruenceCovering: duplicate class");
        for (const auto& c : classes_) {
            lcm_ = std::lcm(lcm_, c.n);
            weight_ += Rational(1, c.n);
        }
    }

    const std::vector<ResidueClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }
    const ResidueClass& operator[](std::size_t i) const { return classes_[i]; }
    Int lcm() const { return lcm_; }
    /// Sum of 1/N_i.
    Rational weight() const { return weight_; }

    friend bool operator==(const CongruenceCovering& l, const CongruenceCovering& r) { return l.classes_ == r.classes_; }

private:
    std::vector<ResidueClass> classes_;
    Int lcm_ = 1;
    Rational weight_ = 0;
};

/// All N classes modulo N.
inline CongruenceCovering full_congruence_covering(Int n) {
    std::vector<ResidueClass> cs;
    for (Int a = 0; a < n; ++a) cs.push_back({a, n});
    return CongruenceCovering(std::move(cs));
}

namespace detail {

/// Number of classes containing each residue of [0, lcm).
inline std::vector<int> class_counts(const CongruenceCovering& c) {
    std::vector<int> cnt(static_cast<std::size_t>(c.lcm()), 0);
    for (const auto& r : c)
        for (Int x = r.a; x < c.lcm(); x += r.n) ++cnt[static_cast<std::size_t>(x)];
    return cnt;
}

}  // namespace detail

inline bool cc_is_covering(const CongruenceCovering& c) {
    if (c.size() == 0) return false;
    const auto cnt = detail::class_counts(c);
    return std::all_of(cnt.begin(), cnt.end(), [](int k) { return k > 0; });
}

/**
 * Largest modulus D (N | D | lcm) such that R(a;N) may shrink to the class
 * mod D through its uniquely owned residues while keeping the covering.
 * Returns 0 when the class owns no residue (it is redundant).
 */
inline Int cc_shrink_modulus(const CongruenceCovering& c, std::size_t i) {
    const auto cnt = detail::class_counts(c);
    const auto& r = c[i];
    Int first = -1;
    Int d = c.lcm();
    for (Int x = r.a; x < c.lcm(); x += r.n) {
        if (cnt[static_cast<std::size_t>(x)] != 1) continue;
        if (first < 0)
            first = x;
        else
            d = std::gcd(d, x - first);
    }
    return first < 0 ? 0 : d;
}

/// Covering, and no class can be dropped (the older sense of "minimal").
inline bool cc_is_irredundant(const CongruenceCovering& c) {
    if (!cc_is_covering(c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (cc_shrink_modulus(c, i) == 0) return false;
    return true;
}

/// Covering, and no class can be replaced by a strict subclass. Stronger
/// than irredundant: R(0;3) in R(0;2), R(0;3), R(1;6), R(5;6) owns only
/// 3 mod 6 and so shrinks to R(3;6).
inline bool cc_is_minimal(const CongruenceCovering& c) {
    if (!cc_is_covering(c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (cc_shrink_modulus(c, i) != c[i].n) return false;
    return true;
}

/// Covering with every integer in exactly one class (weight exactly 1).
inline bool cc_is_strongly_minimal(const CongruenceCovering& c) {
    if (c.size() == 0) return false;
    const auto cnt = detail::class_counts(c);
    return std::all_of(cnt.begin(), cnt.end(), [](int k) { return k == 1; }) && c.weight() == Rational(1);
}

/// Replaces R(a;N) by R(a + kN; qN) for 0 <= k < q. Any q >= 2 is allowed.
inline CongruenceCovering cc_refine(const CongruenceCovering& c, const ResidueClass& cls, Int q) {
    if (q < 2) throw std::invalid_argument("cc_refine: q must be >= 2");
    if (!std::binary_search(c.begin(), c.end(), cls)) throw std::invalid_argument("cc_refine: class not in covering");
    std::vector<ResidueClass> next;
    for (const auto& r : c)
        if (r != cls) next.push_back(r);
    for (Int k = 0; k < q; ++k) next.push_back({cls.a + k * cls.n, q * cls.n});
    return CongruenceCovering(std::move(next));
}

/// The right-hand side 1 + sum e_i (p_i - 1), from the factorization of the lcm.
inline Int cc_simpson_lower_bound(const CongruenceCovering& c) {
    Int bound = 1;
    for (const auto& [p, e] : factorize(c.lcm()).entries) bound += e * (p - 1);
    return bound;
}

/// |C| >= 1 + sum e_i (p_i - 1); holds for every irredundant covering system.
inline bool cc_simpson_bound(const CongruenceCovering& c) {
    return static_cast<Int>(c.size()) >= cc_simpson_lower_bound(c);
}

}  // namespace latcov
