#pragma once

/**
 * @file lattice.hpp
 * @brief Cocyclic sublattices L(c:d;N) = {(x,y) : c y = d x (mod N)} of Z^2.
 *
 * A cocyclic lattice of index N corresponds to exactly one point of
 * P^1(Z/NZ), so the (index, point) pair is the whole representation. The
 * basis is derived on demand.
 */

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "projline.hpp"

namespace latcov {

class CocyclicLattice {
public:
    explicit CocyclicLattice(ProjPoint point) : point_(point) {}

    /// L(c:d;N), normalizing (c, d).
    static CocyclicLattice make(Int c, Int d, Int n) { return CocyclicLattice(ProjPoint::normalize(c, d, n)); }

    /// Z^2 itself.
    static CocyclicLattice full() { return CocyclicLattice(ProjPoint::trivial()); }

    /// L(v;N) for a primitive v.
    static CocyclicLattice through(Vec2 v, Int n) {
        if (!is_primitive(v)) throw std::invalid_argument("CocyclicLattice::through: vector is not primitive");
        return make(v.x, v.y, n);
    }

    Int index() const { return point_.modulus(); }
    const ProjPoint& point() const { return point_; }

    /// Ordered by index, then by canonical point.
    friend auto operator<=>(const CocyclicLattice&, const CocyclicLattice&) = default;

private:
    ProjPoint point_;
};

inline std::string to_string(const CocyclicLattice& l) { return to_string(l.point()); }

inline std::ostream& operator<<(std::ostream& os, const CocyclicLattice& l) { return os << "L(" << l.point() << ")"; }

/// v in L iff rep ^ v = 0 (mod N), rep a coprime representative of the point.
inline bool contains_vector(const CocyclicLattice& l, Vec2 v) {
    return mod_floor(wedge(coprime_rep(l.point()), v), l.index()) == 0;
}

/// Rows {N(a,b), (c,d)} with ad - bc = 1; determinant N.
inline std::array<Vec2, 2> basis(const CocyclicLattice& l) {
    const Vec2 v = coprime_rep(l.point());
    // a d - b c = 1  <=>  d * a + c * (-b) = 1
    Int a = 0, mb = 0;
    ext_gcd(v.y, v.x, a, mb);
    const Int b = -mb;
    return {Vec2{l.index() * a, l.index() * b}, v};
}

/// inner is a sublattice of outer.
inline bool contains_lattice(const CocyclicLattice& outer, const CocyclicLattice& inner) {
    return inner.index() % outer.index() == 0 && reduce(inner.point(), outer.index()) == outer.point();
}

/// The intersection when it is cocyclic (index lcm); nullopt means the lattices are separated.
using MeetResult = std::optional<CocyclicLattice>;

inline MeetResult meet(const CocyclicLattice& a, const CocyclicLattice& b) {
    if (a == b) return a;
    auto p = crt_lift(a.point(), b.point());
    if (!p) return std::nullopt;
    return CocyclicLattice(*p);
}

inline bool separated(const CocyclicLattice& a, const CocyclicLattice& b) { return !meet(a, b).has_value(); }

/// Smallest cocyclic lattice containing every member; all members must share one index.
inline CocyclicLattice join(std::span<const CocyclicLattice> ls) {
    if (ls.empty()) throw std::invalid_argument("join: empty list");
    const Int n = ls.front().index();
    const Vec2 v1 = coprime_rep(ls.front().point());
    Int m = n;
    for (const auto& l : ls) {
        if (l.index() != n) throw std::invalid_argument("join: mixed indices");
        m = std::gcd(m, wedge(v1, coprime_rep(l.point())));
    }
    return CocyclicLattice::make(v1.x, v1.y, m);
}

/// The cocyclic sublattices of relative index q, one per lift of the point.
inline std::vector<CocyclicLattice> p_descendants(const CocyclicLattice& l, Int q) {
    std::vector<CocyclicLattice> out;
    for (const auto& p : lifts(l.point(), q)) out.emplace_back(p);
    return out;
}

/// 1/psi(N).
inline Rational weight(const CocyclicLattice& l) { return Rational(1, psi(l.index())); }

}  // namespace latcov
