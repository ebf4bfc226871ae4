#pragma once

/**
 * @file covering.hpp
 * @brief Finite sets of cocyclic lattices and the predicates on them.
 *
 * Every check reduces to P^1(Z/NZ) with N = lcm of the member indices: a
 * point of P^1(Z/NZ) lies in a member of index M exactly when its reduction
 * mod M is the member's point. Covering, irredundancy and the minimality
 * witness are all read off the resulting point-by-member incidence.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace latcov {

/// A canonically sorted, duplicate-free set of cocyclic lattices.
class Covering {
public:
    Covering() = default;

    /// Sorts the lattices; throws std::invalid_argument on duplicates.
    explicit Covering(std::vector<CocyclicLattice> lattices) : lattices_(std::move(lattices)) {
        std::sort(lattices_.begin(), lattices_.end());
        if (std::adjacent_find(lattices_.begin(), lattices_.end()) != lattices_.end())
            throw std::invalid_argument("Covering: duplicate lattice");
        for (const auto& l : lattices_) {
            lcm_ = std::lcm(lcm_, l.index());
            weight_ += latcov::weight(l);
        }
    }

    const std::vector<CocyclicLattice>& lattices() const { return lattices_; }
    std::size_t size() const { return lattices_.size(); }
    bool empty() const { return lattices_.empty(); }
    auto begin() const { return lattices_.begin(); }
    auto end() const { return lattices_.end(); }
    const CocyclicLattice& operator[](std::size_t i) const { return lattices_[i]; }

    /// lcm of the member indices (1 for the empty set).
    Int lcm() const { return lcm_; }
    /// Sum of 1/psi(index) over the members.
    Rational weight() const { return weight_; }

    bool contains(const CocyclicLattice& l) const { return std::binary_search(lattices_.begin(), lattices_.end(), l); }

    /// Sorted member indices.
    std::vector<Int> indices() const {
        std::vector<Int> out;
        for (const auto& l : lattices_) out.push_back(l.index());
        return out;
    }

    friend bool operator==(const Covering& a, const Covering& b) { return a.lattices_ == b.lattices_; }
    friend auto operator<=>(const Covering& a, const Covering& b) { return a.lattices_ <=> b.lattices_; }

private:
    std::vector<CocyclicLattice> lattices_;
    Int lcm_ = 1;
    Rational weight_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Covering& c) {
    os << '{';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
    return os << '}';
}

/// The full index-N covering: all psi(N) cocyclic lattices of index N.
inline Covering full_covering(Int n) {
    std::vector<CocyclicLattice> ls;
    for (const auto& p : enumerate_points(n)) ls.emplace_back(p);
    return Covering(std::move(ls));
}

namespace detail {

/// Which members contain each point of P^1(Z/NZ), N = lcm(C).
struct Incidence {
    Int n = 1;
    const std::vector<ProjPoint>* points = nullptr;
    std::vector<std::vector<bool>> member_has;  // [member][point]
    std::vector<int> count;                     // members containing each point

    explicit Incidence(const Covering& c) : n(c.lcm()), points(&cached_points(c.lcm())) {
        std::map<Int, std::vector<ProjPoint>> reduced;
        for (const auto& l : c) {
            auto& r = reduced[l.index()];
            if (!r.empty()) continue;
            r.reserve(points->size());
            for (const auto& p : *points) r.push_back(reduce(p, l.index()));
        }
        count.assign(points->size(), 0);
        member_has.reserve(c.size());
        for (const auto& l : c) {
            const auto& r = reduced[l.index()];
            std::vector<bool> has(points->size());
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (r[i] == l.point()) {
                    has[i] = true;
                    ++count[i];
                }
            }
            member_has.push_back(std::move(has));
        }
    }

    bool covers() const {
        return std::all_of(count.begin(), count.end(), [](int k) { return k > 0; });
    }

    /// Points lying in member m and no other member.
    std::vector<std::size_t> private_points(std::size_t m) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < count.size(); ++i)
            if (member_has[m][i] && count[i] == 1) out.push_back(i);
        return out;
    }
};

inline std::size_t member_position(const Covering& c, const CocyclicLattice& l) {
    auto it = std::lower_bound(c.begin(), c.end(), l);
    if (it == c.end() || *it != l) throw std::invalid_argument("lattice " + to_string(l) + " is not a member");
    return static_cast<std::size_t>(it - c.begin());
}

}  // namespace detail

/// Every point of P^1(Z/lcm) lies in some member.
inline bool is_covering(const Covering& c) {
    if (c.empty()) return false;
    return detail::Incidence(c).covers();
}

/**
 * Independent covering check on raw vectors.
 *
 * Walks every residue pair (x, y) in [0, bound)^2 with gcd(x, y, lcm) = 1,
 * lifts it to an actual primitive vector, and tests c y = d x (mod N)
 * against each member's defining congruence. Requires bound >= lcm(C).
 */
inline bool is_covering_bruteforce(const Covering& c, Int bound) {
    if (bound < c.lcm()) throw std::invalid_argument("is_covering_bruteforce: bound below lcm");
    if (c.empty()) return false;
    const Int n = c.lcm();
    for (Int x = 0; x < bound; ++x) {
        for (Int y = 0; y < bound; ++y) {
            if (std::gcd(std::gcd(x, y), n) != 1) continue;
            Vec2 v{x, y};
            for (Int s = 1; !is_primitive(v); ++s) {
                for (Int i = 0; i <= s; ++i) {
                    v = Vec2{x + i * n, y + (s - i) * n};
                    if (is_primitive(v)) break;
                }
            }
            const bool hit = std::any_of(c.begin(), c.end(), [&](const CocyclicLattice& l) {
                return mod_floor(l.point().c() * v.y - l.point().d() * v.x, l.index()) == 0;
            });
            if (!hit) return false;
        }
    }
    return true;
}

/// No member lies in the union of the others. Throws std::domain_error if C is not a covering.
inline bool is_irredundant(const Covering& c) {
    const detail::Incidence inc(c);
    if (c.empty() || !inc.covers()) throw std::domain_error("is_irredundant: not a covering");
    for (std::size_t m = 0; m < c.size(); ++m)
        if (inc.private_points(m).empty()) return false;
    return true;
}

/// Result of the minimality test for one member of an irredundant covering.
struct MinimalityWitness {
    CocyclicLattice target;
    /// Transversal vectors lying in target and in no other member.
    std::size_t s_size;
    /// gcd of N and the wedges of those vectors; index(target) | d | lcm(C).
    Int d;
    /// L(v;d): the smallest lattice that can replace target.
    CocyclicLattice replacement;

    bool minimal() const { return d == target.index(); }
};

namespace detail {

inline MinimalityWitness witness_from(const Covering& c, const Incidence& inc, std::size_t m) {
    const auto priv = inc.private_points(m);
    if (priv.empty())
        throw std::domain_error("minimality_witness: " + to_string(c[m]) + " has no private vectors (redundant)");
    const auto& pts = *inc.points;
    const Vec2 v = coprime_rep(pts[priv.front()]);
    Int d = inc.n;
    for (std::size_t i : priv) d = std::gcd(d, wedge(v, coprime_rep(pts[i])));
    return MinimalityWitness{c[m], priv.size(), d, CocyclicLattice::make(v.x, v.y, d)};
}

}  // namespace detail

/// Minimality witness for member l. Throws std::domain_error if l has no private vectors.
inline MinimalityWitness minimality_witness(const Covering& c, const CocyclicLattice& l) {
    const std::size_t m = detail::member_position(c, l);
    const detail::Incidence inc(c);
    if (!inc.covers()) throw std::domain_error("minimality_witness: not a covering");
    return detail::witness_from(c, inc, m);
}

/// Covering, irredundant, and no member can be shrunk.
inline bool is_minimal(const Covering& c) {
    if (c.empty()) return false;
    const detail::Incidence inc(c);
    if (!inc.covers()) return false;
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (inc.private_points(m).empty()) return false;
        if (!detail::witness_from(c, inc, m).minimal()) return false;
    }
    return true;
}

/// Covering with pairwise separated members.
inline bool is_strongly_minimal(const Covering& c) {
    if (!is_covering(c)) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!separated(c[i], c[j])) return false;
    return true;
}

/**
 * Shrinks non-minimal members until the covering is minimal.
 *
 * The canonically least non-minimal member is replaced by its witness
 * replacement at each step. Size and lcm are preserved.
 */
inline Covering minimise(const Covering& c) {
    if (!is_irredundant(c)) throw std::domain_error("minimise: covering is not irredundant");
    Covering cur = c;
    while (true) {
        const detail::Incidence inc(cur);
        std::optional<MinimalityWitness> w;
        for (std::size_t m = 0; m < cur.size() && !w; ++m) {
            auto wm = detail::witness_from(cur, inc, m);
            if (!wm.minimal()) w = wm;
        }
        if (!w) return cur;
        std::vector<CocyclicLattice> next;
        for (const auto& l : cur)
            next.push_back(l == w->target ? w->replacement : l);
        cur = Covering(std::move(next));
    }
}

/// Replaces member l by its q-descendants. Throws if l is not a member.
inline Covering p_refine(const Covering& c, const CocyclicLattice& l, Int q) {
    detail::member_position(c, l);
    std::vector<CocyclicLattice> next;
    for (const auto& m : c)
        if (m != l) next.push_back(m);
    for (const auto& d : p_descendants(l, q)) next.push_back(d);
    return Covering(std::move(next));
}

/// How a covering arises from Z^2 by successive p-refinements.
struct RefinementTree {
    CocyclicLattice lattice;
    /// Prime used to refine this node; 0 for a leaf.
    Int prime = 0;
    std::vector<RefinementTree> children;

    Int index() const { return lattice.index(); }
    bool is_leaf() const { return children.empty(); }
};

namespace detail {

inline std::optional<RefinementTree> refine_node(const CocyclicLattice& node, const std::vector<CocyclicLattice>& inside) {
    if (inside.empty()) return std::nullopt;
    if (inside.size() == 1 && inside.front() == node) return RefinementTree{node, 0, {}};
    Int ratio_gcd = 0;
    for (const auto& m : inside) {
        if (m == node) return std::nullopt;  // node overlaps a strictly smaller member
        ratio_gcd = std::gcd(ratio_gcd, m.index() / node.index());
    }
    for (const auto& [q, e] : factorize(ratio_gcd).entries) {
        (void)e;
        const auto desc = p_descendants(node, q);
        std::vector<std::vector<CocyclicLattice>> parts(desc.size());
        for (const auto& m : inside) {
            const CocyclicLattice up(reduce(m.point(), q * node.index()));
            const auto it = std::lower_bound(desc.begin(), desc.end(), up);
            parts[static_cast<std::size_t>(it - desc.begin())].push_back(m);
        }
        RefinementTree tree{node, q, {}};
        bool ok = true;
        for (std::size_t i = 0; i < desc.size() && ok; ++i) {
            auto child = refine_node(desc[i], parts[i]);
            if (child)
                tree.children.push_back(std::move(*child));
            else
                ok = false;
        }
        if (ok) return tree;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * A refinement tree from Z^2 to exactly the members of C, if one exists.
 *
 * Works top down: the members inside a node must all fall into the
 * q-descendants of that node for some prime q dividing every index ratio,
 * and each descendant's members must in turn be a refinement of it. Primes
 * are tried smallest first, so the result is deterministic. This decides
 * refinability for every lcm, not only prime powers.
 */
inline std::optional<RefinementTree> refinement_structure(const Covering& c) {
    return detail::refine_node(CocyclicLattice::full(), c.lattices());
}

namespace detail {

/// Order on subtrees used to sort siblings: index, leaves first, then children lexicographically.
inline std::strong_ordering compare_trees(const RefinementTree& a, const RefinementTree& b) {
    if (auto c = a.index() <=> b.index(); c != 0) return c;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    const std::size_t n = std::min(a.children.size(), b.children.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = compare_trees(a.children[i], b.children[i]); c != 0) return c;
    return a.children.size() <=> b.children.size();
}

inline RefinementTree sorted_tree(RefinementTree t) {
    for (auto& ch : t.children) ch = sorted_tree(std::move(ch));
    std::sort(t.children.begin(), t.children.end(),
              [](const RefinementTree& a, const RefinementTree& b) { return compare_trees(a, b) < 0; });
    return t;
}

inline void render(const RefinementTree& t, std::string& out) {
    if (t.is_leaf()) {
        out += std::to_string(t.index());
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ',';
        render(t.children[i], out);
    }
    out += ')';
}

}  // namespace detail

/// Bracketed index structure, e.g. "(2,2,(4,4))"; siblings sorted. A bare leaf renders as "(N)".
inline std::string tree_label(const RefinementTree& t) {
    if (t.is_leaf()) return "(" + std::to_string(t.index()) + ")";
    std::string out;
    detail::render(detail::sorted_tree(t), out);
    return out;
}

/// Tree label when C is a refinement of Z^2, otherwise the sorted flat index list.
inline std::string classify(const Covering& c) {
    if (auto t = refinement_structure(c)) return tree_label(*t);
    std::string out = "(";
    const auto idx = c.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + std::to_string(idx[i]);
    return out + ")";
}

/**
 * C(v;p^e): e successive p-refinements of Z^2, each applied to the member
 * containing v. Strongly minimal of size G(p^e) + 1.
 */
inline Covering simpson_covering(Vec2 v, Int p, int e) {
    if (!is_primitive(v)) throw std::invalid_argument("simpson_covering: vector is not primitive");
    if (!is_prime(p)) throw std::invalid_argument("simpson_covering: p is not prime");
    if (e < 1) throw std::invalid_argument("simpson_covering: e must be >= 1");
    Covering c({CocyclicLattice::full()});
    CocyclicLattice holder = CocyclicLattice::full();
    for (int k = 1; k <= e; ++k) {
        c = p_refine(c, holder, p);
        holder = CocyclicLattice::through(v, holder.index() * p);
    }
    return c;
}

/**
 * |{L in C : index(L) does not divide D}| >= 1 + G(lcm) - G(D).
 *
 * D must be a proper divisor of lcm(C) and C an irredundant covering;
 * violations throw. D = 1 gives |C| >= 1 + G(lcm).
 */
inline bool simpson_bound_holds(const Covering& c, Int d) {
    if (d < 1 || c.lcm() % d != 0 || d == c.lcm())
        throw std::invalid_argument("simpson_bound_holds: D must be a proper divisor of lcm(C)");
    if (!is_irredundant(c)) throw std::domain_error("simpson_bound_holds: covering is not irredundant");
    const auto outside = std::count_if(c.begin(), c.end(), [&](const CocyclicLattice& l) { return d % l.index() != 0; });
    return outside >= 1 + big_g(c.lcm()) - big_g(d);
}

/**
 * For each prime p with ord_p(lcm) = e >= 1, at least p members (e >= 2)
 * or p + 1 members (e = 1) have index divisible by p^e.
 */
inline bool max_exponent_multiplicity_holds(const Covering& c) {
    for (const auto& [p, e] : factorize(c.lcm()).entries) {
        Int pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        const auto hits = std::count_if(c.begin(), c.end(), [&](const CocyclicLattice& l) { return l.index() % pe == 0; });
        if (hits < (e >= 2 ? p : p + 1)) return false;
    }
    return true;
}

}  // namespace latcov
