#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive enumeration of minimal lattice coverings of a given size.
 *
 * For each admissible index lcm N the search works on P^1(Z/NZ). Every
 * cocyclic lattice of index M | N is the fibre over one point of P^1(Z/MZ),
 * stored as a bitset over P^1(Z/NZ). The search repeatedly takes the least
 * uncovered point and branches over the lattices containing it (one per
 * divisor M > 1 of N). Any irredundant covering can be reached this way,
 * because whichever member contains the least uncovered point is among the
 * branches. Results are canonical sorted id lists, so coverings reached
 * along different orders collapse.
 */

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "covering.hpp"

namespace latcov {

/**
 * Index lcms an irredundant covering of size n can have.
 *
 * Keeps N with G(N) <= n - 1. A prime power p^e is kept only when
 * n = 2 (mod p - 1) and n >= e(p - 1) + 2. N = 1 only for n = 1.
 */
inline std::vector<Int> candidate_lcms(Int n) {
    if (n < 1) return {};
    if (n == 1) return {1};
    std::vector<Int> primes;
    for (Int p = 2; p <= n - 1; ++p)
        if (is_prime(p)) primes.push_back(p);
    std::vector<Int> out;
    auto rec = [&](auto&& self, std::size_t i, Int value, Int g) -> void {
        if (value > 1) out.push_back(value);
        for (std::size_t j = i; j < primes.size(); ++j) {
            const Int p = primes[j];
            Int pe = p;
            for (Int e = 1; g + e * (p - 1) + 1 <= n - 1; ++e, pe *= p) self(self, j + 1, value * pe, g + e * (p - 1) + 1);
        }
    };
    rec(rec, 0, 1, 0);
    std::vector<Int> kept;
    for (Int v : out) {
        const auto f = factorize(v);
        if (f.entries.size() == 1) {
            const auto [p, e] = f.entries.front();
            if ((n - 2) % (p - 1) != 0 || n < e * (p - 1) + 2) continue;
        }
        kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

struct EnumerationOptions {
    bool only_strongly_minimal = false;
    /// Search only this lcm.
    std::optional<Int> fixed_lcm;
    /// 0 means std::thread::hardware_concurrency().
    unsigned workers = 0;
};

struct ReportRow {
    std::string label;
    std::size_t multiplicity = 0;
    bool strongly_minimal = false;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct EnumerationReport {
    Int size = 0;
    std::vector<ReportRow> rows;
    std::size_t total = 0;
    std::size_t total_strongly_minimal = 0;
    /// Every covering found, in canonical order.
    std::vector<Covering> coverings;
};

namespace detail {

/// Fixed-width bitset over the points of P^1(Z/NZ).
class PointBits {
public:
    PointBits() = default;
    explicit PointBits(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }

    std::vector<std::uint64_t> words_;
};

/// Everything the search needs about one lcm N.
class LcmSearch {
public:
    LcmSearch(Int n, Int size) : n_(n), size_(size), points_(cached_points(n)) {
        const std::size_t npts = points_.size();
        words_ = (npts + 63) / 64;
        for (const auto& p : points_) reps_.push_back(coprime_rep(p));
        branches_.assign(npts, {});
        for (Int m : divisors(n)) {
            if (m == 1) continue;
            const auto& sub = cached_points(m);
            const std::size_t base = lattices_.size();
            for (const auto& q : sub) {
                lattices_.emplace_back(q);
                fibers_.emplace_back(npts);
            }
            for (std::size_t i = 0; i < npts; ++i) {
                const auto r = reduce(points_[i], m);
                const auto pos = static_cast<std::size_t>(std::lower_bound(sub.begin(), sub.end(), r) - sub.begin());
                fibers_[base + pos].set(i);
                branches_[i].push_back(base + pos);
            }
            max_fiber_ = std::max<std::size_t>(max_fiber_, npts / static_cast<std::size_t>(psi(m)));
        }
    }

    /// Ids of lattices containing point 0: the top-level branches.
    const std::vector<std::size_t>& first_branches() const { return branches_.front(); }

    /// All coverings of lcm exactly N whose first chosen lattice is `first`.
    std::set<std::vector<std::size_t>> run_from(std::size_t first, bool only_strong) const {
        State st(size_, words_);
        std::set<std::vector<std::size_t>> found;
        push(st, 0, first);
        if (redundancy_free(st, 1)) dfs(st, 1, only_strong, found);
        return found;
    }

    const CocyclicLattice& lattice(std::size_t id) const { return lattices_[id]; }

private:
    struct State {
        State(Int size, std::size_t words)
            : chosen(static_cast<std::size_t>(size)),
              covered(static_cast<std::size_t>(size) + 1, std::vector<std::uint64_t>(words, 0)),
              multi(static_cast<std::size_t>(size) + 1, std::vector<std::uint64_t>(words, 0)) {}
        std::vector<std::size_t> chosen;
        // Per depth: points covered at least once / at least twice.
        std::vector<std::vector<std::uint64_t>> covered;
        std::vector<std::vector<std::uint64_t>> multi;
    };

    void push(State& st, std::size_t depth, std::size_t id) const {
        st.chosen[depth] = id;
        const auto& f = fibers_[id].words_;
        auto& cov = st.covered[depth + 1];
        auto& mul = st.multi[depth + 1];
        const auto& pc = st.covered[depth];
        const auto& pm = st.multi[depth];
        for (std::size_t w = 0; w < words_; ++w) {
            cov[w] = pc[w] | f[w];
            mul[w] = pm[w] | (pc[w] & f[w]);
        }
    }

    /// Every chosen lattice still owns a point no other chosen lattice covers.
    bool redundancy_free(const State& st, std::size_t depth) const {
        const auto& mul = st.multi[depth];
        for (std::size_t k = 0; k < depth; ++k) {
            const auto& f = fibers_[st.chosen[k]].words_;
            bool owns = false;
            for (std::size_t w = 0; w < words_ && !owns; ++w) owns = (f[w] & ~mul[w]) != 0;
            if (!owns) return false;
        }
        return true;
    }

    std::size_t uncovered_count(const std::vector<std::uint64_t>& cov) const {
        std::size_t c = 0;
        for (auto w : cov) c += static_cast<std::size_t>(std::popcount(w));
        return points_.size() - c;
    }

    std::optional<std::size_t> first_uncovered(const std::vector<std::uint64_t>& cov) const {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t inv = ~cov[w];
            if (w == words_ - 1 && points_.size() % 64 != 0) inv &= (std::uint64_t{1} << (points_.size() % 64)) - 1;
            if (inv) return w * 64 + static_cast<std::size_t>(std::countr_zero(inv));
        }
        return std::nullopt;
    }

    void dfs(State& st, std::size_t depth, bool only_strong, std::set<std::vector<std::size_t>>& found) const {
        const auto& cov = st.covered[depth];
        const auto x = first_uncovered(cov);
        const std::size_t remaining = static_cast<std::size_t>(size_) - depth;
        if (!x) {
            if (remaining == 0) accept(st, only_strong, found);
            return;
        }
        if (remaining == 0) return;
        // Each further lattice covers at most max_fiber_ new points; the
        // same bound read as weight says covered weight + remaining/3 >= 1.
        if (uncovered_count(cov) > remaining * max_fiber_) return;
        for (std::size_t id : branches_[*x]) {
            push(st, depth, id);
            if (!redundancy_free(st, depth + 1)) continue;
            dfs(st, depth + 1, only_strong, found);
        }
    }

    void accept(const State& st, bool only_strong, std::set<std::vector<std::size_t>>& found) const {
        const std::size_t k = static_cast<std::size_t>(size_);
        const auto& mul = st.multi[k];
        Int l = 1;
        for (std::size_t i = 0; i < k; ++i) l = std::lcm(l, lattices_[st.chosen[i]].index());
        if (l != n_) return;
        const bool strong = std::none_of(mul.begin(), mul.end(), [](std::uint64_t w) { return w != 0; });
        if (only_strong && !strong) return;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& f = fibers_[st.chosen[i]].words_;
            std::optional<Vec2> v0;
            Int d = n_;
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t own = f[w] & ~mul[w];
                while (own) {
                    const std::size_t pt = w * 64 + static_cast<std::size_t>(std::countr_zero(own));
                    own &= own - 1;
                    if (!v0)
                        v0 = reps_[pt];
                    else
                        d = std::gcd(d, wedge(*v0, reps_[pt]));
                }
            }
            if (d != lattices_[st.chosen[i]].index()) return;
        }
        std::vector<std::size_t> ids(st.chosen.begin(), st.chosen.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(ids.begin(), ids.end());
        found.insert(std::move(ids));
    }

    Int n_;
    Int size_;
    const std::vector<ProjPoint>& points_;
    std::size_t words_ = 0;
    std::size_t max_fiber_ = 0;
    std::vector<Vec2> reps_;
    std::vector<CocyclicLattice> lattices_;
    std::vector<PointBits> fibers_;
    std::vector<std::vector<std::size_t>> branches_;
};

inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace detail

/// All minimal coverings of exactly n lattices, unordered-set semantics (not up to symmetry).
inline std::vector<Covering> enumerate_minimal_coverings(Int n, const EnumerationOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("enumerate_minimal_coverings: size must be >= 1");
    std::vector<Int> lcms = opts.fixed_lcm ? std::vector<Int>{*opts.fixed_lcm} : candidate_lcms(n);
    std::set<Covering> all;
    if (n == 1) {
        if (!opts.fixed_lcm || *opts.fixed_lcm == 1) all.insert(Covering({CocyclicLattice::full()}));
        return {all.begin(), all.end()};
    }
    std::vector<std::unique_ptr<detail::LcmSearch>> searches;
    std::vector<std::pair<std::size_t, std::size_t>> tasks;  // (search, first branch id)
    for (Int lcm : lcms) {
        if (lcm <= 1) continue;
        searches.push_back(std::make_unique<detail::LcmSearch>(lcm, n));
        for (std::size_t id : searches.back()->first_branches()) tasks.emplace_back(searches.size() - 1, id);
    }
    std::vector<std::set<std::vector<std::size_t>>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++)
            results[t] = searches[tasks[t].first]->run_from(tasks[t].second, opts.only_strongly_minimal);
    };
    const unsigned nworkers = std::min<unsigned>(detail::resolve_workers(opts.workers),
                                                 static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (nworkers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto& s = *searches[tasks[t].first];
        for (const auto& ids : results[t]) {
            std::vector<CocyclicLattice> ls;
            for (std::size_t id : ids) ls.push_back(s.lattice(id));
            all.insert(Covering(std::move(ls)));
        }
    }
    return {all.begin(), all.end()};
}

/// Groups coverings by structure label and strong minimality.
inline EnumerationReport make_report(Int n, std::vector<Covering> coverings) {
    EnumerationReport rep;
    rep.size = n;
    std::map<std::pair<bool, std::string>, std::size_t> counts;
    for (const auto& c : coverings) {
        const bool strong = is_strongly_minimal(c);
        ++counts[{!strong, classify(c)}];
        ++rep.total;
        if (strong) ++rep.total_strongly_minimal;
    }
    for (const auto& [key, mult] : counts) rep.rows.push_back({key.second, mult, !key.first});
    rep.coverings = std::move(coverings);
    return rep;
}

/// enumerate_minimal_coverings followed by make_report.
inline EnumerationReport enumerate_minimal(Int n, const EnumerationOptions& opts = {}) {
    return make_report(n, enumerate_minimal_coverings(n, opts));
}

/// The three explicit families of minimal coverings with index lcm pq.
struct LcmPqFamilies {
    /// |C| = p + q + 1: one q-refinement of L(p) or one p-refinement of L(q). Strongly minimal.
    std::vector<Covering> refinements;
    /// |C| = p + q + 2: all but two of L(p), all but two of L(q), and the four meets of the dropped pairs.
    std::vector<Covering> drop_two;
    /// |C| = pq + 2: one lattice of index p, one of index q, and the pq lattices of index pq they miss.
    std::vector<Covering> one_each;
};

inline LcmPqFamilies lcm_pq_families(Int p, Int q) {
    if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("lcm_pq_families: arguments must be prime");
    if (p == q) throw std::invalid_argument("lcm_pq_families: primes must differ");
    LcmPqFamilies out;
    const Covering lp = full_covering(p);
    const Covering lq = full_covering(q);

    for (const auto& l : lp) out.refinements.push_back(p_refine(lp, l, q));
    for (const auto& l : lq) out.refinements.push_back(p_refine(lq, l, p));

    for (std::size_t a1 = 0; a1 < lp.size(); ++a1)
        for (std::size_t a2 = a1 + 1; a2 < lp.size(); ++a2)
            for (std::size_t b1 = 0; b1 < lq.size(); ++b1)
                for (std::size_t b2 = b1 + 1; b2 < lq.size(); ++b2) {
                    std::vector<CocyclicLattice> ls;
                    for (std::size_t i = 0; i < lp.size(); ++i)
                        if (i != a1 && i != a2) ls.push_back(lp[i]);
                    for (std::size_t j = 0; j < lq.size(); ++j)
                        if (j != b1 && j != b2) ls.push_back(lq[j]);
                    for (std::size_t a : {a1, a2})
                        for (std::size_t b : {b1, b2}) ls.push_back(*meet(lp[a], lq[b]));
                    out.drop_two.emplace_back(std::move(ls));
                }

    for (const auto& a : lp)
        for (const auto& b : lq) {
            std::vector<CocyclicLattice> ls{a, b};
            for (const auto& x : enumerate_points(p * q))
                if (reduce(x, p) != a.point() && reduce(x, q) != b.point()) ls.emplace_back(x);
            out.one_each.emplace_back(std::move(ls));
        }
    return out;
}

}  // namespace latcov
