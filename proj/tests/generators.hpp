#pragma once

// Seeded generators of coverings and non-coverings for property checks.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "latcov/latcov.hpp"
#include "oracle.hpp"

namespace gen {

using namespace latcov;

inline std::vector<CocyclicLattice> lattices_of_index(Int n) {
    std::vector<CocyclicLattice> out;
    for (const auto& p : enumerate_points(n)) out.emplace_back(p);
    return out;
}

inline std::vector<oracle::RawLattice> raw(const Covering& c) {
    std::vector<oracle::RawLattice> out;
    for (const auto& l : c) out.push_back({l.point().c(), l.point().d(), l.index()});
    return out;
}

/// All minimal coverings of sizes 1..max_size.
inline std::vector<Covering> minimal_corpus(Int max_size) {
    std::vector<Covering> out;
    for (Int n = 1; n <= max_size; ++n) {
        auto cs = enumerate_minimal_coverings(n);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

/// A refinement chain of random length from `start`, with primes drawn from {2, 3, 5}
/// and index lcm kept at or below max_lcm.
inline std::vector<Covering> refinement_chain(const Covering& start, std::mt19937_64& rng, int steps, Int max_lcm) {
    static constexpr Int primes[] = {2, 3, 5};
    std::vector<Covering> chain{start};
    for (int s = 0; s < steps; ++s) {
        const Covering& cur = chain.back();
        std::vector<std::pair<std::size_t, Int>> options;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (Int q : primes)
                if (std::lcm(cur.lcm(), q * cur[i].index()) <= max_lcm) {
                    // Skip when a descendant is already a member (possible once the covering is not minimal).
                    const auto desc = p_descendants(cur[i], q);
                    if (std::none_of(desc.begin(), desc.end(), [&](const CocyclicLattice& d) { return cur.contains(d); }))
                        options.emplace_back(i, q);
                }
        if (options.empty()) break;
        const auto [i, q] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        chain.push_back(p_refine(cur, cur[i], q));
    }
    return chain;
}

/// Random sets of lattices whose indices divide some N <= max_lcm that fail to cover.
inline std::vector<Covering> random_non_coverings(std::size_t count, Int max_lcm, std::mt19937_64& rng) {
    std::vector<Covering> out;
    std::uniform_int_distribution<Int> pick_n(2, max_lcm);
    while (out.size() < count) {
        const Int n = pick_n(rng);
        std::vector<CocyclicLattice> pool;
        for (Int m : divisors(n))
            if (m > 1)
                for (const auto& l : lattices_of_index(m)) pool.push_back(l);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(pool.size(), 12))(rng);
        Covering c(std::vector<CocyclicLattice>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)));
        if (!is_covering(c)) out.push_back(std::move(c));
    }
    return out;
}

/// Coverings with lcm <= max_lcm: minimal ones, plus each padded with a random extra lattice.
inline std::vector<Covering> coverings_up_to_lcm(const std::vector<Covering>& corpus, Int max_lcm,
                                                 std::mt19937_64& rng) {
    std::vector<Covering> out;
    for (const auto& c : corpus) {
        if (c.lcm() > max_lcm) continue;
        out.push_back(c);
        const auto extra_pool = lattices_of_index(c.lcm() == 1 ? 2 : c.lcm());
        const auto& extra = extra_pool[std::uniform_int_distribution<std::size_t>(0, extra_pool.size() - 1)(rng)];
        if (c.contains(extra)) continue;
        auto ls = c.lattices();
        ls.push_back(extra);
        out.emplace_back(std::move(ls));
    }
    return out;
}

/**
 * Irredundant coverings that are not minimal: take a minimal covering and
 * swap one member for a proper cocyclic overlattice; keep the result when it
 * is still irredundant but no longer minimal.
 */
inline std::vector<Covering> irredundant_non_minimal(const std::vector<Covering>& corpus) {
    std::set<Covering> out;
    for (const auto& c : corpus)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (Int m : divisors(c[i].index())) {
                if (m == c[i].index() || m == 1) continue;
                const CocyclicLattice up(reduce(c[i].point(), m));
                if (c.contains(up)) continue;
                auto ls = c.lattices();
                ls[i] = up;
                Covering cand(std::move(ls));
                if (is_irredundant(cand) && !is_minimal(cand)) out.insert(std::move(cand));
            }
    return {out.begin(), out.end()};
}

}  // namespace gen
