#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "latcov/covering.hpp"
#include "latcov/io.hpp"
#include "oracle.hpp"

using namespace latcov;

namespace {

CocyclicLattice L(Int c, Int d, Int n) { return CocyclicLattice::make(c, d, n); }

Covering min_not_strong() {
    return Covering({L(1, 0, 2), L(1, 0, 3), L(0, 1, 3), L(1, 1, 6), L(-1, 1, 6), L(2, 1, 6), L(-2, 1, 6)});
}

Covering c6() { return Covering({L(0, 1, 2), L(1, 0, 2), L(0, 1, 3), L(1, 1, 6), L(5, 1, 6), L(1, 3, 6)}); }

Covering strong_not_refinement() {
    const std::vector<CocyclicLattice> big{L(0, 1, 6), L(1, 1, 10), L(-1, 1, 15)};
    std::vector<CocyclicLattice> ls = big;
    for (const auto& p : enumerate_points(30)) {
        const CocyclicLattice l(p);
        if (std::none_of(big.begin(), big.end(), [&](const CocyclicLattice& b) { return contains_lattice(b, l); }))
            ls.push_back(l);
    }
    return Covering(std::move(ls));
}

Covering size8_example() {
    return Covering({L(1, 1, 2), L(1, 2, 4), L(1, 0, 3), L(1, 1, 3), L(0, 1, 6), L(2, 1, 6), L(1, 8, 12), L(3, 4, 12)});
}

Covering union_l2_l3() {
    auto ls = full_covering(2).lattices();
    for (const auto& l : full_covering(3)) ls.push_back(l);
    return Covering(std::move(ls));
}

}  // namespace

TEST(CoveringType, CanonicalOrderAndCaches) {
    const Covering c({L(1, 1, 3), L(0, 1, 2), L(1, 0, 2)});
    EXPECT_EQ(c[0], L(0, 1, 2));
    EXPECT_EQ(c[2], L(1, 1, 3));
    EXPECT_EQ(c.lcm(), 6);
    EXPECT_EQ(c.weight(), Rational(1, 3) + Rational(1, 3) + Rational(1, 4));
    EXPECT_THROW(Covering({L(0, 1, 2), L(0, 1, 2)}), std::invalid_argument);
    EXPECT_EQ(full_covering(1).lattices(), std::vector<CocyclicLattice>{CocyclicLattice::full()});
}

TEST(IsCovering, Examples) {
    EXPECT_TRUE(is_covering(full_covering(2)));
    EXPECT_FALSE(is_covering(Covering({L(0, 1, 2), L(1, 0, 2)})));
    EXPECT_TRUE(is_covering(min_not_strong()));
    EXPECT_FALSE(is_covering(Covering()));
}

TEST(IsCoveringBruteforce, Examples) {
    EXPECT_TRUE(is_covering_bruteforce(full_covering(2), 2));
    EXPECT_TRUE(is_covering_bruteforce(Covering({CocyclicLattice::full()}), 1));
    EXPECT_FALSE(is_covering_bruteforce(Covering({L(0, 1, 3), L(1, 0, 3)}), 3));
    EXPECT_THROW(is_covering_bruteforce(full_covering(6), 5), std::invalid_argument);
}

TEST(IsCoveringBruteforce, AgreesOnCoveringsAndNonCoverings) {
    std::mt19937_64 rng(20240611);
    const auto corpus = gen::minimal_corpus(7);
    for (const auto& c : gen::coverings_up_to_lcm(corpus, 36, rng)) {
        ASSERT_TRUE(is_covering(c));
        ASSERT_TRUE(is_covering_bruteforce(c, c.lcm()));
        ASSERT_TRUE(oracle::covers(gen::raw(c), c.lcm()));
    }
    for (const auto& c : gen::random_non_coverings(300, 36, rng)) {
        ASSERT_FALSE(is_covering_bruteforce(c, c.lcm()));
        ASSERT_FALSE(oracle::covers(gen::raw(c), c.lcm()));
    }
}

TEST(IsIrredundant, Examples) {
    EXPECT_TRUE(is_irredundant(full_covering(2)));
    EXPECT_FALSE(is_irredundant(union_l2_l3()));
    EXPECT_TRUE(is_irredundant(min_not_strong()));
    EXPECT_THROW(is_irredundant(Covering({L(0, 1, 2)})), std::domain_error);
}

TEST(MinimalityWitness, Examples) {
    const auto w2 = minimality_witness(full_covering(2), L(1, 1, 2));
    EXPECT_EQ(w2.d, 2);
    EXPECT_EQ(w2.replacement, L(1, 1, 2));
    EXPECT_TRUE(w2.minimal());

    const auto w6 = minimality_witness(c6(), L(0, 1, 3));
    EXPECT_EQ(w6.d, 6);
    EXPECT_EQ(w6.replacement, L(3, 1, 6));
    EXPECT_FALSE(w6.minimal());
    EXPECT_GT(w6.s_size, 0u);

    EXPECT_EQ(minimality_witness(min_not_strong(), L(1, 0, 2)).d, 2);
    EXPECT_THROW(minimality_witness(union_l2_l3(), L(0, 1, 2)), std::domain_error);
    EXPECT_THROW(minimality_witness(full_covering(2), L(0, 1, 3)), std::invalid_argument);
}

TEST(MinimalityWitness, ReplacementStillCoversAndDividesLcm) {
    for (const auto& c : gen::irredundant_non_minimal(gen::minimal_corpus(7))) {
        for (const auto& l : c) {
            const auto w = minimality_witness(c, l);
            ASSERT_EQ(w.d % l.index(), 0);
            ASSERT_EQ(c.lcm() % w.d, 0);
            ASSERT_TRUE(contains_lattice(l, w.replacement));
            auto ls = c.lattices();
            std::replace(ls.begin(), ls.end(), l, w.replacement);
            if (w.replacement != l && !c.contains(w.replacement)) ASSERT_TRUE(is_covering(Covering(ls)));
        }
    }
}

TEST(IsMinimal, Examples) {
    EXPECT_TRUE(is_minimal(full_covering(3)));
    EXPECT_FALSE(is_minimal(c6()));
    EXPECT_FALSE(is_minimal(union_l2_l3()));
    EXPECT_TRUE(is_minimal(min_not_strong()));
    EXPECT_TRUE(is_minimal(size8_example()));
}

TEST(IsStronglyMinimal, Examples) {
    EXPECT_TRUE(is_strongly_minimal(full_covering(2)));
    EXPECT_FALSE(is_strongly_minimal(min_not_strong()));
    const auto big = strong_not_refinement();
    EXPECT_EQ(big.size(), 62u);
    EXPECT_TRUE(is_strongly_minimal(big));
    EXPECT_TRUE(is_minimal(big));
    EXPECT_FALSE(is_strongly_minimal(size8_example()));
}

TEST(IsStronglyMinimal, MatchesWeightOneAndOracle) {
    for (const auto& c : gen::minimal_corpus(7)) {
        ASSERT_GE(c.weight(), Rational(1));
        ASSERT_EQ(is_strongly_minimal(c), c.weight() == Rational(1));
        if (c.lcm() <= 36) ASSERT_EQ(is_strongly_minimal(c), oracle::pairwise_disjoint(gen::raw(c)));
    }
    const auto u = union_l2_l3();
    EXPECT_GT(u.weight(), Rational(1));
    EXPECT_FALSE(is_strongly_minimal(u));
}

TEST(IsMinimal, AgreesWithDefinitionOracle) {
    for (const auto& c : gen::minimal_corpus(6)) ASSERT_TRUE(oracle::is_minimal(gen::raw(c))) << c;
    for (const auto& c : gen::irredundant_non_minimal(gen::minimal_corpus(6)))
        if (c.lcm() <= 24) ASSERT_FALSE(oracle::is_minimal(gen::raw(c))) << c;
    EXPECT_TRUE(oracle::is_minimal(gen::raw(min_not_strong())));
    EXPECT_FALSE(oracle::is_minimal(gen::raw(c6())));
}

TEST(Minimise, Examples) {
    EXPECT_EQ(minimise(full_covering(2)), full_covering(2));
    const auto m = minimise(c6());
    EXPECT_EQ(m, Covering({L(0, 1, 2), L(1, 0, 2), L(3, 1, 6), L(1, 1, 6), L(5, 1, 6), L(1, 3, 6)}));
    EXPECT_TRUE(is_minimal(m));
    EXPECT_EQ(classify(m), "(2,2,(6,6,6,6))");
    EXPECT_EQ(minimise(min_not_strong()), min_not_strong());
    EXPECT_THROW(minimise(union_l2_l3()), std::domain_error);
}

TEST(Minimise, ProducesMinimalCoveringsOfSameShape) {
    const auto inputs = gen::irredundant_non_minimal(gen::minimal_corpus(7));
    ASSERT_GE(inputs.size(), 200u);
    for (const auto& c : inputs) {
        const auto m = minimise(c);
        ASSERT_TRUE(is_minimal(m)) << c;
        ASSERT_EQ(m.size(), c.size());
        ASSERT_EQ(m.lcm(), c.lcm());
        for (const auto& l : m)
            ASSERT_TRUE(std::any_of(c.begin(), c.end(), [&](const CocyclicLattice& o) { return contains_lattice(o, l); }));
    }
}

TEST(PRefine, Examples) {
    const Covering trivial({CocyclicLattice::full()});
    EXPECT_EQ(p_refine(trivial, CocyclicLattice::full(), 2), full_covering(2));
    EXPECT_EQ(classify(p_refine(full_covering(2), L(1, 0, 2), 3)), "(2,2,(6,6,6,6))");
    EXPECT_EQ(classify(p_refine(full_covering(2), L(0, 1, 2), 2)), "(2,2,(4,4))");
    EXPECT_THROW(p_refine(full_covering(2), L(0, 1, 3), 2), std::invalid_argument);
}

TEST(PRefine, PreservesCoveringWeightAndStrongMinimality) {
    std::mt19937_64 rng(7);
    const std::vector<Covering> starts{Covering({CocyclicLattice::full()}), full_covering(5), min_not_strong(),
                                       strong_not_refinement()};
    for (int round = 0; round < 100; ++round) {
        const auto& start = starts[static_cast<std::size_t>(round) % starts.size()];
        const auto chain = gen::refinement_chain(start, rng, 6, 720);
        for (const auto& c : chain) {
            ASSERT_TRUE(is_covering(c));
            ASSERT_EQ(c.weight(), start.weight());
            ASSERT_EQ(is_strongly_minimal(c), is_strongly_minimal(start));
        }
    }
}

TEST(RefinementStructure, Examples) {
    const auto t = refinement_structure(full_covering(2));
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->index(), 1);
    EXPECT_EQ(t->prime, 2);
    ASSERT_EQ(t->children.size(), 3u);
    for (const auto& ch : t->children) {
        EXPECT_TRUE(ch.is_leaf());
        EXPECT_EQ(ch.index(), 2);
    }
    EXPECT_FALSE(refinement_structure(min_not_strong()).has_value());
    EXPECT_FALSE(refinement_structure(strong_not_refinement()).has_value());
    EXPECT_EQ(classify(Covering({CocyclicLattice::full()})), "(1)");
}

TEST(RefinementStructure, TreesRebuildTheCovering) {
    // Re-running the refinements recorded in the tree must give back the covering.
    auto rebuild = [](auto&& self, const RefinementTree& t, std::vector<CocyclicLattice>& out) -> void {
        if (t.is_leaf()) {
            out.push_back(t.lattice);
            return;
        }
        std::vector<CocyclicLattice> kids;
        for (const auto& ch : t.children) kids.push_back(ch.lattice);
        std::sort(kids.begin(), kids.end());
        ASSERT_EQ(kids, p_descendants(t.lattice, t.prime));
        for (const auto& ch : t.children) self(self, ch, out);
    };
    for (const auto& c : gen::minimal_corpus(8)) {
        const auto t = refinement_structure(c);
        ASSERT_EQ(t.has_value(), is_strongly_minimal(c));
        if (!t) continue;
        std::vector<CocyclicLattice> leaves;
        rebuild(rebuild, *t, leaves);
        ASSERT_EQ(Covering(leaves), c);
    }
}

TEST(RefinementStructure, PrimePowerLcmAlwaysRefines) {
    for (const auto& c : gen::minimal_corpus(8)) {
        if (c.lcm() == 1 || !is_prime_power(c.lcm())) continue;
        ASSERT_TRUE(refinement_structure(c).has_value()) << c;
        const auto [p, e] = factorize(c.lcm()).entries.front();
        const Int n = static_cast<Int>(c.size());
        ASSERT_EQ((n - 2) % (p - 1), 0);
        ASSERT_GE((n - 2) / (p - 1), e);
    }
}

TEST(SimpsonCovering, Examples) {
    EXPECT_EQ(simpson_covering({0, 1}, 2, 1), full_covering(2));
    const auto c8 = simpson_covering({0, 1}, 2, 3);
    EXPECT_EQ(c8.size(), 5u);
    EXPECT_EQ(classify(c8), "(2,2,(4,(8,8)))");
    const auto c9 = simpson_covering({1, 0}, 3, 2);
    EXPECT_EQ(c9.size(), 6u);
    EXPECT_EQ(classify(c9), "(3,3,3,(9,9,9))");
    EXPECT_THROW(simpson_covering({2, 2}, 2, 1), std::invalid_argument);
}

TEST(SimpsonCovering, SizeAndStrongMinimality) {
    for (Int p : {2, 3, 5})
        for (int e = 1; e <= 3; ++e)
            for (Vec2 v : {Vec2{0, 1}, Vec2{1, 0}, Vec2{3, 7}, Vec2{-5, 2}}) {
                const auto c = simpson_covering(v, p, e);
                Int pe = 1;
                for (int i = 0; i < e; ++i) pe *= p;
                ASSERT_EQ(static_cast<Int>(c.size()), big_g(pe) + 1);
                ASSERT_TRUE(is_strongly_minimal(c));
                ASSERT_TRUE(is_minimal(c));
                ASSERT_TRUE(c.contains(CocyclicLattice::through(v, pe)));
                // Equality case of the refinement lower bound: size is exactly 1 + G(lcm).
                ASSERT_EQ(c.lcm(), pe);
            }
}

TEST(SimpsonBound, Examples) {
    EXPECT_TRUE(simpson_bound_holds(full_covering(2), 1));
    EXPECT_TRUE(simpson_bound_holds(min_not_strong(), 1));
    EXPECT_THROW(simpson_bound_holds(full_covering(2), 2), std::invalid_argument);
    EXPECT_THROW(simpson_bound_holds(full_covering(6), 4), std::invalid_argument);
    EXPECT_THROW(simpson_bound_holds(union_l2_l3(), 1), std::domain_error);
}

TEST(SimpsonBound, HoldsForEveryProperDivisor) {
    for (const auto& c : gen::minimal_corpus(8)) {
        ASSERT_GE(static_cast<Int>(c.size()), 1 + big_g(c.lcm()));
        for (Int d : divisors(c.lcm()))
            if (d != c.lcm()) ASSERT_TRUE(simpson_bound_holds(c, d)) << c << " D=" << d;
        ASSERT_TRUE(max_exponent_multiplicity_holds(c)) << c;
    }
}

TEST(SimpsonBound, SizeSevenLcmTwelve) {
    int seen = 0;
    for (const auto& c : enumerate_minimal_coverings(7)) {
        if (c.lcm() != 12) continue;
        ++seen;
        const auto outside = std::count_if(c.begin(), c.end(), [](const CocyclicLattice& l) { return 2 % l.index() != 0; });
        EXPECT_GE(outside, 1 + big_g(12) - big_g(2));
        EXPECT_TRUE(simpson_bound_holds(c, 2));
    }
    EXPECT_GT(seen, 0);
}
