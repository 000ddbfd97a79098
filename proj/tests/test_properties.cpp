#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace modclass;

namespace {

struct Fixture {
    RingPtr ring;
    IdempotentDecomposition dec;
    IndecomposableRegistry registry;

    explicit Fixture(const std::string& spec)
        : ring(build_ring(spec)), dec(primitive_decomposition(ring)), registry(dec, Limits{})
    {
    }
};

}  // namespace

TEST(Free, MatrixRingProjective)
{
    Fixture s("M(2,GF(2))");
    const auto P = s.dec.representatives[0];
    const auto p = is_free_module(P, s.dec, s.registry);
    EXPECT_FALSE(p.free);
    EXPECT_FALSE(p.witness.empty());
    const auto pp = is_free_module(direct_sum(P, P), s.dec, s.registry);
    EXPECT_TRUE(pp.free);
    EXPECT_EQ(pp.rank, 1u);
    const auto zero = is_free_module(free_module(s.ring, 0), s.dec, s.registry);
    EXPECT_TRUE(zero.free);
    EXPECT_EQ(zero.rank, 0u);
}

TEST(Projective, Examples)
{
    Fixture z4("Z/4");
    const auto half = quotient_module(*regular_module(z4.ring), {0, 2});
    const auto p = is_projective_module(half, z4.registry);
    EXPECT_FALSE(p.projective);
    EXPECT_EQ(p.by_signature, false);
    EXPECT_EQ(p.by_splitting, false);

    Fixture z6("Z/6");
    const auto z2 = quotient_module(*regular_module(z6.ring), {0, 2, 4});
    EXPECT_EQ(z2->size(), 2u);
    EXPECT_TRUE(is_projective_module(z2, z6.registry).projective);

    for (std::size_t n = 0; n <= 2; ++n) EXPECT_TRUE(is_projective_module(free_module(z4.ring, n), z4.registry).projective);
}

TEST(Projective, SectionSearchExamples)
{
    Fixture z4("Z/4");
    const auto half = quotient_module(*regular_module(z4.ring), {0, 2});
    EXPECT_FALSE(split_surjection_search(canonical_surjection(half)).has_value());
    const auto R = regular_module(z4.ring);
    const auto s = split_surjection_search(identity_hom(R));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->map, identity_hom(R).map);

    Fixture m2("M(2,GF(2))");
    const auto P = m2.dec.representatives[0];
    const auto pi = canonical_surjection(P);
    const auto sec = split_surjection_search(pi);
    ASSERT_TRUE(sec);
    for (Element a = 0; a < P->size(); ++a) EXPECT_EQ(pi.map[sec->map[a]], a);
}

TEST(Projective, SplittingMatchesOracle)
{
    for (const char* spec : {"Z/4", "Z/6", "T(2,GF(2))", "PolyQuot(GF(2),[0,0,1])"}) {
        Fixture s(spec);
        for (const auto& tm : test_modules(s.ring)) {
            if (tm.module->num_generators() != 1) continue;
            const auto pi = canonical_surjection(tm.module);
            double work = 1;
            for (std::uint64_t i = 0; i < tm.module->size(); ++i) work *= pi.source->size();
            if (work > 70000) continue;
            EXPECT_EQ(is_projective_module(tm.module, s.registry).projective,
                      oracle::has_section(*pi.source, *tm.module, pi.map))
                << spec << " " << tm.label;
        }
    }
}

TEST(Flat, NonFlatWitness)
{
    Fixture z4("Z/4");
    const auto half = quotient_module(*regular_module(z4.ring), {0, 2});
    const auto f = is_flat_module(half, 2);
    EXPECT_FALSE(f.flat);
    ASSERT_TRUE(f.witness);
    EXPECT_EQ(f.witness->r, (std::vector<Element>{2}));
    EXPECT_EQ(f.witness->m, (std::vector<Element>{1}));
    EXPECT_FALSE(oracle::relation_factors(*half, 2, 1, 3));
}

TEST(Flat, FreeAndProjectiveAreFlat)
{
    for (const auto& spec : builtin_corpus()) {
        Fixture s(spec);
        if (s.ring->size() > 16) continue;
        EXPECT_TRUE(is_flat_module(regular_module(s.ring), 2).flat) << spec;
    }
    Fixture m2("M(2,GF(2))");
    const auto f = is_flat_module(m2.dec.representatives[0], 2, Limits{}, &m2.registry);
    EXPECT_TRUE(f.flat);
    EXPECT_EQ(f.projective, true);
    EXPECT_EQ(f.agrees_with_projectivity, true);
}

TEST(Flat, LengthOneRelationsMatchOracle)
{
    for (const char* spec : {"Z/4", "Z/6", "Z/8", "T(2,GF(2))", "PolyQuot(GF(2),[0,0,1])"}) {
        Fixture s(spec);
        for (const auto& tm : test_modules(s.ring)) {
            if (tm.module->size() > 4) continue;
            const auto engine = is_flat_module(tm.module, 1);
            EXPECT_EQ(engine.flat, oracle::flat_length_one(*tm.module, 2)) << spec << " " << tm.label;
        }
    }
}

TEST(Properties, FreeImpliesProjectiveImpliesFlat)
{
    for (const char* spec : {"Z/4", "Z/6", "T(2,GF(2))", "M(2,GF(2))", "GF(4)"}) {
        Fixture s(spec);
        for (const auto& tm : test_modules(s.ring)) {
            const bool free = is_free_module(tm.module, s.dec, s.registry).free;
            const bool proj = is_projective_module(tm.module, s.registry).projective;
            const bool flat = is_flat_module(tm.module, 3).flat;
            if (free) EXPECT_TRUE(proj) << spec << " " << tm.label;
            if (proj) EXPECT_TRUE(flat) << spec << " " << tm.label;
            EXPECT_EQ(proj, flat) << spec << " " << tm.label;
        }
    }
}
