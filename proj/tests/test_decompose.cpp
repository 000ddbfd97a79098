#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace modclass;

TEST(Idempotents, Examples)
{
    EXPECT_EQ(idempotents(*build_ring("Z/6")), (std::vector<Element>{0, 1, 3, 4}));
    EXPECT_EQ(idempotents(*build_ring("Z/4")), (std::vector<Element>{0, 1}));
    EXPECT_EQ(idempotents(*build_ring("GF(4)")), (std::vector<Element>{0, 1}));
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        EXPECT_EQ(idempotents(*R), oracle::idempotents(*R)) << spec;
    }
}

TEST(Primitive, Z6)
{
    const auto dec = primitive_decomposition(build_ring("Z/6"));
    EXPECT_EQ(dec.idempotents, (std::vector<Element>{3, 4}));
    ASSERT_EQ(dec.class_count(), 2u);
    EXPECT_EQ(dec.representative_elements[0], (std::vector<Element>{0, 3}));
    EXPECT_EQ(dec.representative_elements[1], (std::vector<Element>{0, 2, 4}));
    EXPECT_EQ(dec.multiplicity(0), 1u);
    EXPECT_EQ(dec.multiplicity(1), 1u);
}

TEST(Primitive, MatrixRing)
{
    const auto dec = primitive_decomposition(build_ring("M(2,GF(2))"));
    EXPECT_EQ(dec.idempotents, (std::vector<Element>{1, 8}));   // E11, E22
    ASSERT_EQ(dec.class_count(), 1u);
    EXPECT_EQ(dec.multiplicity(0), 2u);
    EXPECT_EQ(dec.representatives[0]->size(), 4u);
    EXPECT_EQ(dec.representative_elements[0], (std::vector<Element>{0, 1, 4, 5}));   // first column
}

TEST(Primitive, LocalRing)
{
    const auto dec = primitive_decomposition(build_ring("Z/8"));
    EXPECT_EQ(dec.idempotents, (std::vector<Element>{1}));
    EXPECT_EQ(dec.class_count(), 1u);
    EXPECT_EQ(dec.representatives[0]->size(), 8u);
}

TEST(Primitive, IdempotentsAreCompleteOrthogonalPrimitive)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        const auto dec = primitive_decomposition(R);
        Element sum = R->zero();
        for (const Element e : dec.idempotents) {
            sum = R->add(sum, e);
            for (const Element f : dec.idempotents)
                EXPECT_EQ(R->mul(e, f), e == f ? e : R->zero()) << spec;
            // Primitive: eRe has no idempotents other than 0 and e.
            for (const Element x : oracle::idempotents(*R))
                if (R->mul(R->mul(e, x), e) == x) EXPECT_TRUE(x == 0 || x == e) << spec;
        }
        EXPECT_EQ(sum, R->one()) << spec;
    }
}

TEST(Primitive, ClassesAgreeWithModuleIsomorphism)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        if (R->size() > 32) continue;
        const auto dec = primitive_decomposition(R);
        for (std::size_t i = 0; i < dec.class_count(); ++i)
            for (std::size_t j = 0; j < dec.class_count(); ++j)
                EXPECT_EQ(find_isomorphism(dec.representatives[i], dec.representatives[j]).has_value(), i == j) << spec;
    }
}

TEST(KrullSchmidt, Examples)
{
    const auto z6 = build_ring("Z/6");
    IndecomposableRegistry reg6(primitive_decomposition(z6), Limits{});
    const auto one = krull_schmidt(regular_module(z6), reg6);
    EXPECT_EQ(one.signature.classes, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 1}}));
    const auto two = krull_schmidt(free_module(z6, 2), reg6);
    EXPECT_EQ(two.signature.classes, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}}));

    const auto z4 = build_ring("Z/4");
    IndecomposableRegistry reg4(primitive_decomposition(z4), Limits{});
    const auto k = krull_schmidt(quotient_module(*regular_module(z4), {0, 2}), reg4);
    ASSERT_EQ(k.summands.size(), 1u);
    EXPECT_GE(k.ids[0], reg4.projective_count());
}

TEST(KrullSchmidt, SummandsAreIndecomposableAndSizesMultiply)
{
    for (const char* spec : {"Z/4", "Z/6", "T(2,GF(2))", "M(2,GF(2))", "Z/12"}) {
        const auto R = build_ring(spec);
        IndecomposableRegistry reg(primitive_decomposition(R), Limits{});
        for (const auto& tm : test_modules(R)) {
            const auto ks = krull_schmidt(tm.module, reg);
            std::uint64_t product = 1;
            for (const auto& s : ks.summands) {
                product *= s->size();
                if (s->size() <= 4) EXPECT_FALSE(oracle::has_nontrivial_idempotent_endo(*s)) << spec << " " << tm.label;
            }
            EXPECT_EQ(product, tm.module->size()) << spec << " " << tm.label;
        }
    }
}

TEST(KrullSchmidt, RegularModuleMatchesIdempotents)
{
    const auto report = suite_regular_decomposition([] {
        std::vector<RingPtr> rings;
        for (const auto& spec : builtin_corpus()) rings.push_back(build_ring(spec));
        return rings;
    }());
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.reports_checked, builtin_corpus().size());
}

TEST(KrullSchmidt, SeedsGiveSameSignature)
{
    const auto R = build_ring("T(2,GF(2))");
    const auto base = [&] {
        IndecomposableRegistry reg(primitive_decomposition(R), Limits{});
        return krull_schmidt(free_module(R, 2), reg).signature;
    }();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        IndecomposableRegistry reg(primitive_decomposition(R, seed), Limits{});
        EXPECT_EQ(krull_schmidt(free_module(R, 2), reg, seed).signature, base);
    }
}

TEST(KrullSchmidt, CanonicalOrderDoesNotDependOnSeed)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        const auto a = primitive_decomposition(R);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto b = primitive_decomposition(R, seed);
            ASSERT_EQ(a.class_count(), b.class_count()) << spec;
            for (std::size_t i = 0; i < a.class_count(); ++i) {
                EXPECT_EQ(a.multiplicity(i), b.multiplicity(i)) << spec;
                EXPECT_EQ(a.representatives[i]->size(), b.representatives[i]->size()) << spec;
            }
        }
    }
}
