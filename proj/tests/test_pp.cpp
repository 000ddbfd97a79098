#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace modclass;

namespace {

// exists y : x = c·y, written x - c·y = 0 over Z/n as coefficients (1, n - c).
PPFormula divisible(Element c, Element n) { return {1, 1, {{1, static_cast<Element>((n - c) % n)}}}; }
PPFormula is_zero(Element one = 1) { return {1, 0, {{one}}}; }
PPFormula anything() { return {1, 0, {}}; }

}  // namespace

TEST(PP, Examples)
{
    const auto R = build_ring("Z/4");
    const auto M = regular_module(R);
    EXPECT_EQ(pp_evaluate(*M, divisible(2, 4)).tuples, (std::vector<std::uint64_t>{0, 2}));
    EXPECT_EQ(pp_evaluate(*M, anything()).size(), 4u);
    EXPECT_EQ(pp_evaluate(*M, is_zero()).tuples, (std::vector<std::uint64_t>{0}));
}

TEST(PP, RightIdealExamples)
{
    const auto z4 = pp_subgroup_is_right_ideal(build_ring("Z/4"), divisible(2, 4));
    EXPECT_TRUE(z4.right_ideal);
    EXPECT_EQ(z4.elements, (std::vector<Element>{0, 2}));

    // x = E11·y over M(2,GF(2)); -E11 = E11 in characteristic 2.
    const auto R = build_ring("M(2,GF(2))");
    const auto m2 = pp_subgroup_is_right_ideal(R, PPFormula{1, 1, {{R->one(), 1}}});
    EXPECT_TRUE(m2.right_ideal);
    EXPECT_EQ(m2.elements, ideal_generated(R, Side::Right, {1}).elements);
    EXPECT_EQ(m2.elements.size(), 4u);

    const auto zero = pp_subgroup_is_right_ideal(R, is_zero(R->one()));
    EXPECT_TRUE(zero.right_ideal);
    EXPECT_EQ(zero.elements, (std::vector<Element>{0}));
}

TEST(PP, InvariantExamples)
{
    const auto R = build_ring("Z/4");
    const auto M = regular_module(R);
    EXPECT_EQ(baur_monk_invariant(*M, divisible(2, 4), is_zero()).index, 2u);
    EXPECT_EQ(baur_monk_invariant(*direct_sum(M, M), divisible(2, 4), is_zero()).index, 4u);
    EXPECT_EQ(baur_monk_invariant(*M, divisible(2, 4), divisible(2, 4)).index, 1u);
}

TEST(PP, LibraryMatchesOracle)
{
    const auto library = load_pp_library();
    ASSERT_GE(library.size(), 10u);
    for (const char* spec : {"Z/4", "Z/6", "T(2,GF(2))", "GF(4)", "Z/8"}) {
        const auto R = build_ring(spec);
        for (const auto& tm : test_modules(R)) {
            if (tm.module->size() > 16) continue;
            for (const auto& pair : library)
                for (const auto* f : {&pair.phi, &pair.psi}) {
                    const auto phi = f->reduced_mod(R->size());
                    const auto got = pp_evaluate(*tm.module, phi);
                    const auto want = oracle::pp_solutions(*tm.module, phi);
                    ASSERT_EQ(got.size(), want.size()) << spec << " " << tm.label << " " << pair.name;
                    for (const Element x : want) ASSERT_TRUE(got.contains(x));
                }
        }
    }
}

TEST(PP, MultiplicativeOverDirectSums)
{
    const auto library = load_pp_library();
    const auto R = build_ring("Z/8");
    const auto mods = test_modules(R);
    for (std::size_t i = 0; i < mods.size(); i += 3)
        for (std::size_t j = 0; j < mods.size(); j += 5) {
            const auto& M = mods[i].module;
            const auto& N = mods[j].module;
            if (M->size() * N->size() > 4096) continue;
            const auto MN = direct_sum(M, N);
            for (const auto& pair : library) {
                const auto phi = pair.phi.reduced_mod(8), psi = pair.psi.reduced_mod(8);
                EXPECT_EQ(baur_monk_invariant(*MN, phi, psi).index,
                          baur_monk_invariant(*M, phi, psi).index * baur_monk_invariant(*N, phi, psi).index);
            }
        }
}

TEST(PP, JsonRoundTripAndErrors)
{
    const PPFormula f{2, 1, {{1, 2, 3}, {0, 1, 0}}};
    EXPECT_EQ(pp_from_json(to_json(f)), f);
    EXPECT_THROW(pp_from_json(nlohmann::json{{"free", 1}}), ParseError);
    EXPECT_THROW(pp_from_json(nlohmann::json{{"free", 1}, {"bound", 1}, {"eqs", {{1}}}}), ParseError);
    EXPECT_THROW(pp_evaluate(*regular_module(build_ring("Z/4")), PPFormula{1, 0, {{7}}}), ValidationError);
}

TEST(PP, CapApplies)
{
    Limits tight;
    tight.max_pp = 100;
    const auto M = regular_module(build_ring("M(2,GF(2))"));
    EXPECT_THROW(pp_evaluate(*M, PPFormula{1, 2, {{1, 1, 1}}}, tight), CapExceeded);
}
