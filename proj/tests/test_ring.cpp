#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace modclass;

TEST(RingSpec, CarrierSizes)
{
    EXPECT_EQ(build_ring("Z/6")->size(), 6u);
    EXPECT_EQ(build_ring("M(2,GF(2))")->size(), 16u);
    EXPECT_EQ(build_ring("GF(4)")->size(), 4u);
    EXPECT_EQ(build_ring("T(2,GF(3))")->size(), 27u);
    EXPECT_EQ(build_ring("GF(2) x M(2,GF(2))")->size(), 32u);
    EXPECT_EQ(build_ring("PolyQuot(GF(2),[0,0,1])")->size(), 4u);
}

TEST(RingSpec, FieldOfOrderFour)
{
    const auto R = build_ring("GF(4)");
    EXPECT_TRUE(is_commutative(*R));
    EXPECT_EQ(units(*R), (std::vector<Element>{1, 2, 3}));
}

TEST(RingSpec, MalformedSpecsAreParseErrors)
{
    for (const char* bad : {"Z/0", "Z/1", "", "Q", "M(2,", "Z/4 x", "GF(6)", "GF(2) GF(3)"})
        EXPECT_THROW(build_ring(bad), Error) << bad;
    EXPECT_THROW(build_ring("Z/0"), ParseError);
}

TEST(RingSpec, CapIsEnforced)
{
    Limits small;
    small.max_ring = 100;
    EXPECT_THROW(build_ring("M(3,GF(2))", small), CapExceeded);
    EXPECT_NO_THROW(build_ring("M(2,GF(3))", small));
}

TEST(Ring, AxiomsHoldOnCorpus)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        EXPECT_TRUE(verify_ring_axioms(*R).passed()) << spec;
    }
}

TEST(Ring, CorruptedTableIsDetected)
{
    const auto report = verify_ring_axioms(*corrupted_ring());
    EXPECT_FALSE(report.passed());
    bool law = false;
    for (const auto& r : report.results)
        if (!r.passed && (r.axiom.find("assoc") != std::string::npos || r.axiom.find("distrib") != std::string::npos))
            law = true;
    EXPECT_TRUE(law);
}

TEST(Ring, UnitsMatchOracle)
{
    EXPECT_EQ(units(*build_ring("Z/4")), (std::vector<Element>{1, 3}));
    EXPECT_EQ(units(*build_ring("M(2,GF(2))")).size(), 6u);
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        EXPECT_EQ(units(*R), oracle::units(*R)) << spec;
    }
}

TEST(Ring, EncodingRoundTrip)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        for (Element x = 0; x < R->size(); ++x) {
            const auto d = R->digits(x);
            ASSERT_EQ(d.size(), R->orders().size());
            for (std::size_t i = 0; i < d.size(); ++i) ASSERT_LT(d[i], R->orders()[i]);
            ASSERT_EQ(R->from_digits(d), x) << spec;
        }
    }
}

TEST(Ring, TableAndStructureConstantsAgree)
{
    Limits no_table;
    no_table.table_threshold = 0;
    for (const char* spec : {"Z/12", "M(2,GF(2))", "T(2,GF(3))", "GF(4) x Z/4"}) {
        const auto a = build_ring(spec);
        const auto b = build_ring(spec, no_table);
        ASSERT_TRUE(a->has_table());
        ASSERT_FALSE(b->has_table());
        for (Element x = 0; x < a->size(); ++x)
            for (Element y = 0; y < a->size(); ++y) ASSERT_EQ(a->mul(x, y), b->mul(x, y)) << spec;
    }
}

TEST(Ring, StructureConstantJsonRoundTrip)
{
    for (const auto& spec : builtin_corpus()) {
        const auto R = build_ring(spec);
        const auto S = struct_const_from_json(struct_const_json(*R), "copy");
        ASSERT_EQ(S->size(), R->size());
        for (Element x = 0; x < R->size(); ++x)
            for (Element y = 0; y < R->size(); ++y) ASSERT_EQ(S->mul(x, y), R->mul(x, y)) << spec;
    }
}

TEST(Ring, InvalidStructureConstantsRejected)
{
    // Z/2 with 1·1 = 0 has no identity.
    const nlohmann::json bad{{"orders", {2}}, {"one", 1}, {"table", {{0, 0}, {0, 0}}}};
    EXPECT_THROW(struct_const_from_json(bad, "bad"), ValidationError);
}
