#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace modclass;

TEST(Classify, Z6)
{
    const auto r = classify_ring("Z/6");
    EXPECT_EQ(r.k, 2u);
    EXPECT_EQ(r.indecomposables[0].size, 2u);
    EXPECT_EQ(r.indecomposables[1].size, 3u);
    EXPECT_EQ(r.radical_size, 1u);
    EXPECT_FALSE(r.is_local);
    EXPECT_FALSE(r.r_mod_j_simple);
    EXPECT_FALSE(r.categorical);
    EXPECT_FALSE(r.frees_elementary);
    EXPECT_TRUE(r.flats_elementary);
    EXPECT_TRUE(r.projectives_elementary);
    EXPECT_EQ(r.property_I, Tri::Unknown);
    EXPECT_EQ(r.property_II, Tri::False);
}

TEST(Classify, MatrixRing)
{
    const auto r = classify_ring("M(2,GF(2))");
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.indecomposables[0].multiplicity, 2u);
    EXPECT_EQ(r.indecomposables[0].size, 4u);
    EXPECT_FALSE(r.indecomposables[0].is_free);
    EXPECT_TRUE(r.regular_is_sum_of_projectives);
    EXPECT_TRUE(r.categorical);
    EXPECT_TRUE(r.frees_elementary);
    EXPECT_FALSE(r.projective_equals_free);
}

TEST(Classify, LocalRing)
{
    const auto r = classify_ring("Z/4");
    EXPECT_TRUE(r.is_local);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.indecomposables[0].multiplicity, 1u);
    EXPECT_EQ(r.property_II, Tri::True);
    EXPECT_EQ(r.property_III, Tri::True);
    EXPECT_EQ(r.property_IV, Tri::True);
    EXPECT_EQ(r.property_I, Tri::ImpliedTrue);
    EXPECT_TRUE(r.projective_equals_free);
}

TEST(Classify, VerdictsFollowStructure)
{
    for (const auto& spec : builtin_corpus()) {
        const auto r = classify_ring(spec);
        const auto R = build_ring(spec);
        EXPECT_EQ(r.radical_size, oracle::radical_by_maximal_left_ideals(*R).size()) << spec;
        EXPECT_EQ(r.frees_elementary, r.is_local || r.r_mod_j_simple) << spec;
        EXPECT_EQ(r.categorical, r.k == 1) << spec;
        EXPECT_EQ(r.projective_equals_free, r.k == 1 && r.indecomposables[0].multiplicity == 1) << spec;
        EXPECT_TRUE(r.regular_is_sum_of_projectives) << spec;
        std::uint64_t product = 1;
        for (const auto& p : r.indecomposables)
            for (std::size_t c = 0; c < p.multiplicity; ++c) product *= *p.size;
        EXPECT_EQ(product, R->size()) << spec;
    }
}

TEST(Classify, JsonRoundTrip)
{
    for (const auto& spec : builtin_corpus()) {
        const auto r = classify_ring(spec);
        const nlohmann::json j = r;
        EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r) << spec;
    }
    for (const auto& r : symbolic_reports()) {
        const nlohmann::json j = r;
        EXPECT_EQ(report_from_json(j), r);
        EXPECT_TRUE(j.at("carrier_size").is_null());
    }
}

TEST(Classify, TableAgreesWithJson)
{
    std::vector<ClassificationReport> reports;
    for (const auto& spec : builtin_corpus()) reports.push_back(classify_ring(spec));
    const auto table = render_table(reports);
    std::istringstream in(table);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    ASSERT_GE(lines.size(), reports.size() + 1);
    const std::size_t first = lines.size() - reports.size();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& row = lines[first + i];
        EXPECT_EQ(row.rfind(reports[i].ring_label, 0), 0u) << row;
        const std::string k = " " + std::to_string(reports[i].k) + " ";
        EXPECT_NE(row.find(k), std::string::npos) << row;
    }
}

TEST(Meta, CorpusHasNoViolations)
{
    std::vector<ClassificationReport> reports;
    for (const auto& spec : builtin_corpus()) reports.push_back(classify_ring(spec));
    EXPECT_TRUE(verify_implication_chain(reports).passed());
    EXPECT_TRUE(free_projective_check(reports).passed());
}

TEST(Meta, ForgedReportIsFlagged)
{
    auto r = classify_ring("Z/6");
    r.ring_label = "forged";
    r.property_IV = Tri::True;
    r.property_II = Tri::False;
    const auto meta = verify_implication_chain({r});
    EXPECT_FALSE(meta.passed());
    bool named = false;
    for (const auto& v : meta.violations) named = named || v.ring == "forged";
    EXPECT_TRUE(named);
}

TEST(Meta, SymbolicEntryIsTheOnlyStrictGap)
{
    std::vector<ClassificationReport> reports;
    for (const auto& spec : builtin_corpus()) reports.push_back(classify_ring(spec));
    for (auto& r : symbolic_reports()) reports.push_back(std::move(r));
    const auto meta = verify_implication_chain(reports);
    EXPECT_TRUE(meta.passed());
    for (const auto& r : reports)
        if (holds(r.property_II) && !holds(r.property_IV)) EXPECT_FALSE(r.finite) << r.ring_label;
}

TEST(Meta, FreeProjectiveFindings)
{
    const auto m2 = classify_ring("M(2,GF(2))");
    EXPECT_TRUE(m2.frees_elementary && !m2.projective_equals_free);
    const auto z4 = classify_ring("Z/4");
    EXPECT_TRUE(z4.frees_elementary && z4.projective_equals_free);
    const auto sym = classify_matrix_family(2, parse_field("infinite")).report;
    EXPECT_FALSE(sym.frees_elementary);
    EXPECT_FALSE(sym.projective_equals_free);
    const auto meta = free_projective_check({m2, z4, sym});
    EXPECT_TRUE(meta.passed());
    bool finite_case = false;
    for (const auto& f : meta.findings) finite_case = finite_case || f.find("M(2,GF(2))") != std::string::npos;
    EXPECT_TRUE(finite_case);
}

TEST(Family, FiniteMatchesDirectClassification)
{
    for (const std::uint64_t q : {2, 3}) {
        const auto fam = classify_matrix_family(2, parse_field(std::to_string(q)));
        const auto direct = classify_ring("M(2,GF(" + std::to_string(q) + "))");
        EXPECT_EQ(fam.report.k, direct.k);
        EXPECT_EQ(fam.report.indecomposables, direct.indecomposables);
        EXPECT_EQ(fam.report.radical_size, direct.radical_size);
        EXPECT_EQ(fam.report.is_local, direct.is_local);
        EXPECT_EQ(fam.report.r_mod_j_simple, direct.r_mod_j_simple);
        EXPECT_EQ(fam.report.categorical, direct.categorical);
        EXPECT_EQ(fam.report.frees_elementary, direct.frees_elementary);
        EXPECT_EQ(fam.report.projective_equals_free, direct.projective_equals_free);
        for (const auto& c : fam.certificate.claims) EXPECT_EQ(c.status, "verified") << c.id;
    }
}

TEST(Family, SymbolicMatrixRing)
{
    const auto fam = classify_matrix_family(2, parse_field("infinite"));
    EXPECT_FALSE(fam.report.finite);
    EXPECT_FALSE(fam.report.carrier_size.has_value());
    EXPECT_TRUE(fam.report.categorical);
    EXPECT_TRUE(holds(fam.report.property_II));
    EXPECT_FALSE(holds(fam.report.property_IV));
    EXPECT_FALSE(fam.report.frees_elementary);
    for (const char* id : {"unique_indecomposable", "power_is_regular", "p_not_free", "categorical", "frees_not_elementary"}) {
        const auto* c = fam.certificate.claim(id);
        ASSERT_NE(c, nullptr) << id;
        EXPECT_TRUE(c->holds) << id;
        EXPECT_EQ(c->status, "certificate") << id;
    }
}

TEST(Family, DegenerateSize)
{
    const auto fam = classify_matrix_family(1, parse_field("infinite"));
    EXPECT_TRUE(fam.report.is_local);
    EXPECT_TRUE(fam.report.projective_equals_free);
    EXPECT_TRUE(holds(fam.report.property_IV));
    EXPECT_FALSE(fam.certificate.claim("p_not_free")->holds);
    EXPECT_THROW(classify_matrix_family(0, parse_field("2")), Error);
    EXPECT_THROW(parse_field("6"), Error);
}

TEST(Family, CertificateJsonRoundTrip)
{
    const auto cert = classify_matrix_family(2, parse_field("2")).certificate;
    const nlohmann::json j = cert;
    EXPECT_EQ(j.get<CounterexampleCertificate>(), cert);
}

TEST(RandomRings, ValidAndConsistent)
{
    const auto rings = random_rings(100, 20240601);
    ASSERT_EQ(rings.size(), 100u);
    std::vector<ClassificationReport> reports;
    for (const auto& r : rings) {
        ASSERT_LE(r.ring->size(), 16u);
        ASSERT_TRUE(verify_ring_axioms(*r.ring).passed()) << r.origin;
        reports.push_back(classify_ring(r.ring));
        const auto& rep = reports.back();
        EXPECT_EQ(rep.property_III, rep.property_IV) << r.origin;
        EXPECT_EQ(holds(rep.property_II), holds(rep.property_IV)) << r.origin;
    }
    EXPECT_TRUE(verify_implication_chain(reports).passed());
    EXPECT_TRUE(free_projective_check(reports).passed());
}

TEST(RandomRings, Deterministic)
{
    const auto a = random_rings(10, 5);
    const auto b = random_rings(10, 5);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].structure, b[i].structure);
}
