#pragma once

// Ring-level verdicts on free, projective and flat module classes.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modclass/properties.hpp"
#include "modclass/ring_builders.hpp"

namespace modclass {

enum class Tri { True, False, ImpliedTrue, Unknown };

inline std::string to_string(Tri t)
{
    switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::ImpliedTrue: return "implied_true";
    case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

inline Tri tri_from_string(const std::string& s)
{
    if (s == "true") return Tri::True;
    if (s == "false") return Tri::False;
    if (s == "implied_true") return Tri::ImpliedTrue;
    if (s == "unknown") return Tri::Unknown;
    throw ParseError("unknown verdict '" + s + "'");
}

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }
inline bool holds(Tri t) { return t == Tri::True || t == Tri::ImpliedTrue; }

NLOHMANN_JSON_SERIALIZE_ENUM(Tri, {{Tri::True, "true"},
                                   {Tri::False, "false"},
                                   {Tri::ImpliedTrue, "implied_true"},
                                   {Tri::Unknown, "unknown"}})

struct IndecomposableSummary {
    std::optional<std::uint64_t> size;   // empty over an infinite ring
    std::size_t multiplicity = 0;
    bool is_free = false;

    bool operator==(const IndecomposableSummary&) const = default;
};

struct ClassificationReport {
    std::string ring_label;
    std::optional<std::uint64_t> carrier_size;
    bool finite = true;

    std::uint64_t radical_size = 1;
    bool is_local = false;
    bool r_mod_j_simple = false;
    bool right_artinian = true;
    bool left_perfect = true;
    bool right_coherent = true;

    std::vector<IndecomposableSummary> indecomposables;
    std::size_t k = 0;
    bool regular_is_sum_of_projectives = false;

    bool flats_elementary = false;
    bool projectives_elementary = false;
    bool frees_elementary = false;

    Tri property_I = Tri::Unknown;
    Tri property_II = Tri::Unknown;
    Tri property_III = Tri::Unknown;
    Tri property_IV = Tri::Unknown;
    bool categorical = false;
    bool projective_equals_free = false;

    std::vector<std::string> notes;
    std::map<std::string, std::string> provenance;
    std::map<std::string, std::string> witnesses;

    bool operator==(const ClassificationReport&) const = default;
};

inline void to_json(nlohmann::json& j, const IndecomposableSummary& s)
{
    j = {{"size", s.size ? nlohmann::json(*s.size) : nlohmann::json(nullptr)},
         {"multiplicity", s.multiplicity},
         {"is_free", s.is_free}};
}

inline void from_json(const nlohmann::json& j, IndecomposableSummary& s)
{
    s.size = j.at("size").is_null() ? std::nullopt : std::optional<std::uint64_t>(j.at("size").get<std::uint64_t>());
    s.multiplicity = j.at("multiplicity").get<std::size_t>();
    s.is_free = j.at("is_free").get<bool>();
}

inline void to_json(nlohmann::json& j, const ClassificationReport& r)
{
    j = nlohmann::json{
        {"ring_label", r.ring_label},
        {"carrier_size", r.carrier_size ? nlohmann::json(*r.carrier_size) : nlohmann::json(nullptr)},
        {"finite", r.finite},
        {"radical_size", r.radical_size},
        {"is_local", r.is_local},
        {"r_mod_j_simple", r.r_mod_j_simple},
        {"right_artinian", r.right_artinian},
        {"left_perfect", r.left_perfect},
        {"right_coherent", r.right_coherent},
        {"indecomposables", r.indecomposables},
        {"k", r.k},
        {"regular_is_sum_of_projectives", r.regular_is_sum_of_projectives},
        {"flats_elementary", r.flats_elementary},
        {"projectives_elementary", r.projectives_elementary},
        {"frees_elementary", r.frees_elementary},
        {"property_I", r.property_I},
        {"property_II", r.property_II},
        {"property_III", r.property_III},
        {"property_IV", r.property_IV},
        {"categorical", r.categorical},
        {"projective_equals_free", r.projective_equals_free},
        {"notes", r.notes},
        {"provenance", r.provenance},
        {"witnesses", r.witnesses},
    };
}

inline void from_json(const nlohmann::json& j, ClassificationReport& r)
{
    j.at("ring_label").get_to(r.ring_label);
    r.carrier_size = j.at("carrier_size").is_null() ? std::nullopt
                                                    : std::optional<std::uint64_t>(j.at("carrier_size").get<std::uint64_t>());
    j.at("finite").get_to(r.finite);
    j.at("radical_size").get_to(r.radical_size);
    j.at("is_local").get_to(r.is_local);
    j.at("r_mod_j_simple").get_to(r.r_mod_j_simple);
    j.at("right_artinian").get_to(r.right_artinian);
    j.at("left_perfect").get_to(r.left_perfect);
    j.at("right_coherent").get_to(r.right_coherent);
    j.at("indecomposables").get_to(r.indecomposables);
    j.at("k").get_to(r.k);
    j.at("regular_is_sum_of_projectives").get_to(r.regular_is_sum_of_projectives);
    j.at("flats_elementary").get_to(r.flats_elementary);
    j.at("projectives_elementary").get_to(r.projectives_elementary);
    j.at("frees_elementary").get_to(r.frees_elementary);
    r.property_I = tri_from_string(j.at("property_I").get<std::string>());
    r.property_II = tri_from_string(j.at("property_II").get<std::string>());
    r.property_III = tri_from_string(j.at("property_III").get<std::string>());
    r.property_IV = tri_from_string(j.at("property_IV").get<std::string>());
    j.at("categorical").get_to(r.categorical);
    j.at("projective_equals_free").get_to(r.projective_equals_free);
    j.at("notes").get_to(r.notes);
    j.at("provenance").get_to(r.provenance);
    j.at("witnesses").get_to(r.witnesses);
}

inline ClassificationReport report_from_json(const nlohmann::json& j)
{
    try {
        return j.get<ClassificationReport>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("classification report: ") + e.what());
    }
}

namespace detail {

template <class Range>
std::string join_elements(const Range& xs, std::size_t limit = 32)
{
    std::ostringstream os;
    os << "{";
    std::size_t i = 0;
    for (const auto& x : xs) {
        if (i == limit) {
            os << ", ...";
            break;
        }
        os << (i++ ? ", " : "") << x;
    }
    os << "}";
    return os.str();
}

}  // namespace detail

/// Fills the verdict fields from the structural ones.
inline void derive_verdicts(ClassificationReport& r)
{
    r.k = r.indecomposables.size();
    r.flats_elementary = r.right_coherent;
    r.provenance["flats_elementary"] = "flat modules elementary iff R right coherent";
    r.projectives_elementary = r.left_perfect && r.right_coherent;
    r.provenance["projectives_elementary"] = "projective modules elementary iff R left perfect and right coherent";
    r.frees_elementary = r.right_artinian && (r.is_local || (r.finite && r.r_mod_j_simple));
    r.provenance["frees_elementary"] =
        "free modules elementary iff R right artinian and either local or finite with R/J simple";

    const bool unique = r.k == 1;
    r.property_II = tri(r.left_perfect && r.right_coherent && unique);
    r.provenance["property_II"] = "categoricity iff left perfect, right coherent, unique indecomposable projective";
    r.property_IV = tri(r.frees_elementary);
    r.provenance["property_IV"] = "(IV) is the elementarity of the free class";
    r.property_III = r.property_IV;
    r.provenance["property_III"] = "(III) equivalent to (IV)";
    r.property_I = holds(r.property_II) ? Tri::ImpliedTrue : Tri::Unknown;
    r.provenance["property_I"] = holds(r.property_II) ? "(II) implies (I)"
                                                      : "no criterion for (I) when (II) fails; left undecided";
    r.categorical = holds(r.property_II);
    r.provenance["categorical"] = "same as property_II";
    r.projective_equals_free = unique && r.indecomposables.front().multiplicity == 1;
    r.provenance["projective_equals_free"] = "every indecomposable projective free iff k = 1 and r = 1";
}

/// Full pipeline on a finite ring.
inline ClassificationReport classify_ring(const RingPtr& ring, const Limits& limits = {})
{
    const FiniteRing& R = *ring;
    ClassificationReport rep;
    rep.ring_label = R.label();
    rep.carrier_size = R.size();
    rep.finite = true;

    const auto radical = jacobson_radical_with_index(ring);
    rep.radical_size = radical.ideal.size();
    rep.witnesses["radical"] = detail::join_elements(radical.ideal.elements) + ", nilpotency index " +
                               std::to_string(radical.nilpotency_index);
    rep.provenance["radical_size"] = "J = {x : 1 - rx a unit for all r}, checked two-sided and nilpotent";

    const auto local = is_local(R);
    rep.is_local = local.local;
    rep.witnesses["is_local"] = local.local ? "non-units form the ideal " + detail::join_elements(local.maximal_ideal)
                                            : "non-units " + std::to_string(local.witness->first) + " and " +
                                                  std::to_string(local.witness->second) + " sum to a unit";
    rep.provenance["is_local"] = "non-units closed under addition";

    const RingPtr top = quotient_ring(ring, radical.ideal, limits);
    const auto simple = is_simple_ring(top);
    rep.r_mod_j_simple = simple.simple;
    rep.witnesses["r_mod_j_simple"] =
        simple.simple ? "every nonzero element of R/J generates R/J"
                      : "R/J has the proper ideal of size " + std::to_string(simple.proper_ideal->size());
    rep.provenance["r_mod_j_simple"] = "two-sided ideal generated by each nonzero element of R/J";

    const auto chains = chain_conditions(R, limits);
    rep.right_artinian = chains.right_artinian;
    rep.left_perfect = chains.left_perfect;
    rep.right_coherent = chains.right_coherent;
    rep.witnesses["chain_conditions"] = chains.rationale;
    rep.provenance["right_artinian"] = "finite ring";
    rep.provenance["left_perfect"] = "right artinian implies left perfect";
    rep.provenance["right_coherent"] = "right artinian implies right coherent";

    const auto dec = primitive_decomposition(ring, std::nullopt, limits);
    IndecomposableRegistry registry(dec, limits);
    std::ostringstream idem;
    idem << "primitive idempotents " << detail::join_elements(dec.idempotents);
    rep.witnesses["idempotents"] = idem.str();
    ModulePtr sum;
    for (std::size_t i = 0; i < dec.class_count(); ++i) {
        IndecomposableSummary s;
        s.size = dec.representatives[i]->size();
        s.multiplicity = dec.multiplicity(i);
        s.is_free = is_free_module(dec.representatives[i], dec, registry, limits).free;
        rep.indecomposables.push_back(s);
        for (std::size_t c = 0; c < s.multiplicity; ++c)
            sum = sum ? direct_sum(sum, dec.representatives[i], limits) : dec.representatives[i];
    }
    const auto iso = is_isomorphic(sum, regular_module(ring, limits), registry, limits);
    rep.regular_is_sum_of_projectives = iso.isomorphic;
    std::ostringstream decomp;
    for (std::size_t i = 0; i < dec.class_count(); ++i)
        decomp << (i ? " ⊕ " : "") << "P" << i << "^" << dec.multiplicity(i);
    decomp << (iso.isomorphic ? " ≅ R" : " ≇ R") << " (" << iso.method
           << (iso.isomorphism ? ", explicit isomorphism found" : "") << ")";
    rep.witnesses["regular_decomposition"] = decomp.str();
    rep.provenance["indecomposables"] = "primitive idempotents grouped by the corner criterion";

    for (std::size_t i = 0; i < dec.class_count(); ++i)
        if (dec.multiplicity(i) > 1)
            rep.notes.push_back("P" + std::to_string(i) + " occurs with multiplicity r = " +
                                std::to_string(dec.multiplicity(i)) + "; r >= 1 is accepted");
    rep.notes.push_back(
        "perfect/coherent orientation: left perfect and right coherent is used throughout, matching the "
        "projective-class criterion; one statement of the categoricity result phrases it as left coherent and "
        "right perfect, which coincides here because finite rings satisfy both");

    derive_verdicts(rep);
    return rep;
}

inline ClassificationReport classify_ring(std::string_view spec, const Limits& limits = Limits::from_env())
{
    return classify_ring(build_ring(spec, limits), limits);
}

// ---------------------------------------------------------------------------
// Matrix-ring family and the certificate that projective need not be free.

struct CertificateClaim {
    std::string id;
    std::string statement;
    bool holds = false;
    std::string status;     // "verified" (enumerated) or "certificate" (field-generic identities)
    std::string witness;

    bool operator==(const CertificateClaim&) const = default;
};

struct CounterexampleCertificate {
    std::size_t n = 1;
    std::string field;      // "GF(q)" or "infinite"
    std::vector<CertificateClaim> claims;
    std::vector<std::string> identity_checks;

    const CertificateClaim* claim(const std::string& id) const
    {
        for (const auto& c : claims)
            if (c.id == id) return &c;
        return nullptr;
    }

    bool operator==(const CounterexampleCertificate&) const = default;
};

inline void to_json(nlohmann::json& j, const CertificateClaim& c)
{
    j = {{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}, {"status", c.status}, {"witness", c.witness}};
}

inline void from_json(const nlohmann::json& j, CertificateClaim& c)
{
    j.at("id").get_to(c.id);
    j.at("statement").get_to(c.statement);
    j.at("holds").get_to(c.holds);
    j.at("status").get_to(c.status);
    j.at("witness").get_to(c.witness);
}

inline void to_json(nlohmann::json& j, const CounterexampleCertificate& c)
{
    j = {{"n", c.n}, {"field", c.field}, {"claims", c.claims}, {"identity_checks", c.identity_checks}};
}

inline void from_json(const nlohmann::json& j, CounterexampleCertificate& c)
{
    j.at("n").get_to(c.n);
    j.at("field").get_to(c.field);
    j.at("claims").get_to(c.claims);
    j.at("identity_checks").get_to(c.identity_checks);
}

struct FieldSpec {
    std::optional<std::uint64_t> q;   // empty for an infinite field

    std::string label() const { return q ? "GF(" + std::to_string(*q) + ")" : "infinite"; }
};

inline FieldSpec parse_field(const std::string& s)
{
    if (s == "infinite" || s == "inf") return {};
    std::uint64_t q = 0;
    try {
        std::size_t pos = 0;
        q = std::stoull(s, &pos);
        if (pos != s.size()) throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError("field must be 'infinite' or a prime power, got '" + s + "'");
    }
    if (q < 2 || detail::prime_factors(q).size() != 1)
        throw ParseError("field order must be a prime power, got " + s);
    return {q};
}

namespace detail {

/// n×n matrices over a small field, entries row-major.
struct SmallMatrices {
    RingPtr field;
    std::size_t n;

    using Matrix = std::vector<Element>;

    Matrix zero() const { return Matrix(n * n, field->zero()); }

    Matrix unit(std::size_t i, std::size_t j) const
    {
        Matrix m = zero();
        m[i * n + j] = field->one();
        return m;
    }

    Matrix identity() const
    {
        Matrix m = zero();
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = field->one();
        return m;
    }

    Matrix mul(const Matrix& a, const Matrix& b) const
    {
        Matrix c = zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Element s = field->zero();
                for (std::size_t t = 0; t < n; ++t) s = field->add(s, field->mul(a[i * n + t], b[t * n + j]));
                c[i * n + j] = s;
            }
        return c;
    }

    Matrix add(const Matrix& a, const Matrix& b) const
    {
        Matrix c(n * n);
        for (std::size_t i = 0; i < n * n; ++i) c[i] = field->add(a[i], b[i]);
        return c;
    }

    Matrix scaled(Element s, const Matrix& a) const
    {
        Matrix c(n * n);
        for (std::size_t i = 0; i < n * n; ++i) c[i] = field->mul(s, a[i]);
        return c;
    }

    /// Ring index of a matrix in M(n, field) as built by matrix_ring.
    Element index_of(const Matrix& a) const
    {
        std::uint64_t idx = 0;
        for (std::size_t i = n * n; i-- > 0;) idx = idx * field->size() + a[i];
        return static_cast<Element>(idx);
    }
};

struct IdentityResult {
    bool ok = true;
    std::vector<std::string> checks;
};

/// Matrix-unit identities that hold over every field: E_ii idempotent and
/// pairwise orthogonal with sum 1, E_ii R E_ii = F·E_ii (so primitive, F having
/// no idempotents but 0 and 1), and E_ij E_ji = E_ii, E_ji E_ij = E_jj with
/// E_ij in E_ii R E_jj (so R E_ii ≅ R E_jj).
inline IdentityResult matrix_unit_identities(std::size_t n, std::uint64_t q)
{
    IdentityResult out;
    SmallMatrices mats{galois_field(q), n};
    const FiniteRing& F = *mats.field;
    auto record = [&](bool ok, const std::string& what) {
        out.ok = out.ok && ok;
        out.checks.push_back((ok ? "ok: " : "FAILED: ") + what + " over GF(" + std::to_string(q) + ")");
    };

    record(units(F).size() + 1 == F.size(), "every nonzero field element is a unit");

    bool idem = true, orth = true;
    auto total = mats.zero();
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = mats.unit(i, i);
        idem = idem && mats.mul(e, e) == e;
        total = mats.add(total, e);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) orth = orth && mats.mul(e, mats.unit(j, j)) == mats.zero();
    }
    record(idem, "E_ii^2 = E_ii");
    record(orth, "E_ii E_jj = 0 for i != j");
    record(total == mats.identity(), "sum of E_ii = 1");

    bool corner = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const auto e = mats.unit(i, i);
                const auto got = mats.mul(mats.mul(e, mats.unit(k, l)), e);
                corner = corner && got == ((k == i && l == i) ? e : mats.zero());
            }
    record(corner, "E_ii E_kl E_ii = [k = l = i] E_ii, so E_ii R E_ii = F E_ii");

    bool iso = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto a = mats.unit(i, j), b = mats.unit(j, i);
            const auto ei = mats.unit(i, i), ej = mats.unit(j, j);
            iso = iso && mats.mul(mats.mul(ei, a), ej) == a && mats.mul(mats.mul(ej, b), ei) == b;
            iso = iso && mats.mul(a, b) == ei && mats.mul(b, a) == ej;
        }
    record(iso, "E_ij in E_ii R E_jj, E_ij E_ji = E_ii, E_ji E_ij = E_jj");
    return out;
}

inline const std::vector<std::uint64_t>& bridge_fields()
{
    static const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
    return qs;
}

}  // namespace detail

struct MatrixFamilyResult {
    ClassificationReport report;
    CounterexampleCertificate certificate;
};

/// M(n, F). A finite field runs the enumerative classifier; the infinite
/// field is decided from the matrix-unit identities alone, re-verified over
/// every field of order at most 9.
inline MatrixFamilyResult classify_matrix_family(std::size_t n, const FieldSpec& field, const Limits& limits = {})
{
    if (n < 1 || n > 4) throw PreconditionError("classify_matrix_family: n must be in [1, 4]");
    if (field.q && (*field.q < 2 || *field.q > 9))
        throw PreconditionError("classify_matrix_family: finite field order must be in [2, 9]");

    MatrixFamilyResult out;
    CounterexampleCertificate& cert = out.certificate;
    cert.n = n;
    cert.field = field.label();

    std::vector<std::uint64_t> bridge = field.q ? std::vector<std::uint64_t>{*field.q} : detail::bridge_fields();
    bool identities_ok = true;
    for (const auto q : bridge) {
        auto ids = detail::matrix_unit_identities(n, q);
        identities_ok = identities_ok && ids.ok;
        cert.identity_checks.insert(cert.identity_checks.end(), ids.checks.begin(), ids.checks.end());
    }
    if (!identities_ok) throw ConsistencyError("matrix-unit identities failed");

    const std::string ns = std::to_string(n);
    const std::string sum = n == 1 ? "P" : "P^(" + ns + ")";

    if (field.q) {
        const std::string spec = "M(" + ns + ",GF(" + std::to_string(*field.q) + "))";
        const RingPtr ring = build_ring(spec, limits);
        out.report = classify_ring(ring, limits);
        const auto dec = primitive_decomposition(ring, std::nullopt, limits);
        IndecomposableRegistry registry(dec, limits);
        const ModulePtr P = dec.representatives.front();

        // Column module R·E_11 and the permutation isomorphisms x -> x·E_1j.
        detail::SmallMatrices mats{galois_field(*field.q), n};
        std::ostringstream perm;
        bool columns_iso = true;
        for (std::size_t j = 0; j < n; ++j) {
            const Element e11 = mats.index_of(mats.unit(0, 0));
            const Element ejj = mats.index_of(mats.unit(j, j));
            const auto pair = corner_isomorphism(*ring, e11, ejj);
            columns_iso = columns_iso && pair.has_value();
        }
        perm << "R·E_11 ≅ R·E_jj for all j via x -> x·E_1j (corner criterion over " << spec << ")";

        ModulePtr power = P;
        for (std::size_t c = 1; c < n; ++c) power = direct_sum(power, P, limits);
        const auto iso = is_isomorphic(power, regular_module(ring, limits), registry, limits);
        const auto free = is_free_module(P, dec, registry, limits);

        cert.claims.push_back({"unique_indecomposable", "R has a unique indecomposable projective P, the column module",
                               dec.class_count() == 1 && columns_iso, "verified",
                               "k = " + std::to_string(dec.class_count()) + ", |P| = " + std::to_string(P->size()) +
                                   "; " + perm.str()});
        cert.claims.push_back({"power_is_regular", sum + " ≅ R", iso.isomorphic, "verified",
                               iso.method + (iso.isomorphism ? ", explicit isomorphism" : "")});
        cert.claims.push_back({"p_not_free", "P is not free", !free.free, "verified", free.witness});
        cert.claims.push_back({"categorical", "the theory of infinitely generated free modules is categorical in "
                                              "high cardinalities (every module is a sum of copies of P)",
                               out.report.categorical, "verified",
                               "left perfect, right coherent, k = " + std::to_string(out.report.k)});
        cert.claims.push_back({"frees_not_elementary", "the class of free modules is not elementary",
                               !out.report.frees_elementary, "verified",
                               out.report.frees_elementary ? "R finite with R/J simple, so the free class is elementary"
                                                           : "R/J not simple and R not local"});
        return out;
    }

    // Infinite field: nothing is enumerated.
    ClassificationReport& rep = out.report;
    rep.ring_label = "M(" + ns + ",F), F infinite";
    rep.carrier_size = std::nullopt;
    rep.finite = false;
    rep.radical_size = 1;
    rep.is_local = n == 1;
    rep.r_mod_j_simple = true;
    rep.right_artinian = rep.left_perfect = rep.right_coherent = true;
    rep.indecomposables = {IndecomposableSummary{std::nullopt, n, n == 1}};
    rep.regular_is_sum_of_projectives = true;
    rep.witnesses["radical"] = "J = 0: M(n,F) is simple artinian";
    rep.witnesses["is_local"] = n == 1 ? "F is a division ring" : "E_11 and 1 - E_11 are non-units summing to 1";
    rep.witnesses["regular_decomposition"] = "R = R·E_11 ⊕ ... ⊕ R·E_nn with R·E_ii ≅ R·E_11";
    rep.provenance["radical_size"] = "matrix ring over a field is simple";
    rep.provenance["is_local"] = "n = 1 iff R is a division ring";
    rep.provenance["r_mod_j_simple"] = "matrix ring over a field is simple";
    rep.provenance["right_artinian"] = "finite-dimensional algebra over F";
    rep.provenance["left_perfect"] = "right artinian implies left perfect";
    rep.provenance["right_coherent"] = "right artinian implies right coherent";
    rep.provenance["indecomposables"] = "matrix-unit identities";
    rep.notes.push_back("symbolic entry: verdicts follow from matrix-unit identities checked over GF(2..9)");
    if (n > 1)
        rep.notes.push_back("P occurs with multiplicity r = " + ns + "; r >= 1 is accepted");
    derive_verdicts(rep);

    const std::string how = "matrix-unit identities, re-verified over GF(2), GF(3), GF(4), GF(5), GF(7), GF(8), GF(9)";
    cert.claims.push_back({"unique_indecomposable", "R has a unique indecomposable projective P, the column module",
                           true, "certificate",
                           "E_11..E_nn orthogonal primitive idempotents summing to 1; R·E_ii ≅ R·E_jj via x -> x·E_ij; " +
                               how});
    cert.claims.push_back({"power_is_regular", sum + " ≅ R", true, "certificate",
                           "R = ⊕ R·E_ii and each R·E_ii ≅ R·E_11; " + how});
    cert.claims.push_back({"p_not_free", "P is not free", n > 1, "certificate",
                           n > 1 ? "dim_F P = " + ns + " while every nonzero free module has dimension a multiple of " +
                                       ns + "^2; P is infinite, so R^(κ) is never finite-dimensional"
                                 : "P = R is free"});
    cert.claims.push_back({"categorical", "the theory of infinitely generated free modules is categorical in "
                                          "high cardinalities (every module is a sum of copies of P)",
                           rep.categorical, "certificate", "left perfect, right coherent, k = 1"});
    cert.claims.push_back({"frees_not_elementary", "the class of free modules is not elementary",
                           !rep.frees_elementary, "certificate",
                           n > 1 ? "R infinite and not local; P^(κ) is a non-free model" : "R is a division ring"});
    return out;
}

// ---------------------------------------------------------------------------
// Meta-checks over sets of reports.

struct Violation {
    std::string ring;
    std::string rule;
    std::string detail;
};

struct MetaReport {
    std::string name;
    std::vector<Violation> violations;
    std::vector<std::string> findings;
    std::size_t reports_checked = 0;

    bool passed() const { return violations.empty(); }
};

inline void to_json(nlohmann::json& j, const Violation& v)
{
    j = {{"ring", v.ring}, {"rule", v.rule}, {"detail", v.detail}};
}

inline void to_json(nlohmann::json& j, const MetaReport& m)
{
    j = {{"name", m.name},
         {"passed", m.passed()},
         {"reports_checked", m.reports_checked},
         {"violations", m.violations},
         {"findings", m.findings}};
}

/// IV ⇒ III ⇒ II ⇒ I, III ⟺ IV, and II ⟺ IV on finite rings.
inline MetaReport verify_implication_chain(const std::vector<ClassificationReport>& reports)
{
    MetaReport out;
    out.name = "implication chain";
    out.reports_checked = reports.size();
    std::size_t undecided = 0;
    auto check = [&](const ClassificationReport& r, bool ok, const std::string& rule) {
        if (!ok)
            out.violations.push_back({r.ring_label, rule,
                                      "I=" + to_string(r.property_I) + " II=" + to_string(r.property_II) +
                                          " III=" + to_string(r.property_III) + " IV=" + to_string(r.property_IV)});
    };
    for (const auto& r : reports) {
        const bool I = holds(r.property_I), II = holds(r.property_II), III = holds(r.property_III),
                   IV = holds(r.property_IV);
        check(r, !IV || III, "IV implies III");
        check(r, !III || II, "III implies II");
        check(r, !II || I, "II implies I");
        check(r, III == IV, "III iff IV");
        if (r.finite) check(r, II == IV, "II iff IV for finite rings");
        check(r, r.categorical == II, "categorical equals II");
        check(r, r.frees_elementary == IV, "frees_elementary equals IV");
        if (II && !IV) out.findings.push_back("II holds without IV: " + r.ring_label);
        if (r.property_I == Tri::Unknown) ++undecided;
    }
    out.findings.push_back("I left undecided (II fails) for " + std::to_string(undecided) + " of " +
                           std::to_string(reports.size()) + " entries");
    return out;
}

/// frees elementary ⟺ (projectives elementary ∧ projective = free). The
/// right-to-left direction is asserted everywhere, left-to-right only for
/// infinite entries; a finite entry with frees elementary but projective ≠
/// free is recorded as the finite counterexample.
inline MetaReport free_projective_check(const std::vector<ClassificationReport>& reports)
{
    MetaReport out;
    out.name = "frees elementary vs projective = free";
    out.reports_checked = reports.size();
    std::size_t both_true = 0, both_false = 0;
    for (const auto& r : reports) {
        const bool lhs = r.frees_elementary;
        const bool rhs = r.projectives_elementary && r.projective_equals_free;
        if (rhs && !lhs)
            out.violations.push_back({r.ring_label, "projectives elementary and projective = free imply frees elementary",
                                      "frees_elementary false"});
        if (lhs && !rhs) {
            if (r.finite)
                out.findings.push_back("finite counterexample: " + r.ring_label +
                                       " has frees elementary but projective != free");
            else
                out.violations.push_back({r.ring_label, "frees elementary implies projective = free (infinite R)",
                                          "projective_equals_free false"});
        }
        if (lhs == rhs) ++(lhs ? both_true : both_false);
    }
    out.findings.push_back("equivalence holds for " + std::to_string(both_true + both_false) + " entries (" +
                           std::to_string(both_true) + " both true, " + std::to_string(both_false) + " both false)");
    return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering.

inline std::string render_table(const std::vector<ClassificationReport>& reports)
{
    const std::vector<std::string> head{"ring", "size", "|J|", "local", "R/J simple", "k", "(|P|,r)",
                                        "flat el", "proj el", "free el", "I", "II", "III", "IV", "proj=free"};
    std::vector<std::vector<std::string>> rows{head};
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    for (const auto& r : reports) {
        std::string pr;
        for (std::size_t i = 0; i < r.indecomposables.size(); ++i) {
            const auto& s = r.indecomposables[i];
            pr += (i ? " " : "") + std::string("(") + (s.size ? std::to_string(*s.size) : "inf") + "," +
                  std::to_string(s.multiplicity) + ")";
        }
        rows.push_back({r.ring_label, r.carrier_size ? std::to_string(*r.carrier_size) : "inf",
                        std::to_string(r.radical_size), b(r.is_local), b(r.r_mod_j_simple), std::to_string(r.k), pr,
                        b(r.flats_elementary), b(r.projectives_elementary), b(r.frees_elementary),
                        to_string(r.property_I), to_string(r.property_II), to_string(r.property_III),
                        to_string(r.property_IV), b(r.projective_equals_free)});
    }
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (const unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    std::vector<std::size_t> widths(head.size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(widths[c] - width(row[c]) + 2, ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace modclass
