#pragma once

// Property suites run over the built-in corpus.

#include <algorithm>
#include <fstream>
#include <future>
#include <string>
#include <vector>

#include "modclass/classifier.hpp"
#include "modclass/corpus.hpp"
#include "modclass/pp.hpp"

#ifndef MODCLASS_DATA_DIR
#define MODCLASS_DATA_DIR "data"
#endif

namespace modclass {

struct PPPair {
    std::string name;
    PPFormula phi;
    PPFormula psi;
};

inline std::string default_pp_library_path()
{
    if (const char* dir = std::getenv("MODCLASS_DATA_DIR"); dir != nullptr && *dir != '\0')
        return std::string(dir) + "/pp_library.json";
    return std::string(MODCLASS_DATA_DIR) + "/pp_library.json";
}

inline std::vector<PPPair> load_pp_library(const std::string& path = default_pp_library_path())
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open pp library " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("pp library " + path + ": " + e.what());
    }
    std::vector<PPPair> out;
    try {
        for (const auto& p : j.at("pairs"))
            out.push_back({p.at("name").get<std::string>(), pp_from_json(p.at("phi")), pp_from_json(p.at("psi"))});
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("pp library " + path + ": " + e.what());
    }
    return out;
}

namespace detail {

/// Runs f(i) for every index concurrently and returns the results in order.
template <class F>
auto fan_out(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{0}))>
{
    std::vector<std::future<decltype(f(std::size_t{0}))>> jobs;
    for (std::size_t i = 0; i < n; ++i) jobs.push_back(std::async(std::launch::async, f, i));
    std::vector<decltype(f(std::size_t{0}))> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

inline void merge(MetaReport& into, const MetaReport& part)
{
    into.violations.insert(into.violations.end(), part.violations.begin(), part.violations.end());
    into.findings.insert(into.findings.end(), part.findings.begin(), part.findings.end());
    into.reports_checked += part.reports_checked;
}

template <class Range>
std::string vec_string(const Range& xs)
{
    std::string s = "(";
    std::size_t i = 0;
    for (const auto& x : xs) s += (i++ ? "," : "") + std::to_string(x);
    return s + ")";
}

}  // namespace detail

inline MetaReport suite_ring_axioms(const std::vector<RingPtr>& rings, const Limits& limits = {})
{
    MetaReport out;
    out.name = "ring axioms";
    for (const auto& R : rings) {
        const auto report = verify_ring_axioms(*R, limits);
        ++out.reports_checked;
        for (const auto& a : report.results)
            if (!a.passed)
                out.violations.push_back({R->label(), a.axiom, "counterexample " + detail::vec_string(a.counterexample)});
    }
    return out;
}

/// Z/6 with one product altered; fails the axiom scan.
inline RingPtr corrupted_ring()
{
    const RingPtr z6 = build_ring("Z/6");
    auto table = z6->table();
    table[2 * 6 + 3] = 1;   // 2·3 := 1
    return FiniteRing::from_table_unchecked(z6->orders(), z6->one(), "Z/6 (corrupted)", table);
}

inline std::vector<ClassificationReport> classify_all(const std::vector<RingPtr>& rings, const Limits& limits = {})
{
    return detail::fan_out(rings.size(), [&](std::size_t i) { return classify_ring(rings[i], limits); });
}

inline std::vector<ClassificationReport> symbolic_reports()
{
    std::vector<ClassificationReport> out;
    for (std::size_t n = 1; n <= 4; ++n) out.push_back(classify_matrix_family(n, FieldSpec{}).report);
    return out;
}

/// Flat iff projective on every generated test module, with free ⇒
/// projective ⇒ flat, and every module projective over a semisimple ring.
inline MetaReport suite_flat_projective(const std::vector<RingPtr>& rings, const Limits& limits = {},
                                        std::size_t n_max = 3)
{
    auto per_ring = [&](std::size_t i) {
        const RingPtr& ring = rings[i];
        MetaReport part;
        const auto dec = primitive_decomposition(ring, std::nullopt, limits);
        IndecomposableRegistry registry(dec, limits);
        const bool semisimple = jacobson_radical(ring).size() == 1;
        const auto modules = test_modules(ring, limits);
        std::size_t non_flat = 0, incomplete = 0;
        for (const auto& tm : modules) {
            const std::string where = ring->label() + " " + tm.label;
            ++part.reports_checked;
            const auto flat = is_flat_module(tm.module, n_max, limits, &registry);
            const auto free = is_free_module(tm.module, dec, registry, limits);
            const bool projective = *flat.projective;
            if (!flat.complete) ++incomplete;
            if (!*flat.agrees_with_projectivity)
                part.violations.push_back({where, "flat iff projective",
                                           std::string("flat=") + (flat.flat ? "true" : "false") +
                                               " projective=" + (projective ? "true" : "false")});
            if (free.free && !projective) part.violations.push_back({where, "free implies projective", free.witness});
            if (projective && !flat.flat) part.violations.push_back({where, "projective implies flat", ""});
            if (semisimple && !projective)
                part.violations.push_back({where, "semisimple ring: every module projective", ""});
            if (!flat.flat) {
                ++non_flat;
                if (non_flat <= 3)
                    part.findings.push_back("not flat: " + where + " (|M|=" + std::to_string(tm.module->size()) +
                                            "), relation r=" + detail::vec_string(flat.witness->r) +
                                            " m=" + detail::vec_string(flat.witness->m));
            }
        }
        part.findings.push_back(ring->label() + ": " + std::to_string(modules.size()) + " test modules, " +
                                std::to_string(non_flat) + " not flat" +
                                (incomplete ? ", " + std::to_string(incomplete) + " with incomplete flatness bound"
                                            : ""));
        return part;
    };
    MetaReport out;
    out.name = "flat iff projective";
    for (const auto& part : detail::fan_out(rings.size(), per_ring)) detail::merge(out, part);
    return out;
}

/// Baur-Monk invariants multiply over direct sums, for every pair of
/// quotients of R and every library pair.
inline MetaReport suite_pp_multiplicativity(const std::vector<RingPtr>& rings, const std::vector<PPPair>& library,
                                            const Limits& limits = {})
{
    auto per_ring = [&](std::size_t i) {
        const RingPtr& ring = rings[i];
        Limits local = limits;
        local.max_module = std::max<std::uint64_t>(limits.max_module, ring->size() * ring->size());
        local.max_pp = std::max<std::uint64_t>(limits.max_pp, std::uint64_t{1} << 26);
        MetaReport part;
        const ModulePtr R = regular_module(ring, local);
        std::vector<ModulePtr> modules;
        for (const auto& K : enumerate_submodules(*R, 4096)) modules.push_back(quotient_module(*R, K, local));

        std::vector<PPPair> reduced;
        for (const auto& p : library)
            reduced.push_back({p.name, p.phi.reduced_mod(ring->size()), p.psi.reduced_mod(ring->size())});

        std::vector<std::vector<Invariant>> single(modules.size());
        for (std::size_t m = 0; m < modules.size(); ++m)
            for (const auto& p : reduced) single[m].push_back(baur_monk_invariant(*modules[m], p.phi, p.psi, local));

        std::size_t pairs = 0;
        for (std::size_t a = 0; a < modules.size(); ++a)
            for (std::size_t b = a; b < modules.size(); ++b) {
                const ModulePtr sum = direct_sum(modules[a], modules[b], local);
                ++pairs;
                for (std::size_t f = 0; f < reduced.size(); ++f) {
                    const Invariant s = baur_monk_invariant(*sum, reduced[f].phi, reduced[f].psi, local);
                    const Invariant &x = single[a][f], &y = single[b][f];
                    ++part.reports_checked;
                    if (s.index != x.index * y.index || s.numerator != x.numerator * y.numerator ||
                        s.denominator != x.denominator * y.denominator)
                        part.violations.push_back(
                            {ring->label(), "invariant multiplicativity",
                             reduced[f].name + " on R/K" + std::to_string(a) + " ⊕ R/K" + std::to_string(b) + ": " +
                                 std::to_string(s.index) + " != " + std::to_string(x.index) + "·" +
                                 std::to_string(y.index)});
                }
            }
        part.findings.push_back(ring->label() + ": " + std::to_string(modules.size()) + " cyclic modules, " +
                                std::to_string(pairs) + " pairs, " + std::to_string(reduced.size()) + " formula pairs");
        return part;
    };
    MetaReport out;
    out.name = "invariant multiplicativity";
    for (const auto& part : detail::fan_out(rings.size(), per_ring)) detail::merge(out, part);
    return out;
}

/// Decomposition signatures of R and R^2 agree across seeded search orders
/// and with the deterministic order.
inline MetaReport suite_krull_schmidt_seeds(const std::vector<RingPtr>& rings, std::size_t seeds,
                                            const Limits& limits = {})
{
    auto per_ring = [&](std::size_t i) {
        const RingPtr& ring = rings[i];
        Limits local = limits;
        local.max_module = std::max<std::uint64_t>(limits.max_module, ring->size() * ring->size());
        MetaReport part;
        const std::vector<std::pair<std::string, ModulePtr>> modules{{"R", regular_module(ring, local)},
                                                                     {"R^2", free_module(ring, 2, local)}};
        auto signature = [&](const ModulePtr& M, std::optional<std::uint64_t> seed) {
            const auto dec = primitive_decomposition(ring, seed, local);
            IndecomposableRegistry registry(dec, local);
            return krull_schmidt(M, registry, seed, local).signature;
        };
        for (const auto& [name, M] : modules) {
            const auto base = signature(M, std::nullopt);
            std::string seen = base.to_string();
            for (std::uint64_t s = 1; s <= seeds; ++s) {
                const auto sig = signature(M, s);
                ++part.reports_checked;
                if (!(sig == base))
                    part.violations.push_back({ring->label(), "signature independent of search order",
                                               name + ": seed " + std::to_string(s) + " gives " + sig.to_string() +
                                                   ", default " + base.to_string()});
            }
            part.findings.push_back(ring->label() + " " + name + ": " + seen);
        }
        return part;
    };
    MetaReport out;
    out.name = "Krull-Schmidt seeds";
    for (const auto& part : detail::fan_out(rings.size(), per_ring)) detail::merge(out, part);
    return out;
}

/// The decomposition of the regular module matches the primitive idempotent
/// classes and multiplicities, and the sizes multiply to |R|.
inline MetaReport suite_regular_decomposition(const std::vector<RingPtr>& rings, const Limits& limits = {})
{
    auto per_ring = [&](std::size_t i) {
        const RingPtr& ring = rings[i];
        MetaReport part;
        ++part.reports_checked;
        const auto dec = primitive_decomposition(ring, std::nullopt, limits);
        IndecomposableRegistry registry(dec, limits);
        const auto ks = krull_schmidt(regular_module(ring, limits), registry, std::nullopt, limits);
        DecompositionSignature expected;
        std::uint64_t product = 1;
        for (std::size_t c = 0; c < dec.class_count(); ++c) {
            expected.classes.emplace_back(c, dec.multiplicity(c));
            for (std::size_t k = 0; k < dec.multiplicity(c); ++k) product *= dec.representatives[c]->size();
        }
        if (!(ks.signature == expected))
            part.violations.push_back({ring->label(), "regular decomposition matches primitive idempotents",
                                       ks.signature.to_string() + " vs " + expected.to_string()});
        if (product != ring->size())
            part.violations.push_back({ring->label(), "product of |P_i|^r_i equals |R|", std::to_string(product)});
        part.findings.push_back(ring->label() + ": " + ks.signature.to_string());
        return part;
    };
    MetaReport out;
    out.name = "regular decomposition";
    for (const auto& part : detail::fan_out(rings.size(), per_ring)) detail::merge(out, part);
    return out;
}

struct SuiteOptions {
    std::size_t seeds = 3;
    std::size_t random_rings = 100;
    std::uint64_t random_seed = 20240601;
    bool inject_corrupted = false;
    std::string pp_library = default_pp_library_path();
    Limits limits = Limits::from_env();
};

/// Every suite over the built-in corpus; a ring that fails its axioms is
/// reported and left out of the later suites.
inline std::vector<MetaReport> run_all_suites(const SuiteOptions& opt)
{
    std::vector<RingPtr> rings;
    for (const auto& spec : builtin_corpus()) rings.push_back(build_ring(spec, opt.limits));
    std::vector<RingPtr> axiom_rings = rings;
    if (opt.inject_corrupted) axiom_rings.push_back(corrupted_ring());

    std::vector<MetaReport> out;
    out.push_back(suite_ring_axioms(axiom_rings, opt.limits));

    auto reports = classify_all(rings, opt.limits);
    std::vector<RingPtr> randoms;
    for (const auto& r : random_rings(opt.random_rings, opt.random_seed, 16, opt.limits)) randoms.push_back(r.ring);
    for (auto& r : classify_all(randoms, opt.limits)) reports.push_back(std::move(r));
    for (auto& r : symbolic_reports()) reports.push_back(std::move(r));
    out.push_back(verify_implication_chain(reports));
    out.push_back(free_projective_check(reports));

    out.push_back(suite_flat_projective(rings, opt.limits));
    out.push_back(suite_pp_multiplicativity(rings, load_pp_library(opt.pp_library), opt.limits));
    out.push_back(suite_krull_schmidt_seeds(rings, opt.seeds, opt.limits));
    out.push_back(suite_regular_decomposition(rings, opt.limits));
    return out;
}

}  // namespace modclass
