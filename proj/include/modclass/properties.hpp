#pragma once

// Freeness, projectivity and flatness of finite modules.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modclass/decompose.hpp"
#include "modclass/ideals.hpp"

namespace modclass {

/// The surjection R^g -> M sending the i-th basis vector to the i-th generator.
inline ModuleHom canonical_surjection(const ModulePtr& M, const Limits& limits = {})
{
    const ModulePtr F = free_module(M->ring(), M->num_generators(), limits);
    ModuleHom pi{F, M, std::vector<Element>(F->size())};
    for (Element x = 0; x < F->size(); ++x) pi.map[x] = M->coset_of(F->reps()[x]);
    return pi;
}

/// A hom s with pi∘s = id, or nullopt when none exists. Generator images are
/// drawn from the fibres of pi over the generators.
inline std::optional<ModuleHom> split_surjection_search(const ModuleHom& pi, const Limits& limits = {})
{
    const ModulePtr& F = pi.source;
    const ModulePtr& M = pi.target;
    if (image_of(pi).size() != M->size()) throw PreconditionError("split_surjection_search: map is not surjective");
    std::vector<std::vector<Element>> fibres(M->num_generators());
    for (Element x = 0; x < F->size(); ++x)
        for (std::size_t i = 0; i < M->num_generators(); ++i)
            if (pi.map[x] == M->generator(i)) fibres[i].push_back(x);
    std::optional<ModuleHom> section;
    HomSearch search(*M, *F, std::move(fibres), limits.max_homs);
    search.run([&](const std::vector<Element>& images) {
        section = hom_from_images(M, F, images);
        return true;
    });
    return section;
}

/// Regular-module multiplicities r_i for the registry's projective classes.
inline std::vector<std::size_t> regular_multiplicities(const IdempotentDecomposition& dec)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dec.class_count(); ++i) out.push_back(dec.multiplicity(i));
    return out;
}

struct FreeResult {
    bool free = false;
    std::optional<std::size_t> rank;   // c with M ≅ R^c
    std::string witness;
    DecompositionSignature signature;
};

/// M is free iff its signature is c·(r_1, ..., r_k) over the classes of the
/// regular module.
inline FreeResult is_free_module(const ModulePtr& M, const IdempotentDecomposition& dec,
                                 IndecomposableRegistry& registry, const Limits& limits = {})
{
    FreeResult out;
    out.signature = krull_schmidt(M, registry, std::nullopt, limits).signature;
    const auto r = regular_multiplicities(dec);
    for (const auto& [id, mult] : out.signature.classes) {
        if (id >= r.size()) {
            out.witness = "summand class " + std::to_string(id) + " is not projective";
            return out;
        }
    }
    const std::size_t c = out.signature.multiplicity(0) / r[0];
    for (std::size_t i = 0; i < r.size(); ++i) {
        const std::size_t m = out.signature.multiplicity(i);
        if (m != c * r[i]) {
            out.witness = "P" + std::to_string(i) + " occurs " + std::to_string(m) + " times; a free module needs c·" +
                          std::to_string(r[i]) + " with c = " + std::to_string(out.signature.multiplicity(0)) + "/" +
                          std::to_string(r[0]) + " from P0";
            return out;
        }
    }
    out.free = true;
    out.rank = c;
    out.witness = "M ≅ R^" + std::to_string(c);
    return out;
}

struct ProjectiveResult {
    bool projective = false;
    std::optional<bool> by_signature;
    std::optional<bool> by_splitting;
    std::optional<DecompositionSignature> signature;
    std::optional<ModuleHom> section;
    std::string witness;
};

/// Signature method (every summand is some P_i) cross-checked by the
/// splitting oracle (a section of R^g -> M). Either may be skipped when it
/// exceeds its caps; both skipped is an error, disagreement is a
/// ConsistencyError.
inline ProjectiveResult is_projective_module(const ModulePtr& M, IndecomposableRegistry& registry,
                                             const Limits& limits = {})
{
    ProjectiveResult out;
    try {
        const auto ks = krull_schmidt(M, registry, std::nullopt, limits);
        bool ok = true;
        for (const auto& [id, mult] : ks.signature.classes)
            if (id >= registry.projective_count()) {
                ok = false;
                out.witness = "summand class " + std::to_string(id) + " is not an indecomposable projective";
                break;
            }
        out.by_signature = ok;
        out.signature = ks.signature;
    } catch (const CapExceeded&) {
    }
    try {
        const ModuleHom pi = canonical_surjection(M, limits);
        out.section = split_surjection_search(pi, limits);
        out.by_splitting = out.section.has_value();
        if (!out.section && out.witness.empty()) out.witness = "the canonical surjection R^g -> M has no section";
    } catch (const CapExceeded&) {
    }
    if (!out.by_signature && !out.by_splitting)
        throw CapExceeded("is_projective_module: both decomposition and splitting search exceed caps");
    if (out.by_signature && out.by_splitting && *out.by_signature != *out.by_splitting)
        throw ConsistencyError("is_projective_module: signature and splitting methods disagree");
    out.projective = out.by_signature ? *out.by_signature : *out.by_splitting;
    if (out.projective && out.witness.empty()) out.witness = "direct summand of a free module";
    return out;
}

struct FlatViolation {
    std::vector<Element> r;   // ring coefficients
    std::vector<Element> m;   // module elements with sum r_i m_i = 0
};

struct FlatResult {
    bool flat = true;                  // no violation up to the bound
    bool complete = true;              // every right ideal was reached within the bound
    std::size_t relation_length_bound = 0;
    std::size_t ideals_checked = 0;
    std::optional<FlatViolation> witness;
    std::optional<bool> projective;    // recorded when a registry is supplied
    std::optional<bool> agrees_with_projectivity;
    std::string note;
};

namespace detail {

/// Tuples in M^n indexed as sum m_i |M|^i.
struct TupleSpace {
    const FiniteModule& M;
    std::size_t n;

    std::vector<Element> split(std::uint64_t x) const
    {
        std::vector<Element> d(n);
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = static_cast<Element>(x % M.size());
            x /= M.size();
        }
        return d;
    }
    std::uint64_t join(const std::vector<Element>& d) const
    {
        std::uint64_t x = 0;
        for (std::size_t i = n; i-- > 0;) x = x * M.size() + d[i];
        return x;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
            out += scale * M.add(static_cast<Element>(a % M.size()), static_cast<Element>(b % M.size()));
            a /= static_cast<std::uint32_t>(M.size());
            b /= static_cast<std::uint32_t>(M.size());
            scale *= M.size();
        }
        return static_cast<std::uint32_t>(out);
    }
};

struct RightIdealEntry {
    std::vector<Element> elements;
    std::vector<Element> generators;
};

/// Right ideals reachable with at most `max_gens` generators, breadth first,
/// each with a generating tuple of least length. `complete` reports whether
/// one more level would have produced nothing new.
inline std::vector<RightIdealEntry> right_ideals_by_generators(const FiniteRing& R, std::size_t max_gens,
                                                               bool& complete)
{
    std::vector<RightIdealEntry> out{{{R.zero()}, {}}};
    std::set<std::vector<Element>> seen{out.front().elements};
    complete = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto current = out[i];
        for (Element x = 0; x < R.size(); ++x) {
            if (std::binary_search(current.elements.begin(), current.elements.end(), x)) continue;
            auto gens = current.generators;
            gens.push_back(x);
            auto next = ideal_closure(R, Side::Right, gens);
            if (seen.count(next)) continue;
            if (gens.size() > max_gens) {
                complete = false;
                continue;
            }
            seen.insert(next);
            out.push_back({std::move(next), std::move(gens)});
        }
    }
    return out;
}

}  // namespace detail

/// Equational flatness: for every relation sum r_i m_i = 0 with n <= bound
/// there must be H over R with rH = 0 and m' in M^l, l = number of
/// generators of M, such that Hm' = m. For fixed r the admissible m form
/// Rel(r) and the factorable ones form T(r) = sum_k {(h_1 g_k, ..., h_n g_k)
/// : rh = 0}; both are subgroups of M^n and the condition is Rel(r) = T(r).
/// The verdict for r depends only on the right ideal r_1 R + ... + r_n R, so
/// r ranges over least-length generating tuples of the right ideals.
inline FlatResult is_flat_module(const ModulePtr& Mp, std::size_t relation_length_bound, const Limits& limits = {},
                                 IndecomposableRegistry* registry = nullptr)
{
    if (relation_length_bound < 1) throw PreconditionError("is_flat_module: bound must be at least 1");
    const FiniteModule& M = *Mp;
    const FiniteRing& R = *M.ring();
    FlatResult out;
    out.relation_length_bound = relation_length_bound;

    bool complete = true;
    const auto ideals = detail::right_ideals_by_generators(R, relation_length_bound, complete);
    out.complete = complete;
    if (!complete) out.note = "some right ideals need more generators than the bound";

    for (const auto& ideal : ideals) {
        const auto& r = ideal.generators;
        const std::size_t n = r.size();
        if (n == 0) continue;
        std::uint64_t tuples = 1;
        bool fits = true;
        for (std::size_t i = 0; i < n; ++i) {
            tuples *= M.size();
            if (tuples > limits.max_tuple_bits) fits = false;
        }
        if (!fits) {
            out.complete = false;
            out.note = "relations of length " + std::to_string(n) + " exceed the tuple cap";
            continue;
        }
        const FreeCover Rn(R, n, limits);
        ++out.ideals_checked;
        const detail::TupleSpace space{M, n};

        // |Rel(r)| = |M|^n / |r_1 M + ... + r_n M|.
        std::vector<Element> seeds;
        for (const Element ri : r)
            for (Element a = 0; a < M.size(); ++a) seeds.push_back(M.act(ri, a));
        auto madd = [&M](std::uint32_t a, std::uint32_t b) { return M.add(a, b); };
        const auto image = additive_closure(M.size(), M.zero(), madd, seeds, [](Element, auto&&) {});
        const std::uint64_t rel_size = tuples / image.size();

        // T(r)
        std::vector<std::uint32_t> t_seeds;
        for (std::uint64_t h = 0; h < Rn.size(); ++h) {
            const auto hv = Rn.split(h);
            Element s = R.zero();
            for (std::size_t i = 0; i < n; ++i) s = R.add(s, R.mul(r[i], hv[i]));
            if (s != R.zero()) continue;
            for (const Element gk : M.generators()) {
                std::vector<Element> col(n);
                for (std::size_t i = 0; i < n; ++i) col[i] = M.act(hv[i], gk);
                t_seeds.push_back(static_cast<std::uint32_t>(space.join(col)));
            }
        }
        auto tadd = [&space](std::uint32_t a, std::uint32_t b) { return space.add(a, b); };
        const auto T = additive_closure(tuples, 0, tadd, t_seeds, [](std::uint32_t, auto&&) {});
        if (T.size() == rel_size) continue;

        // Violation: least m in Rel(r) \ T(r), generator tuples first.
        auto in_rel = [&](const std::vector<Element>& m) {
            Element s = M.zero();
            for (std::size_t i = 0; i < n; ++i) s = M.add(s, M.act(r[i], m[i]));
            return s == M.zero();
        };
        std::optional<std::vector<Element>> bad;
        std::vector<Element> pool{M.zero()};
        pool.insert(pool.end(), M.generators().begin(), M.generators().end());
        std::vector<std::size_t> idx(n, 0);
        while (!bad) {
            std::vector<Element> m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = pool[idx[i]];
            if (in_rel(m) && !T.contains(static_cast<std::uint32_t>(space.join(m)))) bad = m;
            std::size_t i = n;
            while (i-- > 0) {
                if (++idx[i] < pool.size()) break;
                idx[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
        for (std::uint64_t x = 0; !bad && x < tuples; ++x) {
            const auto m = space.split(x);
            if (in_rel(m) && !T.contains(static_cast<std::uint32_t>(x))) bad = m;
        }
        if (!bad) throw ConsistencyError("is_flat_module: subgroup sizes differ but no violating tuple found");
        out.flat = false;
        out.witness = FlatViolation{r, *bad};
        break;
    }

    if (registry != nullptr) {
        const auto proj = is_projective_module(Mp, *registry, limits);
        out.projective = proj.projective;
        out.agrees_with_projectivity = proj.projective == out.flat;
    }
    return out;
}

/// Every submodule of M, in discovery order starting from {0}. Each is a
/// sorted element list. Throws CapExceeded past `max_count` submodules.
inline std::vector<std::vector<Element>> enumerate_submodules(const FiniteModule& M, std::size_t max_count)
{
    std::vector<std::vector<Element>> cyclic;
    {
        std::set<std::vector<Element>> seen;
        for (Element x = 0; x < M.size(); ++x) {
            std::vector<char> hit(M.size(), 0);
            for (Element r = 0; r < M.ring()->size(); ++r) hit[M.act(r, x)] = 1;
            std::vector<Element> c;
            for (Element y = 0; y < M.size(); ++y)
                if (hit[y]) c.push_back(y);
            if (seen.insert(c).second) cyclic.push_back(std::move(c));
        }
    }
    std::vector<std::vector<Element>> out{{M.zero()}};
    std::set<std::vector<Element>> seen{out.front()};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& c : cyclic) {
            const auto& S = out[i];
            if (std::includes(S.begin(), S.end(), c.begin(), c.end())) continue;
            std::vector<char> in(M.size(), 0);
            for (const Element s : S) in[s] = 1;
            std::vector<Element> sum = S;
            for (const Element y : c) {
                if (in[y]) continue;
                for (const Element s : S) {
                    const Element z = M.add(y, s);
                    if (!in[z]) {
                        in[z] = 1;
                        sum.push_back(z);
                    }
                }
            }
            std::sort(sum.begin(), sum.end());
            if (seen.insert(sum).second) {
                if (out.size() >= max_count) throw CapExceeded("submodule enumeration exceeded cap");
                out.push_back(std::move(sum));
            }
        }
    }
    return out;
}

}  // namespace modclass
