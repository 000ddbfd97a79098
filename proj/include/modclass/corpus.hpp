#pragma once

// Built-in rings, generated test modules and random small rings.

#include <random>
#include <string>
#include <vector>

#include "modclass/classifier.hpp"
#include "modclass/ideals.hpp"
#include "modclass/properties.hpp"
#include "modclass/ring_spec.hpp"

namespace modclass {

inline const std::vector<std::string>& builtin_corpus()
{
    static const std::vector<std::string> specs{
        "GF(2)", "GF(3)", "GF(4)", "Z/4", "Z/6", "Z/8", "Z/12", "PolyQuot(GF(2),[0,0,1])",
        "T(2,GF(2))", "M(2,GF(2))", "M(2,GF(3))", "GF(2) x M(2,GF(2))",
    };
    return specs;
}

struct TestModule {
    std::string label;
    ModulePtr module;
};

/// Every quotient R^g/K, g = 1, 2, with R^g inside the module cap.
inline std::vector<TestModule> test_modules(const RingPtr& ring, const Limits& limits = {},
                                            std::size_t max_submodules = 4096)
{
    std::vector<TestModule> out;
    for (std::size_t g = 1; g <= 2; ++g) {
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < g; ++i) size *= ring->size();
        if (size > limits.max_module) break;
        const ModulePtr F = free_module(ring, g, limits);
        const auto subs = enumerate_submodules(*F, max_submodules);
        for (std::size_t i = 0; i < subs.size(); ++i)
            out.push_back({"R^" + std::to_string(g) + "/K" + std::to_string(i) + " (|K|=" +
                               std::to_string(subs[i].size()) + ")",
                           quotient_module(*F, subs[i], limits)});
    }
    return out;
}

namespace detail {

/// Structure-constant JSON of the unital subring of R spanned by `elements`
/// (sorted, closed under + and ·).
inline nlohmann::json subring_json(const FiniteRing& R, const std::vector<Element>& elements)
{
    const std::size_t n = elements.size();
    auto local = [&](Element x) {
        return static_cast<std::uint32_t>(std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
    };
    auto add = [&](std::uint32_t a, std::uint32_t b) { return local(R.add(elements[a], elements[b])); };
    const auto dec = cyclic_decomposition(n, local(R.zero()), add);
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = dec.coordinate[local(R.mul(elements[dec.elements[a]], elements[dec.elements[b]]))];
    return {{"orders", dec.orders}, {"one", dec.coordinate[local(R.one())]}, {"table", table}};
}

inline const std::vector<std::string>& ambient_rings()
{
    static const std::vector<std::string> specs{
        "T(3,GF(2))", "M(2,GF(2))", "Z/4 x T(2,GF(2))", "PolyQuot(Z/4,[2,0,1])", "Z/8 x Z/2",
        "GF(4) x Z/4", "T(2,Z/4)", "PolyQuot(GF(2),[0,0,0,1]) x Z/2", "Z/16", "GF(2) x GF(2) x GF(2) x GF(2)",
        "PolyQuot(Z/2,[1,1,1]) x Z/3", "T(2,GF(3))",
    };
    return specs;
}

}  // namespace detail

struct RandomRing {
    std::string origin;
    nlohmann::json structure;
    RingPtr ring;
};

/// Rings of size at most `max_size` drawn as unital subrings of small ambient
/// rings generated by one or two random elements, sometimes followed by a
/// quotient by a random two-sided ideal. Each result is rebuilt from its
/// structure-constant JSON.
inline std::vector<RandomRing> random_rings(std::size_t count, std::uint64_t seed, std::size_t max_size = 16,
                                            const Limits& limits = {})
{
    std::vector<RingPtr> ambient;
    for (const auto& s : detail::ambient_rings()) ambient.push_back(build_ring(s, limits));

    std::mt19937_64 rng(seed);
    std::vector<RandomRing> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 1)) throw ConsistencyError("random_rings: too many rejected draws");
        const std::size_t which = rng() % ambient.size();
        const FiniteRing& A = *ambient[which];
        const std::size_t gens_count = 1 + rng() % 2;
        std::vector<Element> gens;
        for (std::size_t i = 0; i < gens_count; ++i) gens.push_back(static_cast<Element>(rng() % A.size()));

        auto add = [&A](std::uint32_t a, std::uint32_t b) { return A.add(a, b); };
        std::vector<std::uint32_t> seeds{A.one()};
        seeds.insert(seeds.end(), gens.begin(), gens.end());
        const auto span = additive_closure(A.size(), A.zero(), add, seeds, [&](std::uint32_t x, auto&& emit) {
            for (const Element g : gens) {
                emit(A.mul(x, g));
                emit(A.mul(g, x));
            }
        });
        if (span.size() > max_size && rng() % 4 != 0) continue;
        const auto elements = span.sorted();

        std::string origin = "subring of " + A.label() + " generated by " + detail::join_elements(gens);
        auto structure = detail::subring_json(A, elements);
        RingPtr ring = struct_const_from_json(structure, "StructConst(random)", limits);

        if (ring->size() > max_size || rng() % 2 == 0) {
            const Element x = static_cast<Element>(1 + rng() % (ring->size() - 1));
            const Ideal I = ideal_generated(ring, Side::TwoSided, {x});
            if (I.is_whole()) continue;
            ring = quotient_ring(ring, I, limits);
            origin += ", modulo the ideal generated by " + std::to_string(x);
            structure = struct_const_json(*ring);
            ring = struct_const_from_json(structure, "StructConst(random)", limits);
        }
        if (ring->size() > max_size) continue;
        const std::string label = "StructConst(random-" + std::to_string(out.size()) + ")";
        ring = struct_const_from_json(structure, label, limits);
        out.push_back({origin, std::move(structure), std::move(ring)});
    }
    return out;
}

}  // namespace modclass
