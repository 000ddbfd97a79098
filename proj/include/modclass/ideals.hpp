#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modclass/abelian.hpp"
#include "modclass/ring.hpp"

namespace modclass {

enum class Side { Left, Right, TwoSided };

inline std::string to_string(Side s)
{
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "two-sided";
    }
    return "?";
}

struct Ideal {
    RingPtr ring;
    Side side = Side::TwoSided;
    std::vector<Element> elements;    // sorted
    std::vector<Element> generators;

    std::size_t size() const { return elements.size(); }
    bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }
    bool is_zero() const { return elements.size() == 1; }
    bool is_whole() const { return elements.size() == ring->size(); }
};

namespace detail {

inline auto ring_adder(const FiniteRing& R)
{
    return [&R](std::uint32_t a, std::uint32_t b) { return R.add(a, b); };
}

/// Least ideal of the given side containing `gens`.
inline std::vector<Element> ideal_closure(const FiniteRing& R, Side side, const std::vector<Element>& gens)
{
    const Element n = static_cast<Element>(R.size());
    auto s = additive_closure(R.size(), R.zero(), ring_adder(R), gens, [&](Element x, auto&& emit) {
        for (Element r = 0; r < n; ++r) {
            if (side != Side::Right) emit(R.mul(r, x));
            if (side != Side::Left) emit(R.mul(x, r));
        }
    });
    return s.sorted();
}

/// Greedy generating set: repeatedly take the least element outside the span.
inline std::vector<Element> greedy_generators(const FiniteRing& R, Side side, const std::vector<Element>& elements)
{
    std::vector<Element> gens;
    std::vector<Element> span{R.zero()};
    for (const Element x : elements) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = ideal_closure(R, side, gens);
    }
    return gens;
}

}  // namespace detail

inline Ideal ideal_generated(const RingPtr& R, Side side, const std::vector<Element>& gens)
{
    for (const Element g : gens)
        if (g >= R->size()) throw PreconditionError("ideal generator out of range");
    return Ideal{R, side, detail::ideal_closure(*R, side, gens), gens};
}

/// Checks additive closure and closure under the declared side(s).
inline bool is_ideal(const FiniteRing& R, Side side, const std::vector<Element>& sorted)
{
    auto in = [&](Element x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
    if (!in(R.zero())) return false;
    for (const Element a : sorted) {
        if (!in(R.neg(a))) return false;
        for (const Element b : sorted)
            if (!in(R.add(a, b))) return false;
        for (Element r = 0; r < R.size(); ++r) {
            if (side != Side::Right && !in(R.mul(r, a))) return false;
            if (side != Side::Left && !in(R.mul(a, r))) return false;
        }
    }
    return true;
}

/// Additive span of all products a·b with a in A, b in B.
inline std::vector<Element> ideal_product(const FiniteRing& R, const std::vector<Element>& A,
                                          const std::vector<Element>& B)
{
    std::vector<Element> prods;
    for (const Element a : A)
        for (const Element b : B) prods.push_back(R.mul(a, b));
    auto s = additive_closure(R.size(), R.zero(), detail::ring_adder(R), prods, [](Element, auto&&) {});
    return s.sorted();
}

struct RadicalResult {
    Ideal ideal;
    std::size_t nilpotency_index = 1;   // least m with J^m = 0
};

/// J = {x : 1 - r·x is a unit for every r}. Verified two-sided and nilpotent.
inline RadicalResult jacobson_radical_with_index(const RingPtr& Rp)
{
    const FiniteRing& R = *Rp;
    const auto unit = unit_mask(R);
    std::vector<Element> J;
    for (Element x = 0; x < R.size(); ++x) {
        bool quasi_regular = true;
        for (Element r = 0; r < R.size() && quasi_regular; ++r)
            quasi_regular = unit[R.sub(R.one(), R.mul(r, x))] != 0;
        if (quasi_regular) J.push_back(x);
    }
    if (!is_ideal(R, Side::TwoSided, J))
        throw ConsistencyError(R.label() + ": quasi-regular set is not a two-sided ideal");

    std::size_t m = 1;
    std::vector<Element> power = J;
    while (power.size() > 1) {
        power = ideal_product(R, power, J);
        if (++m > R.size()) throw ConsistencyError(R.label() + ": radical is not nilpotent");
    }
    Ideal ideal{Rp, Side::TwoSided, J, detail::greedy_generators(R, Side::TwoSided, J)};
    return {std::move(ideal), m};
}

inline Ideal jacobson_radical(const RingPtr& R) { return jacobson_radical_with_index(R).ideal; }

struct QuotientRing {
    RingPtr ring;
    std::vector<Element> projection;        // element of R -> element of R/I
    std::vector<Element> representative;    // element of R/I -> least element of its coset
};

/// R/I on the cosets of I. The quotient's additive group is re-encoded in a
/// cyclic decomposition; each coset keeps its least element as representative.
inline QuotientRing quotient_ring_map(const RingPtr& Rp, const Ideal& I, const Limits& limits = {})
{
    const FiniteRing& R = *Rp;
    if (I.side != Side::TwoSided) throw PreconditionError("quotient_ring requires a two-sided ideal");
    if (!is_ideal(R, Side::TwoSided, I.elements))
        throw PreconditionError("quotient_ring: element set is not a two-sided ideal");

    const Element n = static_cast<Element>(R.size());
    std::vector<Element> coset(n, ~Element{0});
    std::vector<Element> rep;
    for (Element x = 0; x < n; ++x) {
        if (coset[x] != ~Element{0}) continue;
        const Element id = static_cast<Element>(rep.size());
        rep.push_back(x);
        for (const Element i : I.elements) coset[R.add(x, i)] = id;
    }
    const std::size_t m = rep.size();
    auto qadd = [&](std::uint32_t a, std::uint32_t b) { return coset[R.add(rep[a], rep[b])]; };
    const CyclicDecomposition dec = cyclic_decomposition(m, coset[R.zero()], qadd);

    QuotientRing out;
    out.projection.resize(n);
    for (Element x = 0; x < n; ++x) out.projection[x] = dec.coordinate[coset[x]];
    out.representative.resize(m);
    for (std::size_t c = 0; c < m; ++c) out.representative[c] = rep[dec.elements[c]];

    const auto& proj = out.projection;
    const auto& reps = out.representative;
    auto mul = [&](Element a, Element b) { return proj[R.mul(reps[a], reps[b])]; };
    const std::string label = R.label() + " / (ideal of size " + std::to_string(I.size()) + ")";
    if (m == 1) throw PreconditionError("quotient by the whole ring is the zero ring");
    out.ring = std::make_shared<const FiniteRing>(dec.orders, proj[R.one()], label, mul, limits.table_threshold);
    return out;
}

inline RingPtr quotient_ring(const RingPtr& R, const Ideal& I, const Limits& limits = {})
{
    return quotient_ring_map(R, I, limits).ring;
}

struct LocalResult {
    bool local = false;
    std::vector<Element> maximal_ideal;             // the non-units, when local
    std::optional<std::pair<Element, Element>> witness;  // non-units with a unit sum, otherwise
};

/// Local iff the non-units are closed under addition.
inline LocalResult is_local(const FiniteRing& R)
{
    const auto unit = unit_mask(R);
    std::vector<Element> non_units;
    for (Element x = 0; x < R.size(); ++x)
        if (!unit[x]) non_units.push_back(x);
    for (const Element a : non_units)
        for (const Element b : non_units)
            if (unit[R.add(a, b)]) return {false, {}, std::make_pair(a, b)};
    return {true, non_units, std::nullopt};
}

struct SimpleResult {
    bool simple = false;
    std::optional<Ideal> proper_ideal;
};

inline SimpleResult is_simple_ring(const RingPtr& R)
{
    if (R->size() < 2) throw PreconditionError("is_simple_ring requires a nonzero ring");
    for (Element x = 1; x < R->size(); ++x) {
        Ideal I = ideal_generated(R, Side::TwoSided, {x});
        if (!I.is_whole()) return {false, std::move(I)};
    }
    return {true, std::nullopt};
}

/// Right ideals of R, ordered by discovery (breadth first from {0}).
inline std::vector<std::vector<Element>> right_ideal_lattice(const FiniteRing& R)
{
    std::vector<std::vector<Element>> out{{R.zero()}};
    std::set<std::vector<Element>> seen{out.front()};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto current = out[i];
        for (Element x = 0; x < R.size(); ++x) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<Element> seeds = current;
            seeds.push_back(x);
            auto next = detail::ideal_closure(R, Side::Right, seeds);
            if (seen.insert(next).second) out.push_back(std::move(next));
        }
    }
    return out;
}

/// Number of members in a longest chain of the inclusion order.
inline std::size_t longest_chain(const std::vector<std::vector<Element>>& lattice)
{
    std::vector<std::size_t> order(lattice.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lattice[a].size() < lattice[b].size(); });
    std::vector<std::size_t> best(lattice.size(), 1);
    std::size_t overall = lattice.empty() ? 0 : 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const auto& small = lattice[order[j]];
            const auto& big = lattice[order[i]];
            if (small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                best[order[i]] = std::max(best[order[i]], best[order[j]] + 1);
                overall = std::max(overall, best[order[i]]);
            }
        }
    return overall;
}

struct ChainConditions {
    bool right_artinian = true;
    bool left_perfect = true;
    bool right_coherent = true;
    std::string rationale;
    std::optional<std::size_t> right_ideal_count;
    std::optional<std::size_t> longest_right_chain;
};

/// Every finite ring is right artinian, hence left perfect and right coherent.
/// Small rings additionally get their right-ideal lattice enumerated.
inline ChainConditions chain_conditions(const FiniteRing& R, const Limits& limits = {})
{
    ChainConditions out;
    out.rationale =
        "finite ring: every chain of right ideals is finite, so right artinian; right artinian implies "
        "left perfect and right coherent";
    if (R.size() <= limits.ideal_enum) {
        const auto lattice = right_ideal_lattice(R);
        out.right_ideal_count = lattice.size();
        out.longest_right_chain = longest_chain(lattice);
        out.rationale += "; right-ideal lattice enumerated (" + std::to_string(lattice.size()) +
                         " ideals), so DCC holds by inspection";
    }
    return out;
}

}  // namespace modclass
