#pragma once

// Positive-primitive formulas over finite modules.

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "modclass/ideals.hpp"
#include "modclass/module.hpp"

namespace modclass {

/// exists y_1..y_q : for each equation j, sum_i a_ji x_i + sum_k b_jk y_k = 0.
/// Each equation row holds the p coefficients of x followed by the q of y.
struct PPFormula {
    std::size_t free_vars = 1;
    std::size_t bound_vars = 0;
    std::vector<std::vector<Element>> equations;

    void validate(const FiniteRing& R) const
    {
        for (const auto& eq : equations) {
            if (eq.size() != free_vars + bound_vars)
                throw ValidationError("pp formula: equation has " + std::to_string(eq.size()) + " coefficients, expected " +
                                      std::to_string(free_vars + bound_vars));
            for (const Element c : eq)
                if (c >= R.size()) throw ValidationError("pp formula: coefficient outside the ring");
        }
    }

    /// Same formula with every coefficient index reduced modulo `size`.
    PPFormula reduced_mod(std::uint64_t size) const
    {
        PPFormula out = *this;
        for (auto& eq : out.equations)
            for (auto& c : eq) c = static_cast<Element>(c % size);
        return out;
    }

    /// Formula obtained by keeping only the listed equations.
    PPFormula with_equations(const std::vector<std::size_t>& keep) const
    {
        PPFormula out{free_vars, bound_vars, {}};
        for (const auto j : keep) out.equations.push_back(equations.at(j));
        return out;
    }

    bool operator==(const PPFormula&) const = default;
};

inline nlohmann::json to_json(const PPFormula& f)
{
    return {{"free", f.free_vars}, {"bound", f.bound_vars}, {"eqs", f.equations}};
}

inline PPFormula pp_from_json(const nlohmann::json& j)
{
    PPFormula f;
    try {
        f.free_vars = j.at("free").get<std::size_t>();
        f.bound_vars = j.at("bound").get<std::size_t>();
        f.equations = j.at("eqs").get<std::vector<std::vector<Element>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pp formula: ") + e.what());
    }
    for (const auto& eq : f.equations)
        if (eq.size() != f.free_vars + f.bound_vars)
            throw ParseError("pp formula: equation length does not match free + bound");
    return f;
}

/// Solution set of a pp formula: sorted p-tuples, tuple index sum x_i |M|^i.
struct PPSubgroup {
    std::size_t arity = 1;
    std::vector<std::uint64_t> tuples;

    std::size_t size() const { return tuples.size(); }
    bool contains(std::uint64_t t) const { return std::binary_search(tuples.begin(), tuples.end(), t); }
};

namespace detail {

inline std::uint64_t power_capped(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > cap) return cap + 1;
    }
    return out;
}

/// Encodes one value per equation as a single key.
inline std::uint64_t key_of(const std::vector<Element>& values, std::uint64_t base)
{
    std::uint64_t k = 0;
    for (std::size_t i = values.size(); i-- > 0;) k = k * base + values[i];
    return k;
}

}  // namespace detail

/// {x : exists y with all equations}. Every witness tuple y is enumerated and
/// its contribution -B(y) stored; x qualifies when A(x) is among them.
inline PPSubgroup pp_evaluate(const FiniteModule& M, const PPFormula& phi, const Limits& limits = {})
{
    const FiniteRing& R = *M.ring();
    phi.validate(R);
    const std::size_t p = phi.free_vars, q = phi.bound_vars, e = phi.equations.size();
    const std::uint64_t nx = detail::power_capped(M.size(), p, limits.max_pp);
    const std::uint64_t ny = detail::power_capped(M.size(), q, limits.max_pp);
    if (nx + ny > limits.max_pp)
        throw CapExceeded("pp evaluation: assignments exceed cap " + std::to_string(limits.max_pp));
    if (detail::power_capped(M.size(), e, ~std::uint64_t{0} >> 1) > (std::uint64_t{1} << 62))
        throw CapExceeded("pp evaluation: too many equations to key");

    auto split = [&](std::uint64_t t, std::size_t n) {
        std::vector<Element> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<Element>(t % M.size());
            t /= M.size();
        }
        return v;
    };

    std::unordered_set<std::uint64_t> reachable;
    std::vector<Element> val(e);
    for (std::uint64_t t = 0; t < ny; ++t) {
        const auto y = split(t, q);
        for (std::size_t j = 0; j < e; ++j) {
            Element s = M.zero();
            for (std::size_t k = 0; k < q; ++k) s = M.add(s, M.act(phi.equations[j][p + k], y[k]));
            val[j] = M.neg(s);
        }
        reachable.insert(detail::key_of(val, M.size()));
    }

    PPSubgroup out;
    out.arity = p;
    for (std::uint64_t t = 0; t < nx; ++t) {
        const auto x = split(t, p);
        for (std::size_t j = 0; j < e; ++j) {
            Element s = M.zero();
            for (std::size_t i = 0; i < p; ++i) s = M.add(s, M.act(phi.equations[j][i], x[i]));
            val[j] = s;
        }
        if (reachable.count(detail::key_of(val, M.size()))) out.tuples.push_back(t);
    }

    // Must be an additive subgroup of M^p.
    if (nx <= (std::uint64_t{1} << 26)) {
        auto add = [&](std::uint32_t a, std::uint32_t b) {
            std::uint64_t o = 0, scale = 1;
            for (std::size_t i = 0; i < p; ++i) {
                o += scale * M.add(static_cast<Element>(a % M.size()), static_cast<Element>(b % M.size()));
                a /= static_cast<std::uint32_t>(M.size());
                b /= static_cast<std::uint32_t>(M.size());
                scale *= M.size();
            }
            return static_cast<std::uint32_t>(o);
        };
        Subgroup<decltype(add)> span(nx, 0, add);
        for (const auto t : out.tuples) {
            span.join_cyclic(static_cast<std::uint32_t>(t));
            if (span.size() > out.tuples.size()) break;
        }
        if (span.size() != out.tuples.size()) throw ConsistencyError("pp evaluation produced a non-subgroup");
    }
    return out;
}

struct RightIdealCheck {
    bool right_ideal = false;
    std::vector<Element> elements;
    std::vector<Element> generators;
};

/// phi(R) on the regular module, checked for closure under right
/// multiplication.
inline RightIdealCheck pp_subgroup_is_right_ideal(const RingPtr& ring, const PPFormula& phi, const Limits& limits = {})
{
    if (phi.free_vars != 1) throw PreconditionError("pp_subgroup_is_right_ideal: formula must have one free variable");
    const ModulePtr regular = regular_module(ring, limits);
    const PPSubgroup sol = pp_evaluate(*regular, phi, limits);
    RightIdealCheck out;
    // Carrier index of the regular module is the ring index.
    for (const auto t : sol.tuples) out.elements.push_back(static_cast<Element>(regular->reps()[t]));
    std::sort(out.elements.begin(), out.elements.end());
    out.right_ideal = is_ideal(*ring, Side::Right, out.elements);
    if (out.right_ideal) out.generators = detail::greedy_generators(*ring, Side::Right, out.elements);
    return out;
}

struct Invariant {
    std::uint64_t numerator = 1;     // |phi(M)|
    std::uint64_t denominator = 1;   // |phi(M) ∩ psi(M)|
    std::uint64_t index = 1;

    bool operator==(const Invariant&) const = default;
};

/// Index of phi(M) ∩ psi(M) in phi(M).
inline Invariant baur_monk_invariant(const FiniteModule& M, const PPFormula& phi, const PPFormula& psi,
                                     const Limits& limits = {})
{
    if (phi.free_vars != 1 || psi.free_vars != 1)
        throw PreconditionError("baur_monk_invariant: formulas must have one free variable");
    const auto a = pp_evaluate(M, phi, limits);
    const auto b = pp_evaluate(M, psi, limits);
    std::uint64_t common = 0;
    for (const auto t : a.tuples)
        if (b.contains(t)) ++common;
    if (common == 0 || a.size() % common != 0) throw ConsistencyError("pp subgroups do not nest");
    return {a.size(), common, a.size() / common};
}

}  // namespace modclass
