#pragma once

// Brute-force reference computations used to check the engine. Each one
// works from the ring and module tables only and shares no search code
// with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "modclass.hpp"

namespace oracle {

using modclass::Element;
using modclass::FiniteModule;
using modclass::FiniteRing;

inline std::vector<Element> units(const FiniteRing& R)
{
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        for (Element y = 0; y < R.size(); ++y)
            if (R.mul(x, y) == R.one() && R.mul(y, x) == R.one()) {
                out.push_back(x);
                break;
            }
    return out;
}

inline std::vector<Element> idempotents(const FiniteRing& R)
{
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        if (R.mul(x, x) == x) out.push_back(x);
    return out;
}

/// Closure of a seed set under +, and under left (side 0), right (1) or
/// both (2) multiplication by ring elements. Naive fixpoint iteration.
inline std::vector<Element> closure(const FiniteRing& R, int side, std::vector<Element> seeds)
{
    std::vector<char> in(R.size(), 0);
    in[R.zero()] = 1;
    for (const Element s : seeds) in[s] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Element a = 0; a < R.size(); ++a) {
            if (!in[a]) continue;
            for (Element b = 0; b < R.size(); ++b) {
                std::vector<Element> next;
                if (in[b]) next.push_back(R.add(a, b));
                if (side != 1) next.push_back(R.mul(b, a));
                if (side != 0) next.push_back(R.mul(a, b));
                for (const Element c : next)
                    if (!in[c]) in[c] = changed = 1;
            }
        }
    }
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

/// Every one-sided or two-sided ideal, as the set of closures of all
/// subsets reachable by adding single elements.
inline std::vector<std::vector<Element>> ideals(const FiniteRing& R, int side)
{
    std::set<std::vector<Element>> seen{closure(R, side, {})};
    std::vector<std::vector<Element>> frontier{*seen.begin()};
    while (!frontier.empty()) {
        std::vector<std::vector<Element>> next;
        for (const auto& I : frontier)
            for (Element x = 0; x < R.size(); ++x) {
                if (std::binary_search(I.begin(), I.end(), x)) continue;
                auto seeds = I;
                seeds.push_back(x);
                auto J = closure(R, side, seeds);
                if (seen.insert(J).second) next.push_back(std::move(J));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline bool subset(const std::vector<Element>& a, const std::vector<Element>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Intersection of all maximal left ideals.
inline std::vector<Element> radical_by_maximal_left_ideals(const FiniteRing& R)
{
    const auto all = ideals(R, 0);
    std::vector<char> in(R.size(), 1);
    for (const auto& I : all) {
        if (I.size() == R.size()) continue;
        bool maximal = true;
        for (const auto& J : all)
            if (J.size() > I.size() && J.size() < R.size() && subset(I, J)) maximal = false;
        if (!maximal) continue;
        std::vector<char> mask(R.size(), 0);
        for (const Element x : I) mask[x] = 1;
        for (Element x = 0; x < R.size(); ++x) in[x] = in[x] && mask[x];
    }
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

/// Calls visit(f) for every function M -> N given as a value table.
inline void all_functions(std::uint64_t m, std::uint64_t n, const std::function<void(const std::vector<Element>&)>& visit)
{
    std::vector<Element> f(m, 0);
    while (true) {
        visit(f);
        std::size_t i = 0;
        while (i < m && ++f[i] == n) f[i++] = 0;
        if (i == m) return;
    }
}

inline bool is_linear(const FiniteModule& M, const FiniteModule& N, const std::vector<Element>& f)
{
    const FiniteRing& R = *M.ring();
    for (Element a = 0; a < M.size(); ++a) {
        for (Element b = 0; b < M.size(); ++b)
            if (f[M.add(a, b)] != N.add(f[a], f[b])) return false;
        for (Element r = 0; r < R.size(); ++r)
            if (f[M.act(r, a)] != N.act(r, f[a])) return false;
    }
    return true;
}

/// Number of R-linear maps M -> N among all |N|^|M| functions.
inline std::uint64_t hom_count(const FiniteModule& M, const FiniteModule& N)
{
    std::uint64_t count = 0;
    all_functions(M.size(), N.size(), [&](const std::vector<Element>& f) { count += is_linear(M, N, f); });
    return count;
}

/// Whether some linear p : M -> M satisfies p∘p = p with p != 0, id.
inline bool has_nontrivial_idempotent_endo(const FiniteModule& M)
{
    bool found = false;
    all_functions(M.size(), M.size(), [&](const std::vector<Element>& p) {
        if (found || !is_linear(M, M, p)) return;
        bool idem = true, zero = true, id = true;
        for (Element a = 0; a < M.size(); ++a) {
            idem = idem && p[p[a]] == p[a];
            zero = zero && p[a] == 0;
            id = id && p[a] == a;
        }
        found = idem && !zero && !id;
    });
    return found;
}

/// {x in M : exists y in M^q with the equations}, by joint enumeration of
/// (x, y). One free variable.
inline std::vector<Element> pp_solutions(const FiniteModule& M, const modclass::PPFormula& phi)
{
    const std::size_t q = phi.bound_vars;
    std::vector<Element> out;
    for (Element x = 0; x < M.size(); ++x) {
        bool ok = false;
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < q; ++k) total *= M.size();
        for (std::uint64_t t = 0; t < total && !ok; ++t) {
            std::vector<Element> y(q);
            std::uint64_t u = t;
            for (std::size_t k = 0; k < q; ++k) {
                y[k] = static_cast<Element>(u % M.size());
                u /= M.size();
            }
            bool all = true;
            for (const auto& eq : phi.equations) {
                Element s = M.act(eq[0], x);
                for (std::size_t k = 0; k < q; ++k) s = M.add(s, M.act(eq[1 + k], y[k]));
                all = all && s == M.zero();
            }
            ok = all;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

/// Relation condition for a single coefficient r and one element m with
/// r·m = 0: exists a 1 x l row H over R with rH = 0 and m' in M^l, Hm' = m,
/// trying every l <= max_l.
inline bool relation_factors(const FiniteModule& M, Element r, Element m, std::size_t max_l)
{
    const FiniteRing& R = *M.ring();
    std::vector<Element> killed;
    for (Element h = 0; h < R.size(); ++h)
        if (R.mul(r, h) == R.zero()) killed.push_back(h);
    for (std::size_t l = 1; l <= max_l; ++l) {
        std::vector<std::size_t> hi(l, 0);
        std::vector<Element> mp(l, 0);
        while (true) {
            while (true) {
                Element s = M.zero();
                for (std::size_t j = 0; j < l; ++j) s = M.add(s, M.act(killed[hi[j]], mp[j]));
                if (s == m) return true;
                std::size_t j = 0;
                while (j < l && ++mp[j] == M.size()) mp[j++] = 0;
                if (j == l) break;
            }
            std::size_t j = 0;
            while (j < l && ++hi[j] == killed.size()) hi[j++] = 0;
            if (j == l) break;
        }
    }
    return false;
}

/// Flatness restricted to relations of length one.
inline bool flat_length_one(const FiniteModule& M, std::size_t max_l)
{
    const FiniteRing& R = *M.ring();
    for (Element r = 0; r < R.size(); ++r)
        for (Element m = 0; m < M.size(); ++m)
            if (M.act(r, m) == M.zero() && !relation_factors(M, r, m, max_l)) return false;
    return true;
}

/// Whether the canonical surjection pi : F -> M has a linear section, by
/// enumeration of every function M -> F.
inline bool has_section(const FiniteModule& F, const FiniteModule& M, const std::vector<Element>& pi)
{
    bool found = false;
    all_functions(M.size(), F.size(), [&](const std::vector<Element>& s) {
        if (found) return;
        for (Element a = 0; a < M.size(); ++a)
            if (pi[s[a]] != a) return;
        found = is_linear(M, F, s);
    });
    return found;
}

}  // namespace oracle
