#pragma once

// Subgroup closure and cyclic decomposition for finite abelian groups whose
// elements are the indices 0..n-1 and whose law is given by a callable.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "modclass/error.hpp"

namespace modclass {

template <class Add>
class Subgroup {
public:
    Subgroup(std::size_t n, std::uint32_t zero, Add add)
        : member_(n, 0), add_(std::move(add))
    {
        member_[zero] = 1;
        elements_.push_back(zero);
    }

    bool contains(std::uint32_t x) const { return member_[x] != 0; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::vector<std::uint32_t> sorted() const
    {
        std::vector<std::uint32_t> out = elements_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// S := S + <c>. Returns true when the subgroup grew.
    bool join_cyclic(std::uint32_t c)
    {
        if (contains(c)) return false;
        const std::size_t old = elements_.size();
        std::uint32_t multiple = c;
        while (!contains(multiple)) {
            for (std::size_t i = 0; i < old; ++i) {
                const std::uint32_t y = add_(multiple, elements_[i]);
                if (!member_[y]) {
                    member_[y] = 1;
                    elements_.push_back(y);
                }
            }
            multiple = add_(multiple, c);
        }
        return true;
    }

private:
    std::vector<char> member_;
    std::vector<std::uint32_t> elements_;
    Add add_;
};

/// Least subgroup containing `seeds` and closed under `images`, where
/// images(x, emit) calls emit(y) for every y that must lie in the subgroup
/// whenever x does. The maps behind `images` must be additive.
template <class Add, class Images>
Subgroup<Add> additive_closure(std::size_t n, std::uint32_t zero, Add add,
                               const std::vector<std::uint32_t>& seeds, Images images)
{
    Subgroup<Add> s(n, zero, add);
    std::deque<std::uint32_t> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        const std::uint32_t x = queue.front();
        queue.pop_front();
        if (!s.join_cyclic(x)) continue;
        images(x, [&](std::uint32_t y) {
            if (!s.contains(y)) queue.push_back(y);
        });
    }
    return s;
}

template <class Add>
std::uint64_t additive_order(std::uint32_t x, std::uint32_t zero, Add&& add)
{
    std::uint64_t k = 1;
    for (std::uint32_t m = x; m != zero; m = add(m, x)) ++k;
    return k;
}

/// Decomposition of a finite abelian group into cyclic factors of prime
/// power order. `elements[c]` is the group element with mixed-radix
/// coordinate index c over `orders` (first factor least significant).
struct CyclicDecomposition {
    std::vector<std::uint32_t> generators;
    std::vector<std::uint32_t> orders;
    std::vector<std::uint32_t> elements;     // coordinate index -> element
    std::vector<std::uint32_t> coordinate;   // element -> coordinate index
};

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p)
{
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace detail

/// Greedy basis: within each p-primary part repeatedly take an element whose
/// order modulo the current span is maximal and whose order in the group
/// equals it, so the span stays a direct sum.
template <class Add>
CyclicDecomposition cyclic_decomposition(std::size_t n, std::uint32_t zero, Add add)
{
    std::vector<std::uint64_t> order(n);
    for (std::uint32_t x = 0; x < n; ++x) order[x] = additive_order(x, zero, add);

    CyclicDecomposition out;
    for (const std::uint64_t p : detail::prime_factors(n)) {
        std::vector<std::uint32_t> part;
        for (std::uint32_t x = 0; x < n; ++x)
            if (detail::is_power_of(order[x], p)) part.push_back(x);

        Subgroup<Add> span(n, zero, add);
        while (span.size() < part.size()) {
            std::uint64_t best = 0;
            std::uint32_t pick = 0;
            bool found = false;
            for (const std::uint32_t x : part) {
                if (span.contains(x)) continue;
                std::uint64_t k = 1;
                for (std::uint32_t m = x; !span.contains(m); m = add(m, x)) ++k;
                if (k > best) {
                    best = k;
                    found = false;
                }
                if (k == best && !found && order[x] == k) {
                    pick = x;
                    found = true;
                }
            }
            if (!found) throw ConsistencyError("cyclic decomposition: no liftable element");
            out.generators.push_back(pick);
            out.orders.push_back(static_cast<std::uint32_t>(best));
            span.join_cyclic(pick);
        }
    }

    out.elements.assign(n, zero);
    out.coordinate.assign(n, 0);
    // Enumerate coordinate tuples in mixed-radix order.
    std::vector<std::uint32_t> digit(out.orders.size(), 0);
    for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t e = zero;
        for (std::size_t i = 0; i < digit.size(); ++i) {
            for (std::uint32_t k = 0; k < digit[i]; ++k) e = add(e, out.generators[i]);
        }
        out.elements[c] = e;
        out.coordinate[e] = static_cast<std::uint32_t>(c);
        for (std::size_t i = 0; i < digit.size(); ++i) {
            if (++digit[i] < out.orders[i]) break;
            digit[i] = 0;
        }
    }
    return out;
}

}  // namespace modclass
