#pragma once

// Constructors for the ring families of the ring-spec language.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modclass/abelian.hpp"
#include "modclass/ring.hpp"

namespace modclass {

namespace detail {

inline void check_size(std::uint64_t size, const std::string& label, const Limits& limits)
{
    if (size > limits.max_ring)
        throw CapExceeded(label + ": carrier size " + std::to_string(size) + " exceeds ring cap " +
                          std::to_string(limits.max_ring));
    if (size < 2) throw ValidationError(label + ": the zero ring is not supported");
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, const std::string& label,
                                 const Limits& limits)
{
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > limits.max_ring)
            throw CapExceeded(label + ": carrier size exceeds ring cap " + std::to_string(limits.max_ring));
    }
    return out;
}

inline std::string describe_failure(const AxiomReport& report)
{
    for (const auto& r : report.results) {
        if (r.passed) continue;
        std::ostringstream os;
        os << r.axiom << " fails at (";
        for (std::size_t i = 0; i < r.counterexample.size(); ++i)
            os << (i ? ", " : "") << r.counterexample[i];
        os << ")";
        return os.str();
    }
    return "ok";
}

/// Splits an index over `base^count` into base-`base` digits, least significant first.
inline std::vector<Element> split(std::uint64_t x, std::uint64_t base, std::size_t count)
{
    std::vector<Element> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Element>(x % base);
        x /= base;
    }
    return out;
}

inline std::uint64_t join(const std::vector<Element>& parts, std::uint64_t base)
{
    std::uint64_t x = 0;
    for (std::size_t i = parts.size(); i-- > 0;) x = x * base + parts[i];
    return x;
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p, coefficient vectors with index = degree.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t inv_lead = [&] {
        for (std::uint32_t c = 1; c < p; ++c)
            if ((c * m.back()) % p == 1) return c;
        return 1u;
    }();
    while (a.size() > dm) {
        const std::uint32_t c = (a.back() * inv_lead) % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - (c * m[i]) % p) % p;
        trim(a);
    }
    return a;
}

inline bool irreducible(const Poly& f, std::uint32_t p)
{
    const std::size_t deg = f.size() - 1;
    // Try every monic divisor of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly g(d + 1);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Builds a ring from a product callback, then validates the axioms.
inline RingPtr finalize_ring(std::vector<std::uint32_t> orders, Element one, std::string label,
                             const MulFn& mul, const Limits& limits)
{
    auto ring = std::make_shared<const FiniteRing>(std::move(orders), one, std::move(label), mul,
                                                   limits.table_threshold);
    const AxiomReport report = verify_ring_axioms(*ring, limits);
    if (!report.passed())
        throw ValidationError(ring->label() + ": " + detail::describe_failure(report));
    return ring;
}

inline RingPtr integers_mod(std::uint64_t n, const Limits& limits = {})
{
    const std::string label = "Z/" + std::to_string(n);
    detail::check_size(n, label, limits);
    return finalize_ring({static_cast<std::uint32_t>(n)}, 1 % n, label,
                         [n](Element x, Element y) {
                             return static_cast<Element>((static_cast<std::uint64_t>(x) * y) % n);
                         },
                         limits);
}

/// Least monic irreducible polynomial of degree k over F_p, comparing the
/// non-leading coefficients as a base-p number with the constant term least
/// significant.
inline std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t k)
{
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        detail::Poly f(k + 1);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[k] = 1;
        if (detail::irreducible(f, p)) return f;
    }
    throw ConsistencyError("no irreducible polynomial found");
}

/// GF(q), q = p^k <= 256: polynomials of degree < k over F_p modulo the
/// least irreducible polynomial. Element index = coefficients read base p.
inline RingPtr galois_field(std::uint64_t q, const Limits& limits = {})
{
    const std::string label = "GF(" + std::to_string(q) + ")";
    if (q < 2 || q > 256) throw ValidationError(label + ": order must be a prime power in [2, 256]");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t k = 0;
    for (std::uint64_t t = q; t > 1; t /= p) {
        if (t % p != 0) throw ValidationError(label + ": order is not a prime power");
        ++k;
    }
    detail::check_size(q, label, limits);
    const auto f = least_irreducible(p, k);
    auto mul = [p, k, f](Element x, Element y) {
        detail::Poly a = detail::split(x, p, k) , b = detail::split(y, p, k);
        detail::Poly c(2 * k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        detail::Poly r = detail::poly_mod(c, f, p);
        r.resize(k, 0);
        return static_cast<Element>(detail::join(r, p));
    };
    return finalize_ring(std::vector<std::uint32_t>(k, p), 1, label, mul, limits);
}

inline std::vector<std::uint32_t> repeat_orders(const FiniteRing& S, std::size_t times)
{
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), S.orders().begin(), S.orders().end());
    return out;
}

/// n x n matrices over S, entries in row-major order as base-|S| digits.
inline RingPtr matrix_ring(std::uint32_t n, const RingPtr& S, const Limits& limits = {})
{
    const std::string label = "M(" + std::to_string(n) + "," + S->label() + ")";
    if (n < 1) throw ValidationError(label + ": dimension must be positive");
    const std::uint64_t s = S->size();
    detail::check_size(detail::checked_pow(s, std::uint64_t{n} * n, label, limits), label, limits);
    std::vector<Element> id(n * n, S->zero());
    for (std::uint32_t i = 0; i < n; ++i) id[i * n + i] = S->one();
    auto mul = [n, s, S](Element x, Element y) {
        const auto a = detail::split(x, s, n * n), b = detail::split(y, s, n * n);
        std::vector<Element> c(n * n, S->zero());
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                Element acc = S->zero();
                for (std::uint32_t t = 0; t < n; ++t) acc = S->add(acc, S->mul(a[i * n + t], b[t * n + j]));
                c[i * n + j] = acc;
            }
        return static_cast<Element>(detail::join(c, s));
    };
    return finalize_ring(repeat_orders(*S, n * n), static_cast<Element>(detail::join(id, s)), label, mul,
                         limits);
}

/// Upper triangular n x n matrices over S; entries (i, j) with i <= j in
/// row-major order.
inline RingPtr triangular_ring(std::uint32_t n, const RingPtr& S, const Limits& limits = {})
{
    const std::string label = "T(" + std::to_string(n) + "," + S->label() + ")";
    if (n < 1) throw ValidationError(label + ": dimension must be positive");
    const std::uint64_t s = S->size();
    const std::uint32_t cells = n * (n + 1) / 2;
    detail::check_size(detail::checked_pow(s, cells, label, limits), label, limits);
    std::vector<std::int64_t> slot(n * n, -1);
    {
        std::uint32_t c = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i; j < n; ++j) slot[i * n + j] = c++;
    }
    std::vector<Element> id(cells, S->zero());
    for (std::uint32_t i = 0; i < n; ++i) id[slot[i * n + i]] = S->one();
    auto mul = [n, s, S, slot, cells](Element x, Element y) {
        const auto a = detail::split(x, s, cells), b = detail::split(y, s, cells);
        std::vector<Element> c(cells, S->zero());
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i; j < n; ++j) {
                Element acc = S->zero();
                for (std::uint32_t t = i; t <= j; ++t)
                    acc = S->add(acc, S->mul(a[slot[i * n + t]], b[slot[t * n + j]]));
                c[slot[i * n + j]] = acc;
            }
        return static_cast<Element>(detail::join(c, s));
    };
    return finalize_ring(repeat_orders(*S, cells), static_cast<Element>(detail::join(id, s)), label, mul,
                         limits);
}

/// A x B; index = a + |A|·b.
inline RingPtr product_ring(const RingPtr& A, const RingPtr& B, const Limits& limits = {})
{
    const std::string label = A->label() + " x " + B->label();
    const std::uint64_t a = A->size();
    if (a * B->size() > limits.max_ring)
        throw CapExceeded(label + ": carrier size exceeds ring cap " + std::to_string(limits.max_ring));
    std::vector<std::uint32_t> orders = A->orders();
    orders.insert(orders.end(), B->orders().begin(), B->orders().end());
    auto mul = [a, A, B](Element x, Element y) {
        return static_cast<Element>(A->mul(x % a, y % a) + a * B->mul(x / a, y / a));
    };
    return finalize_ring(std::move(orders), static_cast<Element>(A->one() + a * B->one()), label, mul, limits);
}

/// S[x]/(f) for f monic; `coeffs` lists f's coefficients as element indices
/// of S, constant term first, ending with the identity.
inline RingPtr poly_quotient(const RingPtr& S, const std::vector<Element>& coeffs, const Limits& limits = {})
{
    std::string label = "PolyQuot(" + S->label() + ",[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) label += (i ? "," : "") + std::to_string(coeffs[i]);
    label += "])";
    if (coeffs.size() < 2) throw ValidationError(label + ": polynomial must have positive degree");
    for (const Element c : coeffs)
        if (c >= S->size()) throw ValidationError(label + ": coefficient out of range");
    if (coeffs.back() != S->one()) throw ValidationError(label + ": polynomial must be monic");
    const std::size_t d = coeffs.size() - 1;
    const std::uint64_t s = S->size();
    detail::check_size(detail::checked_pow(s, d, label, limits), label, limits);
    std::vector<Element> one(d, S->zero());
    one[0] = S->one();
    auto mul = [d, s, S, coeffs](Element x, Element y) {
        const auto a = detail::split(x, s, d), b = detail::split(y, s, d);
        std::vector<Element> c(2 * d - 1, S->zero());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) c[i + j] = S->add(c[i + j], S->mul(a[i], b[j]));
        // x^d = -(f_0 + f_1 x + ... + f_{d-1} x^{d-1})
        for (std::size_t t = 2 * d - 2; t >= d; --t) {
            const Element lead = c[t];
            c[t] = S->zero();
            for (std::size_t i = 0; i < d; ++i)
                c[t - d + i] = S->sub(c[t - d + i], S->mul(lead, coeffs[i]));
        }
        c.resize(d);
        return static_cast<Element>(detail::join(c, s));
    };
    return finalize_ring(repeat_orders(*S, d), static_cast<Element>(detail::join(one, s)), label, mul, limits);
}

/// Ring from the structure-constant JSON schema {orders, one, table}.
inline RingPtr struct_const_from_json(const nlohmann::json& j, const std::string& label,
                                      const Limits& limits = {})
{
    std::vector<std::uint32_t> orders;
    Element one = 0;
    std::vector<std::vector<Element>> rows;
    try {
        orders = j.at("orders").get<std::vector<std::uint32_t>>();
        one = j.at("one").get<Element>();
        rows = j.at("table").get<std::vector<std::vector<Element>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(label + ": " + e.what());
    }
    std::uint64_t size = 1;
    for (const auto n : orders) {
        if (n < 2) throw ValidationError(label + ": cyclic orders must be at least 2");
        size *= n;
        if (size > limits.max_ring) throw CapExceeded(label + ": carrier size exceeds ring cap");
    }
    detail::check_size(size, label, limits);
    if (rows.size() != size) throw ValidationError(label + ": table must have one row per element");
    for (const auto& row : rows)
        if (row.size() != size) throw ValidationError(label + ": table rows must have one entry per element");
    auto mul = [&rows](Element x, Element y) { return rows[x][y]; };
    return finalize_ring(std::move(orders), one, label, mul, limits);
}

inline RingPtr struct_const_from_file(const std::string& path, const Limits& limits = {})
{
    std::ifstream in(path);
    if (!in) throw ParseError("StructConst: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("StructConst(" + path + "): " + e.what());
    }
    return struct_const_from_json(j, "StructConst(" + path + ")", limits);
}

inline nlohmann::json struct_const_json(const FiniteRing& R)
{
    const auto table = R.table();
    std::vector<std::vector<Element>> rows(R.size());
    for (Element x = 0; x < R.size(); ++x)
        rows[x].assign(table.begin() + static_cast<std::ptrdiff_t>(x * R.size()),
                       table.begin() + static_cast<std::ptrdiff_t>((x + 1) * R.size()));
    return {{"orders", R.orders()}, {"one", R.one()}, {"table", rows}};
}

}  // namespace modclass
