#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modclass/error.hpp"
#include "modclass/limits.hpp"

namespace modclass {

/// Canonical index of a ring element in [0, carrier_size).
using Element = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Product of two elements given by index, used while building a ring.
using MulFn = std::function<Element(Element, Element)>;

/// A finite unital ring. The additive group is the product of cyclic groups
/// Z/orders[0] x ... x Z/orders[t-1]; an element's index is its coordinate
/// vector read in mixed radix with the first coordinate least significant.
/// Multiplication is a full table for small carriers and structure constants
/// (products of the additive generators) otherwise. Immutable once built.
class FiniteRing {
public:
    FiniteRing(std::vector<std::uint32_t> orders, Element one, std::string label,
               const MulFn& mul, std::uint64_t table_threshold)
        : orders_(std::move(orders)), one_(one), label_(std::move(label))
    {
        init_additive();
        if (one_ >= size_) throw ValidationError("identity index out of range in " + label_);
        if (size_ <= table_threshold) {
            table_.resize(size_ * size_);
            for (Element x = 0; x < size_; ++x)
                for (Element y = 0; y < size_; ++y) table_[x * size_ + y] = check(mul(x, y));
        } else {
            const std::size_t t = orders_.size();
            basis_products_.resize(t * t);
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = 0; j < t; ++j)
                    basis_products_[i * t + j] = check(mul(strides_[i], strides_[j]));
        }
    }

    std::uint64_t size() const { return size_; }
    const std::vector<std::uint32_t>& orders() const { return orders_; }
    Element zero() const { return 0; }
    Element one() const { return one_; }
    const std::string& label() const { return label_; }
    bool has_table() const { return !table_.empty(); }

    std::vector<std::uint32_t> digits(Element x) const
    {
        std::vector<std::uint32_t> d(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            d[i] = x % orders_[i];
            x /= orders_[i];
        }
        return d;
    }

    Element from_digits(const std::vector<std::uint32_t>& d) const
    {
        Element x = 0;
        for (std::size_t i = d.size(); i-- > 0;) x = x * orders_[i] + d[i];
        return x;
    }

    Element add(Element x, Element y) const
    {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(x) * size_ + y];
        return add_digitwise(x, y);
    }

    Element neg(Element x) const
    {
        Element out = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint32_t n = orders_[i];
            const std::uint32_t a = x % n;
            x /= n;
            out += static_cast<Element>(((n - a) % n) * strides_[i]);
        }
        return out;
    }

    Element sub(Element x, Element y) const { return add(x, neg(y)); }

    /// k·x for an integer k >= 0.
    Element scale(std::uint64_t k, Element x) const
    {
        Element out = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint32_t n = orders_[i];
            const std::uint64_t a = x % n;
            x /= n;
            out += static_cast<Element>(((a * (k % n)) % n) * strides_[i]);
        }
        return out;
    }

    Element mul(Element x, Element y) const
    {
        if (!table_.empty()) return table_[static_cast<std::size_t>(x) * size_ + y];
        const std::size_t t = orders_.size();
        const auto dx = digits(x), dy = digits(y);
        Element acc = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (dx[i] == 0) continue;
            for (std::size_t j = 0; j < t; ++j) {
                if (dy[j] == 0) continue;
                acc = add(acc, scale(static_cast<std::uint64_t>(dx[i]) * dy[j], basis_products_[i * t + j]));
            }
        }
        return acc;
    }

    /// Rebuilds a ring from a raw table without validating it. Used to
    /// inject deliberately corrupted rings as negative controls.
    static RingPtr from_table_unchecked(std::vector<std::uint32_t> orders, Element one,
                                        std::string label, std::vector<Element> table)
    {
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(std::move(orders), one, std::move(label)));
        if (table.size() != ring->size_ * ring->size_)
            throw ValidationError("multiplication table has wrong shape");
        for (const Element e : table)
            if (e >= ring->size_) throw ValidationError("multiplication table entry out of range");
        ring->table_ = std::move(table);
        return ring;
    }

    /// Full multiplication table (computed on demand when structure constants are stored).
    std::vector<Element> table() const
    {
        if (!table_.empty()) return table_;
        std::vector<Element> out(size_ * size_);
        for (Element x = 0; x < size_; ++x)
            for (Element y = 0; y < size_; ++y) out[x * size_ + y] = mul(x, y);
        return out;
    }

private:
    FiniteRing(std::vector<std::uint32_t> orders, Element one, std::string label)
        : orders_(std::move(orders)), one_(one), label_(std::move(label))
    {
        init_additive();
        if (one_ >= size_) throw ValidationError("identity index out of range in " + label_);
    }

    void init_additive()
    {
        size_ = 1;
        strides_.clear();
        for (const std::uint32_t n : orders_) {
            if (n < 2) throw ValidationError("cyclic factor orders must be at least 2");
            strides_.push_back(static_cast<Element>(size_));
            size_ *= n;
            if (size_ > (1ull << 31)) throw CapExceeded("ring carrier too large to index");
        }
        if (size_ <= 1024) {
            add_table_.resize(size_ * size_);
            for (Element x = 0; x < size_; ++x)
                for (Element y = 0; y < size_; ++y) add_table_[x * size_ + y] = add_digitwise(x, y);
        }
    }

    Element add_digitwise(Element x, Element y) const
    {
        Element out = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            const std::uint32_t n = orders_[i];
            const std::uint32_t a = x % n, b = y % n;
            x /= n;
            y /= n;
            out += static_cast<Element>(((a + b) % n) * strides_[i]);
        }
        return out;
    }

    Element check(Element e) const
    {
        if (e >= size_) throw ValidationError("product out of range in " + label_);
        return e;
    }

    std::vector<std::uint32_t> orders_;
    std::vector<Element> strides_;
    std::uint64_t size_ = 1;
    Element one_ = 0;
    std::string label_;
    std::vector<Element> table_;
    std::vector<Element> basis_products_;
    std::vector<Element> add_table_;
};

/// Outcome of one axiom check.
struct AxiomResult {
    std::string axiom;
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t checked = 0;
    std::vector<Element> counterexample;
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool passed() const
    {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
};

/// Checks associativity, both distributive laws and the two identity laws.
/// Exhaustive up to limits.axiom_exhaustive, seeded random sampling above.
inline AxiomReport verify_ring_axioms(const FiniteRing& R, const Limits& limits = {})
{
    const std::uint64_t n = R.size();
    const bool exhaustive = n <= limits.axiom_exhaustive;
    AxiomReport report;

    auto run3 = [&](const std::string& name, auto&& holds) {
        AxiomResult res{name, true, exhaustive, 0, {}};
        auto test = [&](Element x, Element y, Element z) {
            ++res.checked;
            if (!holds(x, y, z)) {
                res.passed = false;
                res.counterexample = {x, y, z};
                return false;
            }
            return true;
        };
        if (exhaustive) {
            for (Element x = 0; x < n && res.passed; ++x)
                for (Element y = 0; y < n && res.passed; ++y)
                    for (Element z = 0; z < n; ++z)
                        if (!test(x, y, z)) break;
        } else {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
            for (std::uint64_t s = 0; s < limits.axiom_samples; ++s)
                if (!test(pick(rng), pick(rng), pick(rng))) break;
        }
        report.results.push_back(std::move(res));
    };

    run3("associativity", [&](Element x, Element y, Element z) {
        return R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z));
    });
    run3("left distributivity", [&](Element x, Element y, Element z) {
        return R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z));
    });
    run3("right distributivity", [&](Element x, Element y, Element z) {
        return R.mul(R.add(x, y), z) == R.add(R.mul(x, z), R.mul(y, z));
    });

    AxiomResult left{"left identity", true, true, 0, {}};
    AxiomResult right{"right identity", true, true, 0, {}};
    for (Element x = 0; x < n; ++x) {
        ++left.checked;
        ++right.checked;
        if (left.passed && R.mul(R.one(), x) != x) {
            left.passed = false;
            left.counterexample = {x};
        }
        if (right.passed && R.mul(x, R.one()) != x) {
            right.passed = false;
            right.counterexample = {x};
        }
    }
    report.results.push_back(std::move(left));
    report.results.push_back(std::move(right));
    return report;
}

/// Two-sided units. Each element is tested for a left and a right inverse
/// separately.
inline std::vector<Element> units(const FiniteRing& R)
{
    const Element n = static_cast<Element>(R.size());
    std::vector<char> has_right(n, 0), has_left(n, 0);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (R.mul(x, y) == R.one()) {
                has_right[x] = 1;  // x·y = 1
                has_left[y] = 1;   // y has left inverse x
            }
        }
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
        if (has_right[x] && has_left[x]) out.push_back(x);
    return out;
}

inline std::vector<char> unit_mask(const FiniteRing& R)
{
    std::vector<char> mask(R.size(), 0);
    for (const Element u : units(R)) mask[u] = 1;
    return mask;
}

inline bool is_commutative(const FiniteRing& R)
{
    for (Element x = 0; x < R.size(); ++x)
        for (Element y = x + 1; y < R.size(); ++y)
            if (R.mul(x, y) != R.mul(y, x)) return false;
    return true;
}

}  // namespace modclass
