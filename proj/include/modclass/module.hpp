#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "modclass/abelian.hpp"
#include "modclass/ring.hpp"

namespace modclass {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// The free module R^g on indices: x = sum_i x_i |R|^i with x_i in R.
class FreeCover {
public:
    FreeCover(const FiniteRing& R, std::size_t g, const Limits& limits) : R_(&R), g_(g)
    {
        for (std::size_t i = 0; i < g; ++i) {
            size_ *= R.size();
            if (size_ > limits.max_presentation)
                throw CapExceeded("free cover R^" + std::to_string(g) + " over " + R.label() + " exceeds cap " +
                                  std::to_string(limits.max_presentation));
        }
    }

    std::uint64_t size() const { return size_; }
    std::size_t rank() const { return g_; }

    std::vector<Element> split(std::uint64_t x) const
    {
        std::vector<Element> d(g_);
        for (std::size_t i = 0; i < g_; ++i) {
            d[i] = static_cast<Element>(x % R_->size());
            x /= R_->size();
        }
        return d;
    }

    std::uint64_t join(const std::vector<Element>& d) const
    {
        std::uint64_t x = 0;
        for (std::size_t i = g_; i-- > 0;) x = x * R_->size() + d[i];
        return x;
    }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const
    {
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = 0; i < g_; ++i) {
            const auto a = static_cast<Element>(x % R_->size()), b = static_cast<Element>(y % R_->size());
            x /= R_->size();
            y /= R_->size();
            out += scale * R_->add(a, b);
            scale *= R_->size();
        }
        return out;
    }

    std::uint64_t act(Element r, std::uint64_t x) const
    {
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = 0; i < g_; ++i) {
            const auto a = static_cast<Element>(x % R_->size());
            x /= R_->size();
            out += scale * R_->mul(r, a);
            scale *= R_->size();
        }
        return out;
    }

    std::uint64_t basis(std::size_t i) const
    {
        std::uint64_t x = R_->one();
        for (std::size_t k = 0; k < i; ++k) x *= R_->size();
        return x;
    }

private:
    const FiniteRing* R_;
    std::size_t g_;
    std::uint64_t size_ = 1;
};

/// A finite left R-module presented as R^g / K, together with its carrier:
/// element c is the coset whose least free-cover index is reps()[c]; cosets
/// are numbered in increasing order of that index, so 0 is the zero element.
class FiniteModule {
public:
    /// Builds R^g / K. K must be a submodule of R^g; it is validated.
    static ModulePtr from_presentation(const RingPtr& ring, std::size_t g, std::vector<std::uint64_t> relations,
                                       const Limits& limits = {})
    {
        auto m = std::shared_ptr<FiniteModule>(new FiniteModule(ring, g, limits));
        m->init(std::move(relations), limits);
        return m;
    }

    const RingPtr& ring() const { return ring_; }
    std::uint64_t size() const { return size_; }
    std::size_t num_generators() const { return g_; }
    const std::vector<std::uint64_t>& relations() const { return relations_; }
    const std::vector<std::vector<Element>>& relation_generators() const { return relation_generators_; }
    const std::vector<std::uint64_t>& reps() const { return reps_; }
    const FreeCover& cover() const { return cover_; }

    Element zero() const { return 0; }
    Element generator(std::size_t i) const { return generators_[i]; }
    const std::vector<Element>& generators() const { return generators_; }

    Element add(Element a, Element b) const
    {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
        return coset_of_[cover_.add(reps_[a], reps_[b])];
    }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element act(Element r, Element a) const { return act_[static_cast<std::size_t>(r) * size_ + a]; }

    /// Class of a free-cover element.
    Element coset_of(std::uint64_t x) const { return coset_of_[x]; }

    /// Coefficients of the least representative of `a` on the generators.
    std::vector<Element> coordinates(Element a) const { return cover_.split(reps_[a]); }

    /// Left annihilator {r : r·a = 0} as a mask over R.
    std::vector<char> annihilator(Element a) const
    {
        std::vector<char> out(ring_->size());
        for (Element r = 0; r < ring_->size(); ++r) out[r] = act(r, a) == 0;
        return out;
    }

    const std::vector<Element>& action_table() const { return act_; }

private:
    FiniteModule(const RingPtr& ring, std::size_t g, const Limits& limits)
        : ring_(ring), g_(g), cover_(*ring, g, limits)
    {
    }

    void init(std::vector<std::uint64_t> relations, const Limits& limits)
    {
        const FiniteRing& R = *ring_;
        const std::uint64_t N = cover_.size();
        std::sort(relations.begin(), relations.end());
        relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
        for (const auto k : relations)
            if (k >= N) throw ValidationError("relation outside the free cover");
        if (relations.empty() || relations.front() != 0) throw ValidationError("relations must contain 0");
        if (N % relations.size() != 0) throw ValidationError("relations do not form a subgroup");
        size_ = N / relations.size();
        if (size_ > limits.max_module)
            throw CapExceeded("module of size " + std::to_string(size_) + " exceeds module cap " +
                              std::to_string(limits.max_module));
        relations_ = std::move(relations);

        // Relation generators, and a check that K is a submodule.
        {
            auto fadd = [this](std::uint32_t a, std::uint32_t b) {
                return static_cast<std::uint32_t>(cover_.add(a, b));
            };
            Subgroup<decltype(fadd)> span(N, 0, fadd);
            std::deque<std::uint32_t> queue;
            for (const auto k : relations_) {
                if (span.contains(static_cast<std::uint32_t>(k))) continue;
                relation_generators_.push_back(cover_.split(k));
                queue.push_back(static_cast<std::uint32_t>(k));
                while (!queue.empty()) {
                    const auto y = queue.front();
                    queue.pop_front();
                    if (!span.join_cyclic(y)) continue;
                    for (Element r = 0; r < R.size(); ++r) {
                        const auto z = static_cast<std::uint32_t>(cover_.act(r, y));
                        if (!span.contains(z)) queue.push_back(z);
                    }
                }
                if (span.size() > relations_.size()) break;
            }
            if (span.size() != relations_.size() || span.sorted() != std::vector<std::uint32_t>(relations_.begin(), relations_.end()))
                throw ValidationError("relations do not form a submodule of the free cover");
        }

        const Element none = ~Element{0};
        coset_of_.assign(N, none);
        for (std::uint64_t x = 0; x < N; ++x) {
            if (coset_of_[x] != none) continue;
            const auto id = static_cast<Element>(reps_.size());
            reps_.push_back(x);
            for (const auto k : relations_) coset_of_[cover_.add(x, k)] = id;
        }

        act_.resize(R.size() * size_);
        for (Element r = 0; r < R.size(); ++r)
            for (Element c = 0; c < size_; ++c) act_[r * size_ + c] = coset_of_[cover_.act(r, reps_[c])];

        neg_.resize(size_);
        for (Element c = 0; c < size_; ++c) neg_[c] = act(R.neg(R.one()), c);

        if (size_ <= 1024) {
            add_table_.resize(size_ * size_);
            for (Element a = 0; a < size_; ++a)
                for (Element b = 0; b < size_; ++b)
                    add_table_[a * size_ + b] = coset_of_[cover_.add(reps_[a], reps_[b])];
        }

        for (std::size_t i = 0; i < g_; ++i) generators_.push_back(coset_of_[cover_.basis(i)]);
    }

    RingPtr ring_;
    std::size_t g_;
    FreeCover cover_;
    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> relations_;
    std::vector<std::vector<Element>> relation_generators_;
    std::vector<std::uint64_t> reps_;
    std::vector<Element> coset_of_;
    std::vector<Element> act_;
    std::vector<Element> neg_;
    std::vector<Element> add_table_;
    std::vector<Element> generators_;
};

/// A module together with a map of element indices from some other carrier.
struct MappedModule {
    ModulePtr module;
    std::vector<Element> map;   // meaning depends on the producer; documented there
};

/// Builds a module from an explicit carrier {0..n-1} with the given zero,
/// addition and action. Each new generator is the element whose cyclic
/// submodule enlarges the current span most, least index first among ties.
/// `map[old] = new index`.
template <class Add, class Act>
MappedModule module_from_carrier(const RingPtr& ring, std::size_t n, Element zero, Add add, Act act,
                                 const Limits& limits = {})
{
    const FiniteRing& R = *ring;
    std::vector<Element> gens;
    {
        Subgroup<Add> span(n, zero, add);
        std::deque<std::uint32_t> queue;
        std::vector<std::uint32_t> mark(n, 0);
        std::uint32_t stamp = 0;
        while (span.size() < n) {
            // |span + Rx| / |span| = |Rx| / |span ∩ Rx|
            Element pick = 0;
            std::uint64_t best_num = 0, best_den = 1;
            for (Element x = 0; x < n; ++x) {
                if (span.contains(x)) continue;
                ++stamp;
                std::uint64_t cyclic = 0, inside = 0;
                for (Element r = 0; r < R.size(); ++r) {
                    const auto y = act(r, x);
                    if (mark[y] == stamp) continue;
                    mark[y] = stamp;
                    ++cyclic;
                    if (span.contains(y)) ++inside;
                }
                if (cyclic * best_den > best_num * inside) {
                    best_num = cyclic;
                    best_den = inside;
                    pick = x;
                }
            }
            gens.push_back(pick);
            queue.push_back(pick);
            while (!queue.empty()) {
                const auto y = queue.front();
                queue.pop_front();
                if (!span.join_cyclic(y)) continue;
                for (Element r = 0; r < R.size(); ++r) {
                    const auto z = act(r, y);
                    if (!span.contains(z)) queue.push_back(z);
                }
            }
        }
    }

    const FreeCover cover(R, gens.size(), limits);
    const std::uint64_t N = cover.size();
    if (N / std::max<std::uint64_t>(n, 1) > limits.max_presentation)
        throw CapExceeded("relation module too large");
    std::vector<Element> image(N);
    std::vector<std::uint64_t> kernel;
    for (std::uint64_t x = 0; x < N; ++x) {
        const auto coeff = cover.split(x);
        Element v = zero;
        for (std::size_t i = 0; i < gens.size(); ++i) v = add(v, act(coeff[i], gens[i]));
        image[x] = v;
        if (v == zero) kernel.push_back(x);
    }
    MappedModule out;
    out.module = FiniteModule::from_presentation(ring, gens.size(), std::move(kernel), limits);
    out.map.assign(n, 0);
    for (std::uint64_t x = 0; x < N; ++x) out.map[image[x]] = out.module->coset_of(x);
    return out;
}

/// R^n with coordinatewise action.
inline ModulePtr free_module(const RingPtr& ring, std::size_t n, const Limits& limits = {})
{
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= ring->size();
        if (size > limits.max_module)
            throw CapExceeded("free module R^" + std::to_string(n) + " over " + ring->label() +
                              " exceeds module cap " + std::to_string(limits.max_module));
    }
    return FiniteModule::from_presentation(ring, n, {0}, limits);
}

inline ModulePtr regular_module(const RingPtr& ring, const Limits& limits = {}) { return free_module(ring, 1, limits); }

/// True when `sorted` contains 0 and is closed under addition and the action.
inline bool is_submodule(const FiniteModule& M, const std::vector<Element>& sorted)
{
    auto in = [&](Element x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
    if (sorted.empty() || !in(M.zero())) return false;
    for (const Element a : sorted) {
        if (a >= M.size()) return false;
        for (const Element b : sorted)
            if (!in(M.add(a, b))) return false;
        for (Element r = 0; r < M.ring()->size(); ++r)
            if (!in(M.act(r, a))) return false;
    }
    return true;
}

/// Submodule generated by `seeds`, as a sorted element list of M.
inline std::vector<Element> submodule_span(const FiniteModule& M, const std::vector<Element>& seeds)
{
    auto madd = [&M](std::uint32_t a, std::uint32_t b) { return M.add(a, b); };
    auto s = additive_closure(M.size(), M.zero(), madd, seeds, [&](Element x, auto&& emit) {
        for (Element r = 0; r < M.ring()->size(); ++r) emit(M.act(r, x));
    });
    return s.sorted();
}

/// The submodule with the given (sorted) elements as a module in its own
/// right. `map[c]` is the element of M corresponding to element c of the result.
inline MappedModule submodule(const FiniteModule& M, const std::vector<Element>& sorted, const Limits& limits = {})
{
    std::vector<Element> local(M.size(), ~Element{0});
    for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<Element>(i);
    auto add = [&](std::uint32_t a, std::uint32_t b) { return local[M.add(sorted[a], sorted[b])]; };
    auto act = [&](Element r, std::uint32_t a) { return local[M.act(r, sorted[a])]; };
    MappedModule built = module_from_carrier(M.ring(), sorted.size(), local[M.zero()], add, act, limits);
    std::vector<Element> into(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) into[built.map[i]] = sorted[i];
    built.map = std::move(into);
    return built;
}

/// M/N with the induced presentation: the generators of M, relations the
/// preimage of N in the free cover. `map[m]` is the image of m.
inline MappedModule quotient_module_map(const FiniteModule& M, const std::vector<Element>& N, const Limits& limits = {})
{
    std::vector<Element> sorted = N;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!is_submodule(M, sorted)) throw PreconditionError("quotient_module: element set is not a submodule");

    std::vector<char> in(M.size(), 0);
    for (const Element k : sorted) in[k] = 1;
    std::vector<std::uint64_t> relations;
    for (std::uint64_t x = 0; x < M.cover().size(); ++x)
        if (in[M.coset_of(x)]) relations.push_back(x);
    MappedModule out;
    out.module = FiniteModule::from_presentation(M.ring(), M.num_generators(), std::move(relations), limits);
    out.map.resize(M.size());
    for (Element m = 0; m < M.size(); ++m) out.map[m] = out.module->coset_of(M.reps()[m]);
    return out;
}

inline ModulePtr quotient_module(const FiniteModule& M, const std::vector<Element>& N, const Limits& limits = {})
{
    return quotient_module_map(M, N, limits).module;
}

struct DirectSum {
    ModulePtr module;
    std::vector<Element> inject_left;    // M -> M ⊕ N
    std::vector<Element> inject_right;   // N -> M ⊕ N
};

/// M ⊕ N presented on the union of both generating sets with relations K_M ⊕ K_N.
inline DirectSum direct_sum_map(const ModulePtr& M, const ModulePtr& N, const Limits& limits = {})
{
    if (M->ring() != N->ring()) throw PreconditionError("direct_sum: modules over different rings");
    if (M->size() * N->size() > limits.max_module)
        throw CapExceeded("direct sum of size " + std::to_string(M->size() * N->size()) + " exceeds module cap " +
                          std::to_string(limits.max_module));
    const FiniteRing& R = *M->ring();
    const std::size_t gm = M->num_generators(), gn = N->num_generators();
    const FreeCover cover(R, gm + gn, limits);
    std::uint64_t shift = 1;
    for (std::size_t i = 0; i < gm; ++i) shift *= R.size();
    std::vector<std::uint64_t> relations;
    relations.reserve(M->relations().size() * N->relations().size());
    for (const auto b : N->relations())
        for (const auto a : M->relations()) relations.push_back(a + shift * b);

    DirectSum out;
    out.module = FiniteModule::from_presentation(M->ring(), gm + gn, std::move(relations), limits);
    out.inject_left.resize(M->size());
    for (Element a = 0; a < M->size(); ++a) out.inject_left[a] = out.module->coset_of(M->reps()[a]);
    out.inject_right.resize(N->size());
    for (Element b = 0; b < N->size(); ++b) out.inject_right[b] = out.module->coset_of(shift * N->reps()[b]);
    return out;
}

inline ModulePtr direct_sum(const ModulePtr& M, const ModulePtr& N, const Limits& limits = {})
{
    return direct_sum_map(M, N, limits).module;
}

/// Checks the module axioms on the carrier by enumeration.
inline bool verify_module_axioms(const FiniteModule& M)
{
    const FiniteRing& R = *M.ring();
    for (Element r = 0; r < R.size(); ++r)
        for (Element a = 0; a < M.size(); ++a) {
            for (Element b = 0; b < M.size(); ++b)
                if (M.act(r, M.add(a, b)) != M.add(M.act(r, a), M.act(r, b))) return false;
            for (Element s = 0; s < R.size(); ++s) {
                if (M.act(R.add(r, s), a) != M.add(M.act(r, a), M.act(s, a))) return false;
                if (M.act(R.mul(r, s), a) != M.act(r, M.act(s, a))) return false;
            }
        }
    for (Element a = 0; a < M.size(); ++a)
        if (M.act(R.one(), a) != a) return false;
    return true;
}

}  // namespace modclass
