#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modclass/homs.hpp"
#include "modclass/module.hpp"

namespace modclass {

/// All e with e·e = e, ascending.
inline std::vector<Element> idempotents(const FiniteRing& R)
{
    std::vector<Element> out;
    for (Element e = 0; e < R.size(); ++e)
        if (R.mul(e, e) == e) out.push_back(e);
    return out;
}

/// The corner e·R·f as a sorted set.
inline std::vector<Element> corner(const FiniteRing& R, Element e, Element f)
{
    std::vector<char> hit(R.size(), 0);
    for (Element x = 0; x < R.size(); ++x) hit[R.mul(R.mul(e, x), f)] = 1;
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        if (hit[x]) out.push_back(x);
    return out;
}

/// Re ≅ Rf iff there are a in eRf and b in fRe with ab = e and ba = f.
inline std::optional<std::pair<Element, Element>> corner_isomorphism(const FiniteRing& R, Element e, Element f)
{
    const auto erf = corner(R, e, f);
    const auto fre = corner(R, f, e);
    for (const Element a : erf)
        for (const Element b : fre)
            if (R.mul(a, b) == e && R.mul(b, a) == f) return std::make_pair(a, b);
    return std::nullopt;
}

/// The left ideal R·e, sorted.
inline std::vector<Element> left_ideal_of(const FiniteRing& R, Element e)
{
    std::vector<char> hit(R.size(), 0);
    for (Element r = 0; r < R.size(); ++r) hit[R.mul(r, e)] = 1;
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x)
        if (hit[x]) out.push_back(x);
    return out;
}

/// Canonical order on modules: size, then annihilator profile, then action
/// table.
inline bool canonical_less(const FiniteModule& a, const FiniteModule& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    const auto pa = annihilator_profile(a), pb = annihilator_profile(b);
    if (pa != pb) return pa < pb;
    return a.action_table() < b.action_table();
}

struct IdempotentDecomposition {
    RingPtr ring;
    std::vector<Element> idempotents;              // complete orthogonal primitive set, ascending
    std::vector<std::vector<Element>> classes;     // grouped by isomorphism class of R·e
    std::vector<ModulePtr> representatives;        // P_i = R·e for the first e of class i
    std::vector<std::vector<Element>> representative_elements;  // P_i as a subset of R

    std::size_t class_count() const { return classes.size(); }
    std::size_t multiplicity(std::size_t i) const { return classes[i].size(); }
};

namespace detail {

inline std::vector<Element> search_order(std::size_t n, std::optional<std::uint64_t> seed)
{
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

}  // namespace detail

/// Refines {1} into a complete set of orthogonal primitive idempotents: any
/// e whose corner eRe holds an idempotent f other than 0 and e is replaced by
/// f and e - f. Classes of isomorphic left ideals are formed with the corner
/// criterion and put in canonical order (size, then action table).
inline IdempotentDecomposition primitive_decomposition(const RingPtr& ring, std::optional<std::uint64_t> seed = {},
                                                       const Limits& limits = {})
{
    const FiniteRing& R = *ring;
    const auto order = detail::search_order(R.size(), seed);

    std::deque<Element> work{R.one()};
    std::vector<Element> done;
    while (!work.empty()) {
        const Element e = work.front();
        work.pop_front();
        const auto eRe = corner(R, e, e);
        std::optional<Element> split;
        for (const Element f : order) {
            if (f == R.zero() || f == e) continue;
            if (!std::binary_search(eRe.begin(), eRe.end(), f)) continue;
            if (R.mul(f, f) == f) {
                split = f;
                break;
            }
        }
        if (split) {
            work.push_back(*split);
            work.push_back(R.sub(e, *split));
        } else {
            done.push_back(e);
        }
    }
    std::sort(done.begin(), done.end());

    IdempotentDecomposition out;
    out.ring = ring;
    out.idempotents = done;
    for (const Element e : done) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (corner_isomorphism(R, cls.front(), e)) {
                cls.push_back(e);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({e});
    }

    const ModulePtr regular = regular_module(ring, limits);
    struct Entry {
        std::vector<Element> cls;
        std::vector<Element> elements;
        ModulePtr module;
    };
    std::vector<Entry> entries;
    for (const auto& cls : out.classes) {
        auto elements = left_ideal_of(R, cls.front());
        auto module = submodule(*regular, elements, limits).module;
        entries.push_back({cls, std::move(elements), std::move(module)});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return canonical_less(*a.module, *b.module); });
    out.classes.clear();
    for (auto& entry : entries) {
        out.classes.push_back(std::move(entry.cls));
        out.representative_elements.push_back(std::move(entry.elements));
        out.representatives.push_back(std::move(entry.module));
    }

    // Sizes must multiply back to |R|.
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < out.class_count(); ++i)
        for (std::size_t k = 0; k < out.multiplicity(i); ++k) {
            product *= out.representatives[i]->size();
        }
    if (product != R.size())
        throw ConsistencyError(R.label() + ": indecomposable projective sizes do not multiply to |R|");
    return out;
}

/// Multiset of (indecomposable class id, multiplicity), sorted by id.
struct DecompositionSignature {
    std::vector<std::pair<std::size_t, std::size_t>> classes;

    bool operator==(const DecompositionSignature&) const = default;

    std::size_t multiplicity(std::size_t id) const
    {
        for (const auto& [c, m] : classes)
            if (c == id) return m;
        return 0;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < classes.size(); ++i)
            os << (i ? ", " : "") << "P" << classes[i].first << ":" << classes[i].second;
        os << "}";
        return os.str();
    }

    static DecompositionSignature from_ids(const std::vector<std::size_t>& ids)
    {
        std::map<std::size_t, std::size_t> counts;
        for (const auto id : ids) ++counts[id];
        DecompositionSignature s;
        for (const auto& [id, m] : counts) s.classes.emplace_back(id, m);
        return s;
    }
};

/// Isomorphism classes of indecomposable modules over one ring. Ids
/// 0..k-1 are the indecomposable projectives in canonical order; modules
/// that match none of them get the next free id in discovery order.
/// Registration is serialized by an internal mutex.
class IndecomposableRegistry {
public:
    IndecomposableRegistry(const IdempotentDecomposition& dec, Limits limits)
        : ring_(dec.ring), limits_(limits), entries_(dec.representatives), projective_count_(dec.class_count())
    {
    }

    const RingPtr& ring() const { return ring_; }
    std::size_t projective_count() const { return projective_count_; }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

    ModulePtr entry(std::size_t id) const
    {
        std::lock_guard lock(mutex_);
        return entries_.at(id);
    }

    /// Id of the class of an indecomposable module, registering it if new.
    std::size_t classify(const ModulePtr& m)
    {
        std::lock_guard lock(mutex_);
        for (std::size_t id = 0; id < entries_.size(); ++id) {
            if (entries_[id]->size() != m->size()) continue;
            if (find_isomorphism(entries_[id], m, limits_)) return id;
        }
        entries_.push_back(m);
        return entries_.size() - 1;
    }

private:
    RingPtr ring_;
    Limits limits_;
    mutable std::mutex mutex_;
    std::vector<ModulePtr> entries_;
    std::size_t projective_count_;
};

/// A nontrivial idempotent endomorphism of M, if any. Generator images are
/// tried in ascending element order, or in a seeded random order.
inline std::optional<ModuleHom> find_split_idempotent(const ModulePtr& M, std::optional<std::uint64_t> seed,
                                                      const Limits& limits)
{
    const std::size_t g = M->num_generators();
    if (M->size() <= 1 || g == 0) return std::nullopt;
    const auto order = detail::search_order(M->size(), seed);
    std::vector<std::vector<Element>> candidates(g, order);
    std::optional<ModuleHom> found;
    HomSearch search(*M, *M, std::move(candidates), limits.max_homs);
    search.run([&](const std::vector<Element>& images) {
        bool zero = true, identity = true;
        for (std::size_t i = 0; i < g; ++i) {
            zero = zero && images[i] == M->zero();
            identity = identity && images[i] == M->generator(i);
        }
        if (zero || identity) return false;
        for (std::size_t i = 0; i < g; ++i)
            if (extend_linearly(*M, *M, images, images[i]) != images[i]) return false;
        found = hom_from_images(M, M, images);
        return true;
    });
    return found;
}

struct KrullSchmidtResult {
    DecompositionSignature signature;
    std::vector<ModulePtr> summands;    // indecomposable, in splitting order
    std::vector<std::size_t> ids;       // registry id per summand
};

/// Splits M along nontrivial idempotent endomorphisms, M ≅ im(p) ⊕ ker(p),
/// until every piece is indecomposable, then names each piece by its
/// registry class.
inline KrullSchmidtResult krull_schmidt(const ModulePtr& M, IndecomposableRegistry& registry,
                                        std::optional<std::uint64_t> seed = {}, const Limits& limits = {})
{
    if (M->ring() != registry.ring()) throw PreconditionError("krull_schmidt: registry belongs to another ring");
    KrullSchmidtResult out;
    std::vector<ModulePtr> stack{M};
    std::uint64_t round = 0;
    while (!stack.empty()) {
        ModulePtr piece = stack.back();
        stack.pop_back();
        if (piece->size() <= 1) continue;
        const std::optional<std::uint64_t> piece_seed =
            seed ? std::optional<std::uint64_t>(*seed * 0x9e3779b97f4a7c15ull + round++) : std::nullopt;
        const auto pi = find_split_idempotent(piece, piece_seed, limits);
        if (!pi) {
            out.summands.push_back(piece);
            continue;
        }
        const auto image = image_of(*pi);
        const auto kernel = kernel_of(*pi);
        stack.push_back(submodule(*piece, kernel, limits).module);
        stack.push_back(submodule(*piece, image, limits).module);
    }
    for (const auto& s : out.summands) out.ids.push_back(registry.classify(s));
    out.signature = DecompositionSignature::from_ids(out.ids);
    return out;
}

struct IsomorphismResult {
    bool isomorphic = false;
    std::string method;   // "size", "signature", "direct search"
    std::optional<ModuleHom> isomorphism;
    std::optional<DecompositionSignature> left_signature;
    std::optional<DecompositionSignature> right_signature;
};

/// Sizes first, then Krull-Schmidt signatures through the registry; direct
/// search supplies an explicit isomorphism when within the cap, and is the
/// fallback when decomposition exceeds its caps.
inline IsomorphismResult is_isomorphic(const ModulePtr& M, const ModulePtr& N, IndecomposableRegistry& registry,
                                       const Limits& limits = {})
{
    if (M->ring() != N->ring()) throw PreconditionError("is_isomorphic: modules over different rings");
    IsomorphismResult out;
    if (M->size() != N->size()) {
        out.method = "size";
        return out;
    }
    bool signatures_done = false;
    try {
        out.left_signature = krull_schmidt(M, registry, std::nullopt, limits).signature;
        out.right_signature = krull_schmidt(N, registry, std::nullopt, limits).signature;
        out.isomorphic = *out.left_signature == *out.right_signature;
        out.method = "signature";
        signatures_done = true;
    } catch (const CapExceeded&) {
        out.left_signature.reset();
        out.right_signature.reset();
    }
    if (signatures_done && !out.isomorphic) return out;
    try {
        out.isomorphism = find_isomorphism(M, N, limits);
        if (!signatures_done) {
            out.isomorphic = out.isomorphism.has_value();
            out.method = "direct search";
        } else if (!out.isomorphism) {
            throw ConsistencyError("is_isomorphic: equal signatures but no isomorphism found");
        }
    } catch (const CapExceeded&) {
        if (!signatures_done) throw;
    }
    return out;
}

}  // namespace modclass
