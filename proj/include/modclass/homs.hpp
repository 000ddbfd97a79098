#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modclass/module.hpp"

namespace modclass {

struct ModuleHom {
    ModulePtr source;
    ModulePtr target;
    std::vector<Element> map;

    Element operator()(Element a) const { return map[a]; }
};

/// Image under the linear extension of generator images: a = sum x_i g_i
/// maps to sum x_i images[i].
inline Element extend_linearly(const FiniteModule& M, const FiniteModule& N, const std::vector<Element>& images,
                               Element a)
{
    const auto coeff = M.coordinates(a);
    Element v = N.zero();
    for (std::size_t i = 0; i < coeff.size(); ++i) v = N.add(v, N.act(coeff[i], images[i]));
    return v;
}

inline ModuleHom hom_from_images(const ModulePtr& M, const ModulePtr& N, const std::vector<Element>& images)
{
    ModuleHom h{M, N, std::vector<Element>(M->size())};
    for (Element a = 0; a < M->size(); ++a) h.map[a] = extend_linearly(*M, *N, images, a);
    return h;
}

/// Additive and R-linear, by enumeration.
inline bool is_module_hom(const ModuleHom& h)
{
    const FiniteModule& M = *h.source;
    const FiniteModule& N = *h.target;
    if (h.map.size() != M.size()) return false;
    for (Element a = 0; a < M.size(); ++a) {
        if (h.map[a] >= N.size()) return false;
        for (Element b = 0; b < M.size(); ++b)
            if (h.map[M.add(a, b)] != N.add(h.map[a], h.map[b])) return false;
        for (Element r = 0; r < M.ring()->size(); ++r)
            if (h.map[M.act(r, a)] != N.act(r, h.map[a])) return false;
    }
    return true;
}

inline bool is_bijective(const ModuleHom& h)
{
    if (h.source->size() != h.target->size()) return false;
    std::vector<char> hit(h.target->size(), 0);
    for (const Element v : h.map) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

inline ModuleHom compose(const ModuleHom& after, const ModuleHom& before)
{
    ModuleHom h{before.source, after.target, std::vector<Element>(before.map.size())};
    for (std::size_t a = 0; a < before.map.size(); ++a) h.map[a] = after.map[before.map[a]];
    return h;
}

inline ModuleHom identity_hom(const ModulePtr& M)
{
    ModuleHom h{M, M, std::vector<Element>(M->size())};
    for (Element a = 0; a < M->size(); ++a) h.map[a] = a;
    return h;
}

/// Depth-first search over generator images of M in N, generator 0 varying
/// slowest. A relation of M is checked as soon as every generator it involves
/// has an image, so only hom-compatible prefixes are extended. `visit` gets
/// the complete image tuple and returns true to stop. Throws CapExceeded
/// once more than `budget` nodes have been expanded.
class HomSearch {
public:
    HomSearch(const FiniteModule& M, const FiniteModule& N, std::vector<std::vector<Element>> candidates,
              std::uint64_t budget)
        : M_(M), N_(N), candidates_(std::move(candidates)), budget_(budget), images_(M.num_generators())
    {
        const std::size_t g = M.num_generators();
        checks_at_.resize(g);
        for (const auto& rel : M.relation_generators()) {
            std::size_t last = 0;
            for (std::size_t i = 0; i < g; ++i)
                if (rel[i] != 0) last = i;
            checks_at_[last].push_back(&rel);
        }
    }

    /// All of N for each generator.
    static std::vector<std::vector<Element>> all_targets(const FiniteModule& M, const FiniteModule& N)
    {
        std::vector<Element> every(N.size());
        for (Element v = 0; v < N.size(); ++v) every[v] = v;
        return std::vector<std::vector<Element>>(M.num_generators(), every);
    }

    template <class Visit>
    bool run(Visit&& visit)
    {
        if (M_.num_generators() == 0) return visit(images_);
        return descend(0, visit);
    }

    std::uint64_t expanded() const { return expanded_; }

private:
    template <class Visit>
    bool descend(std::size_t i, Visit& visit)
    {
        for (const Element v : candidates_[i]) {
            if (++expanded_ > budget_)
                throw CapExceeded("hom search exceeded " + std::to_string(budget_) + " candidates");
            images_[i] = v;
            if (!relations_hold(i)) continue;
            if (i + 1 == images_.size()) {
                if (visit(images_)) return true;
            } else if (descend(i + 1, visit)) {
                return true;
            }
        }
        return false;
    }

    bool relations_hold(std::size_t i) const
    {
        for (const auto* rel : checks_at_[i]) {
            Element v = N_.zero();
            for (std::size_t k = 0; k <= i; ++k) v = N_.add(v, N_.act((*rel)[k], images_[k]));
            if (v != N_.zero()) return false;
        }
        return true;
    }

    const FiniteModule& M_;
    const FiniteModule& N_;
    std::vector<std::vector<Element>> candidates_;
    std::uint64_t budget_;
    std::uint64_t expanded_ = 0;
    std::vector<Element> images_;
    std::vector<std::vector<const std::vector<Element>*>> checks_at_;
};

/// Number of generator-image tuples, saturating at `cap + 1`.
inline std::uint64_t hom_candidate_count(const FiniteModule& M, const FiniteModule& N, std::uint64_t cap)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < M.num_generators(); ++i) {
        count *= N.size();
        if (count > cap) return cap + 1;
    }
    return count;
}

/// Every R-linear map M -> N, ordered lexicographically by generator images.
inline std::vector<ModuleHom> hom_enumerate(const ModulePtr& M, const ModulePtr& N, const Limits& limits = {})
{
    if (M->ring() != N->ring()) throw PreconditionError("hom_enumerate: modules over different rings");
    if (hom_candidate_count(*M, *N, limits.max_homs) > limits.max_homs)
        throw CapExceeded("hom enumeration: |N|^g exceeds cap " + std::to_string(limits.max_homs));
    std::vector<ModuleHom> out;
    HomSearch search(*M, *N, HomSearch::all_targets(*M, *N), limits.max_homs * (M->num_generators() + 1));
    search.run([&](const std::vector<Element>& images) {
        out.push_back(hom_from_images(M, N, images));
        return false;
    });
    return out;
}

/// Sizes r -> |{a : r·a = 0}|; equal for isomorphic modules.
inline std::vector<std::uint64_t> annihilator_profile(const FiniteModule& M)
{
    std::vector<std::uint64_t> out(M.ring()->size(), 0);
    for (Element r = 0; r < M.ring()->size(); ++r)
        for (Element a = 0; a < M.size(); ++a)
            if (M.act(r, a) == 0) ++out[r];
    return out;
}

/// Direct search for a bijective hom. A generator may only map to elements
/// with the same annihilator.
inline std::optional<ModuleHom> find_isomorphism(const ModulePtr& M, const ModulePtr& N, const Limits& limits = {})
{
    if (M->ring() != N->ring()) throw PreconditionError("find_isomorphism: modules over different rings");
    if (M->size() != N->size()) return std::nullopt;
    if (annihilator_profile(*M) != annihilator_profile(*N)) return std::nullopt;

    std::vector<std::vector<Element>> candidates(M->num_generators());
    for (std::size_t i = 0; i < M->num_generators(); ++i) {
        const auto ann = M->annihilator(M->generator(i));
        for (Element v = 0; v < N->size(); ++v)
            if (N->annihilator(v) == ann) candidates[i].push_back(v);
    }
    std::optional<ModuleHom> found;
    HomSearch search(*M, *N, std::move(candidates), limits.max_homs);
    search.run([&](const std::vector<Element>& images) {
        ModuleHom h = hom_from_images(M, N, images);
        if (!is_bijective(h)) return false;
        found = std::move(h);
        return true;
    });
    return found;
}

inline std::vector<Element> image_of(const ModuleHom& h)
{
    std::vector<char> hit(h.target->size(), 0);
    for (const Element v : h.map) hit[v] = 1;
    std::vector<Element> out;
    for (Element v = 0; v < hit.size(); ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

inline std::vector<Element> kernel_of(const ModuleHom& h)
{
    std::vector<Element> out;
    for (Element a = 0; a < h.map.size(); ++a)
        if (h.map[a] == h.target->zero()) out.push_back(a);
    return out;
}

}  // namespace modclass
