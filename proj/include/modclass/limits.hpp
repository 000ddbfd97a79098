#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace modclass {

/// Size and enumeration caps shared by every module of the engine.
struct Limits {
    std::uint64_t max_ring = 65536;          // carrier size of a constructed ring
    std::uint64_t table_threshold = 4096;    // full multiplication table at or below this size
    std::uint64_t axiom_exhaustive = 256;    // exhaustive axiom scan at or below this size
    std::uint64_t axiom_samples = 100000;    // random triples checked above it
    std::uint64_t ideal_enum = 64;           // right-ideal lattice enumeration cap
    std::uint64_t max_module = 4096;         // carrier size of a constructed module
    std::uint64_t max_homs = 1000000;        // hom / endomorphism candidates per search
    std::uint64_t max_presentation = 1u << 22;  // |R|^g for the free cover of a module
    std::uint64_t max_pp = 1u << 24;         // assignments tried by pp evaluation
    std::uint64_t max_tuple_bits = 1u << 26; // bitset over M^n in the flatness check

    /// Defaults, with MODCLASS_MAX_SIZE overriding the ring cap when set.
    static Limits from_env()
    {
        Limits limits;
        if (const char* v = std::getenv("MODCLASS_MAX_SIZE"); v != nullptr && *v != '\0') {
            char* end = nullptr;
            const unsigned long long n = std::strtoull(v, &end, 10);
            if (end != v && *end == '\0' && n > 0) limits.max_ring = n;
        }
        return limits;
    }
};

}  // namespace modclass
