#pragma once
// Hand-rolled generators for property tests. Every property runs a fixed
// number of cases from a fixed seed so failures replay exactly.

#include <cstdint>
#include <vector>

#include "unitals/bitset.hpp"
#include "unitals/cliques.hpp"
#include "unitals/rng.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 0x5eed;

template <class F>
void cases(std::size_t n, std::uint64_t salt, F&& body) {
    for (std::size_t i = 0; i < n; ++i) {
        unitals::Rng rng(kSeed, "property", salt * 1000003 + i);
        body(rng, i);
    }
}

inline std::vector<std::uint64_t> words(unitals::Rng& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    // Mix dense, sparse and all-ones words so popcount edge cases show up.
    for (auto& x : w) {
        switch (rng.below(4)) {
            case 0: x = 0; break;
            case 1: x = ~std::uint64_t{0}; break;
            case 2: x = std::uint64_t{1} << rng.below(64); break;
            default: x = rng.next();
        }
    }
    return w;
}

inline unitals::Bitset bitset(unitals::Rng& rng, std::size_t n, double density) {
    unitals::Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.bernoulli(density)) b.set(i);
    return b;
}

inline unitals::Graph graph(unitals::Rng& rng, std::size_t n, double p) {
    unitals::Graph g(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (rng.bernoulli(p)) g.add_edge(a, b);
    return g;
}

}  // namespace gen
