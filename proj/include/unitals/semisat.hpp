#pragma once

// Edge r-coloring of K_{q^2} on the points of AG(2, q): an edge gets the
// parallel class of the line it spans, with classes r-1..q (0-based) merged
// into the last color. Any extension by one vertex with r-colored edges then
// creates a new monochromatic K_{k+1} once q > (k-1) r.
//
// Indexing: k here is the clique order minus one (the target is K_{k+1}).
// semisat_upper_bound takes the K_k index instead and converts.

#include <cstdint>
#include <optional>
#include <vector>

#include "unitals/certificate.hpp"
#include "unitals/geometry.hpp"

namespace unitals {

struct SemisatColoring {
    std::uint32_t q = 0, r = 0, k = 0;
    AffinePlane plane{2};
    std::vector<std::uint8_t> edge_color;  // n*n, 0-based colors; diagonal unused

    std::size_t n() const { return plane.num_points(); }
    std::uint8_t color(std::uint32_t u, std::uint32_t v) const { return edge_color[static_cast<std::size_t>(u) * n() + v]; }
    std::uint32_t color_of_class(std::uint32_t parallel_class) const { return std::min(parallel_class, r - 1); }
    std::vector<std::uint32_t> classes_of_color(std::uint32_t color) const;
};

// Smallest prime p with lo < p < hi, if any.
std::optional<std::uint32_t> smallest_prime_between(std::uint64_t lo, std::uint64_t hi);

// Requires k >= 3, r >= 2. Without q, picks the smallest prime in
// ((k-1) r, 2 (k-1) r). A given q must be prime with r <= q + 1.
SemisatColoring build_semisat(std::uint32_t k, std::uint32_t r, std::optional<std::uint32_t> q = {});

// Totality, per-color decomposition into disjoint line-cliques, and the
// one-vertex meeting of differently colored line-cliques.
Certificate verify_semisat_structure(const SemisatColoring& coloring);

struct ExtensionWitness {
    std::uint32_t color;
    std::uint32_t parallel_class;
    std::uint32_t line;
    std::vector<std::uint32_t> vertices;  // k points of the line joined to the new vertex in `color`
};

// A new monochromatic K_{k+1} for the extension (colors of the q^2 new edges),
// if one exists. Tries the pigeonhole color first, then all colors.
std::optional<ExtensionWitness> find_extension_witness(const SemisatColoring& coloring, const std::vector<std::uint8_t>& extension);

// Adversarial extensions: all edges color 0; round-robin by vertex id; and
// spread along each line of class 0 (color = x mod r for the point (x, y)).
std::vector<std::vector<std::uint8_t>> adversarial_extensions(const SemisatColoring& coloring);

struct ExtensionRun {
    Certificate certificate;
    std::vector<std::optional<ExtensionWitness>> witnesses;  // adversarial first, then random
};

// Random extensions draw each edge color from substream ("extension", index).
ExtensionRun verify_extension_property(const SemisatColoring& coloring, std::size_t random_extensions, std::uint64_t seed,
                                       std::size_t workers = 1);

struct SemisatBound {
    std::uint32_t q = 0;
    std::uint64_t n = 0;      // q^2, vertices of the construction
    std::uint64_t bound = 0;  // 4 (k-2)^2 r^2
};

// Upper bound for the K_k target (k >= 3, r >= 2).
SemisatBound semisat_upper_bound(std::uint32_t k, std::uint32_t r);

}  // namespace unitals
