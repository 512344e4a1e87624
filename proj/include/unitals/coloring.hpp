#pragma once

// Random refinement of the pencil: each unital's points get c fresh colors,
// uniformly and independently, and the concentration properties are checked
// exactly (integer comparisons, no floating point).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unitals/certificate.hpp"
#include "unitals/pencil.hpp"

namespace unitals {

struct PointColoring {
    std::uint32_t c = 0;  // colors per unital
    std::uint32_t m = 0;  // c * |Lambda|
    std::uint64_t seed = 0;
    std::vector<std::int32_t> color_of;  // point id -> color in [0, m), -1 if not in P

    // Colors j*c .. j*c+c-1 belong to unital lambda[j].
    std::uint32_t block_of_color(std::uint32_t color) const { return color / c; }
};

struct ColoringQuality {
    std::uint32_t q = 0, c = 0, m = 0;
    std::vector<std::uint64_t> class_size;                // |P_i|
    std::vector<std::vector<std::uint32_t>> line_meets;   // [L index][color] = |l ∩ P_i|
    bool class_sizes_ok = false;                          // q^3/2c <= |P_i| <= 2q^3/c for all i
    bool line_meets_ok = false;                           // q/2c <= |l ∩ P_i| <= 2q/c for all l, i
    std::size_t class_violations = 0;
    std::size_t line_violations = 0;
    std::size_t near_boundary = 0;  // (line, color) pairs one step from leaving the window

    bool ok() const { return class_sizes_ok && line_meets_ok; }
    std::size_t violations() const { return class_violations + line_violations; }
};

// Exact window tests, shared with the pattern verifier.
bool in_class_window(std::uint64_t size, std::uint64_t q, std::uint64_t c);
bool in_line_window(std::uint64_t meet, std::uint64_t q, std::uint64_t c);

// Points of U_lambda[j] \ {p_inf} are visited in ascending id order and drawn
// from substream ("coloring", j) of seed.
PointColoring sample_coloring(const PencilStructure& pencil, std::uint32_t c, std::uint64_t seed);

ColoringQuality check_quality(const PointColoring& coloring, const PencilStructure& pencil);

class ColoringError : public std::runtime_error {
public:
    ColoringError(const std::string& what, ColoringQuality best) : std::runtime_error(what), best(std::move(best)) {}
    ColoringQuality best;
};

struct ColoringSearch {
    PointColoring coloring;
    ColoringQuality quality;
    std::uint64_t attempts = 0;
};

// Attempt a uses seed + a. Without `relaxed`, c > q is rejected and
// exhausting the retries throws ColoringError carrying the best quality seen.
// With `relaxed`, the best sample (fewest violations, earliest on ties) is
// returned instead.
ColoringSearch find_good_coloring(const PencilStructure& pencil, std::uint32_t c, std::uint64_t seed,
                                  std::uint64_t max_retries, bool relaxed = false);

Json quality_to_json(const ColoringQuality& quality);

}  // namespace unitals
