#include "unitals/coloring.hpp"

#include "unitals/rng.hpp"

namespace unitals {

bool in_class_window(std::uint64_t size, std::uint64_t q, std::uint64_t c) {
    const std::uint64_t q3 = q * q * q;
    return q3 <= 2 * c * size && c * size <= 2 * q3;
}

bool in_line_window(std::uint64_t meet, std::uint64_t q, std::uint64_t c) { return q <= 2 * c * meet && c * meet <= 2 * q; }

PointColoring sample_coloring(const PencilStructure& pencil, std::uint32_t c, std::uint64_t seed) {
    if (c < 1) throw std::invalid_argument("c must be at least 1");
    PointColoring pc;
    pc.c = c;
    pc.m = c * static_cast<std::uint32_t>(pencil.lambda_size());
    pc.seed = seed;
    pc.color_of.assign(pencil.plane->num_points(), -1);
    for (std::size_t j = 0; j < pencil.lambda_size(); ++j) {
        Rng rng(seed, "coloring", j);
        pencil.unitals[j].for_each([&](std::size_t p) {
            if (p == pencil.p_inf) return;
            pc.color_of[p] = static_cast<std::int32_t>(j * c + rng.below(c));
        });
    }
    return pc;
}

ColoringQuality check_quality(const PointColoring& coloring, const PencilStructure& pencil) {
    ColoringQuality cq;
    cq.q = pencil.q;
    cq.c = coloring.c;
    cq.m = coloring.m;
    cq.class_size.assign(coloring.m, 0);
    for (auto col : coloring.color_of)
        if (col >= 0) ++cq.class_size[static_cast<std::size_t>(col)];

    cq.line_meets.assign(pencil.L.size(), std::vector<std::uint32_t>(coloring.m, 0));
    for (std::size_t v = 0; v < pencil.L.size(); ++v)
        for (auto p : pencil.plane->points_on(pencil.L[v]))
            if (const auto col = coloring.color_of[p]; col >= 0) ++cq.line_meets[v][static_cast<std::size_t>(col)];

    const std::uint64_t q = cq.q, c = cq.c;
    for (auto s : cq.class_size) cq.class_violations += !in_class_window(s, q, c);
    for (const auto& row : cq.line_meets)
        for (auto x : row) {
            if (!in_line_window(x, q, c)) {
                ++cq.line_violations;
            } else if (!in_line_window(x + 1, q, c) || (x > 0 && !in_line_window(x - 1, q, c))) {
                ++cq.near_boundary;
            }
        }
    cq.class_sizes_ok = cq.class_violations == 0;
    cq.line_meets_ok = cq.line_violations == 0;
    return cq;
}

ColoringSearch find_good_coloring(const PencilStructure& pencil, std::uint32_t c, std::uint64_t seed,
                                  std::uint64_t max_retries, bool relaxed) {
    if (max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
    if (c > pencil.q && !relaxed) throw std::invalid_argument("c too large for q");

    ColoringSearch best;
    bool have_best = false;
    for (std::uint64_t a = 0; a < max_retries; ++a) {
        PointColoring pc = sample_coloring(pencil, c, seed + a);
        ColoringQuality cq = check_quality(pc, pencil);
        if (cq.ok()) return {std::move(pc), std::move(cq), a + 1};
        if (!have_best || cq.violations() < best.quality.violations()) {
            best = {std::move(pc), std::move(cq), a + 1};
            have_best = true;
        }
    }
    if (relaxed) {
        best.attempts = max_retries;
        return best;
    }
    throw ColoringError("no coloring met the quality windows within the retry cap", std::move(best.quality));
}

Json quality_to_json(const ColoringQuality& cq) {
    std::uint32_t min_meet = ~0u, max_meet = 0;
    for (const auto& row : cq.line_meets)
        for (auto x : row) {
            min_meet = std::min(min_meet, x);
            max_meet = std::max(max_meet, x);
        }
    return {{"q", cq.q},
            {"c", cq.c},
            {"m", cq.m},
            {"class_sizes", cq.class_size},
            {"class_sizes_ok", cq.class_sizes_ok},
            {"line_meets_ok", cq.line_meets_ok},
            {"class_violations", cq.class_violations},
            {"line_violations", cq.line_violations},
            {"near_boundary", cq.near_boundary},
            {"line_meet_min", cq.line_meets.empty() ? 0 : min_meet},
            {"line_meet_max", max_meet}};
}

}  // namespace unitals
