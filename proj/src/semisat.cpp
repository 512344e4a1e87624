#include "unitals/semisat.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "unitals/parallel.hpp"
#include "unitals/rng.hpp"

namespace unitals {

std::vector<std::uint32_t> SemisatColoring::classes_of_color(std::uint32_t color) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < plane.num_classes(); ++c)
        if (color_of_class(c) == color) out.push_back(c);
    return out;
}

std::optional<std::uint32_t> smallest_prime_between(std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t p = lo + 1; p < hi; ++p)
        if (is_prime(p)) return static_cast<std::uint32_t>(p);
    return std::nullopt;
}

SemisatColoring build_semisat(std::uint32_t k, std::uint32_t r, std::optional<std::uint32_t> q) {
    if (k < 3) throw std::invalid_argument("degenerate input: k must be at least 3");
    if (r < 2) throw std::invalid_argument("degenerate input: r must be at least 2");
    if (!q) {
        q = smallest_prime_between(std::uint64_t{k - 1} * r, std::uint64_t{2} * (k - 1) * r);
        if (!q) throw std::invalid_argument("no prime in ((k-1)r, 2(k-1)r)");
    }
    if (!is_prime(*q)) throw std::invalid_argument("q must be prime");
    if (r > *q + 1) throw std::invalid_argument("r must not exceed q+1");
    if (*q > 251) throw std::invalid_argument("q too large for the dense edge-color table");

    SemisatColoring sc;
    sc.q = *q;
    sc.r = r;
    sc.k = k;
    sc.plane = AffinePlane(*q);
    const std::size_t n = sc.n();
    sc.edge_color.assign(n * n, 0xff);
    for (std::uint32_t c = 0; c < sc.plane.num_classes(); ++c) {
        const auto color = static_cast<std::uint8_t>(sc.color_of_class(c));
        for (const auto& line : sc.plane.classes()[c])
            for (auto u : line)
                for (auto v : line)
                    if (u != v) sc.edge_color[static_cast<std::size_t>(u) * n + v] = color;
    }
    return sc;
}

Certificate verify_semisat_structure(const SemisatColoring& sc) {
    Certificate cert;
    const std::size_t n = sc.n();
    const std::uint32_t q = sc.q;
    {
        auto& rec = cert.add("total_coloring", "every pair of distinct vertices has exactly one color in [r]", true);
        std::vector<std::uint64_t> per_color(sc.r, 0);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) {
                const auto c = sc.color(u, v);
                if (c >= sc.r || c != sc.color(v, u)) {
                    rec.pass = false;
                    if (rec.witnesses.size() < 8) rec.witnesses.push_back({u, v});
                } else {
                    ++per_color[c];
                }
            }
        rec.tallies = {{"n", n}, {"pairs", n * (n - 1) / 2}, {"edges_per_color", per_color}};
    }
    {
        auto& rec = cert.add("line_clique_decomposition",
                             "each color class is a union of parallel classes, each q disjoint monochromatic q-cliques", true);
        Json per_color = Json::array();
        for (std::uint32_t color = 0; color < sc.r; ++color) {
            const auto classes = sc.classes_of_color(color);
            std::uint64_t edges = 0;
            for (auto c : classes) {
                std::vector<int> seen(n, 0);
                const auto& lines = sc.plane.classes()[c];
                if (lines.size() != q) rec.pass = false;
                for (std::uint32_t li = 0; li < lines.size(); ++li) {
                    const auto& line = lines[li];
                    if (line.size() != q) rec.pass = false;
                    for (auto u : line) ++seen[u];
                    for (std::size_t i = 0; i < line.size(); ++i)
                        for (std::size_t j = i + 1; j < line.size(); ++j)
                            if (sc.color(line[i], line[j]) != color) {
                                rec.pass = false;
                                if (rec.witnesses.size() < 8) rec.witnesses.push_back({{"class", c}, {"line", li}});
                            }
                }
                if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) rec.pass = false;
                edges += std::uint64_t{q} * q * (q - 1) / 2;
            }
            std::uint64_t actual = 0;
            for (std::uint32_t u = 0; u < n; ++u)
                for (std::uint32_t v = u + 1; v < n; ++v) actual += sc.color(u, v) == color;
            if (actual != edges) rec.pass = false;
            per_color.push_back({{"color", color + 1}, {"parallel_classes", classes.size()}, {"line_cliques", classes.size() * q}, {"edges", actual}});
        }
        rec.tallies = {{"per_color", per_color}};
    }
    {
        auto& rec = cert.add("cross_color_meeting", "line-cliques of different colors share at most one vertex", true);
        std::uint64_t pairs = 0;
        const auto& classes = sc.plane.classes();
        for (std::uint32_t a = 0; a < classes.size(); ++a)
            for (std::uint32_t b = a + 1; b < classes.size(); ++b) {
                if (sc.color_of_class(a) == sc.color_of_class(b)) continue;
                for (const auto& la : classes[a])
                    for (const auto& lb : classes[b]) {
                        ++pairs;
                        std::vector<std::uint32_t> common;
                        std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
                        if (common.size() > 1) rec.pass = false;
                    }
            }
        rec.tallies = {{"line_pairs_checked", pairs}};
    }
    {
        const std::uint64_t q2 = std::uint64_t{q} * q, rhs = std::uint64_t{sc.k - 1} * q * sc.r;
        auto& rec = cert.add("pigeonhole_margin", "q^2 / r > (k-1) q", q2 > rhs);
        rec.tallies = {{"q_squared", q2}, {"r", sc.r}, {"k_minus_1_times_q_times_r", rhs}};
    }
    return cert;
}

std::optional<ExtensionWitness> find_extension_witness(const SemisatColoring& sc, const std::vector<std::uint8_t>& ext) {
    const std::size_t n = sc.n();
    if (ext.size() != n) throw std::invalid_argument("extension must color every vertex");
    std::vector<std::uint64_t> counts(sc.r, 0);
    for (auto c : ext) {
        if (c >= sc.r) throw std::invalid_argument("extension color out of range");
        ++counts[c];
    }
    std::vector<std::uint32_t> order(sc.r);
    for (std::uint32_t i = 0; i < sc.r; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return counts[a] > counts[b]; });
    for (auto color : order)
        for (auto c : sc.classes_of_color(color)) {
            const auto& lines = sc.plane.classes()[c];
            for (std::uint32_t li = 0; li < lines.size(); ++li) {
                std::vector<std::uint32_t> hits;
                for (auto v : lines[li])
                    if (ext[v] == color) hits.push_back(v);
                if (hits.size() >= sc.k) {
                    hits.resize(sc.k);
                    return ExtensionWitness{color, c, li, std::move(hits)};
                }
            }
        }
    return std::nullopt;
}

std::vector<std::vector<std::uint8_t>> adversarial_extensions(const SemisatColoring& sc) {
    const std::size_t n = sc.n();
    std::vector<std::vector<std::uint8_t>> out(3, std::vector<std::uint8_t>(n));
    for (std::uint32_t v = 0; v < n; ++v) {
        out[0][v] = 0;
        out[1][v] = static_cast<std::uint8_t>(v % sc.r);
        out[2][v] = static_cast<std::uint8_t>((v / sc.q) % sc.r);
    }
    return out;
}

namespace {

bool witness_is_valid(const SemisatColoring& sc, const std::vector<std::uint8_t>& ext, const ExtensionWitness& w) {
    if (w.vertices.size() != sc.k) return false;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (ext[w.vertices[i]] != w.color) return false;
        for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
            if (sc.color(w.vertices[i], w.vertices[j]) != w.color) return false;
    }
    return true;
}

Json witness_json(const ExtensionWitness& w) {
    return {{"color", w.color + 1}, {"parallel_class", w.parallel_class}, {"line", w.line}, {"vertices", w.vertices}};
}

}  // namespace

ExtensionRun verify_extension_property(const SemisatColoring& sc, std::size_t random_extensions, std::uint64_t seed,
                                       std::size_t workers) {
    ExtensionRun run;
    const auto adversarial = adversarial_extensions(sc);
    const std::size_t total = adversarial.size() + random_extensions;
    run.witnesses.resize(total);
    std::vector<char> valid(total, 0);
    parallel_for(total, workers, [&](std::size_t e) {
        std::vector<std::uint8_t> ext;
        if (e < adversarial.size()) {
            ext = adversarial[e];
        } else {
            Rng rng(seed, "extension", e - adversarial.size());
            ext.resize(sc.n());
            for (auto& c : ext) c = static_cast<std::uint8_t>(rng.below(sc.r));
        }
        run.witnesses[e] = find_extension_witness(sc, ext);
        valid[e] = run.witnesses[e] && witness_is_valid(sc, ext, *run.witnesses[e]);
    });

    static const char* names[] = {"all_one_color", "round_robin", "line_spread"};
    {
        auto& rec = run.certificate.add("adversarial_extensions", "each adversarial extension creates a new monochromatic K_{k+1}", true);
        for (std::size_t e = 0; e < adversarial.size(); ++e) {
            Json entry = {{"extension", names[e]}, {"found", static_cast<bool>(valid[e])}};
            if (run.witnesses[e]) entry["witness"] = witness_json(*run.witnesses[e]);
            rec.witnesses.push_back(entry);
            if (!valid[e]) rec.pass = false;
        }
        rec.tallies = {{"extensions", adversarial.size()}};
    }
    {
        std::uint64_t ok = 0;
        for (std::size_t e = adversarial.size(); e < total; ++e) ok += valid[e];
        auto& rec = run.certificate.add("random_extensions", "each random extension creates a new monochromatic K_{k+1}",
                                        ok == random_extensions);
        rec.tallies = {{"extensions", random_extensions}, {"with_witness", ok}, {"seed", seed}};
        for (std::size_t e = adversarial.size(); e < total && rec.witnesses.size() < 8; ++e)
            if (!valid[e]) rec.witnesses.push_back({{"extension", e - adversarial.size()}});
    }
    return run;
}

SemisatBound semisat_upper_bound(std::uint32_t k, std::uint32_t r) {
    if (k < 3 || r < 2) throw std::invalid_argument("degenerate input: need k >= 3 and r >= 2 (bound 4(k-2)^2 r^2 vanishes)");
    const std::uint64_t kk = k - 1;  // K_k = K_{kk+1}
    const auto q = smallest_prime_between((kk - 1) * r, 2 * (kk - 1) * r);
    if (!q) throw std::invalid_argument("no prime in ((k-2)r, 2(k-2)r)");
    return {*q, std::uint64_t{*q} * *q, 4 * (kk - 1) * (kk - 1) * r * r};
}

}  // namespace unitals
