#include "unitals/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unitals/rng.hpp"

namespace unitals {

std::uint64_t half_sqrt_ceil(std::uint64_t k, std::uint64_t n) {
    const std::uint64_t target = k * n;
    auto m = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(target)) / 2);
    while (m > 0 && 4 * (m - 1) * (m - 1) >= target) --m;
    while (4 * m * m < target) ++m;
    return m;
}

namespace {

bool kk_free(const Graph& g, std::size_t k, const std::vector<std::uint32_t>& vs) {
    Bitset mask(g.size());
    for (auto v : vs) mask.set(v);
    return !find_clique(g, k, &mask).has_value();
}

}  // namespace

KFreeSubset kfree_subset(const Graph& g, std::size_t k, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    if (auto c = find_clique(g, k + 1)) throw NotCliqueFree("input graph contains a K_{k+1}", *c);

    const std::size_t n = g.size();
    KFreeSubset out;
    out.target = half_sqrt_ceil(k, n);

    std::uint32_t hub = 0;
    std::size_t d = 0;
    for (std::uint32_t v = 0; v < n; ++v)
        if (g.degree(v) > d) {
            d = g.degree(v);
            hub = v;
        }

    if (d >= out.target) {
        out.branch = KFreeSubset::Branch::Neighborhood;
        out.vertices = g.neighbors(hub).to_indices();
    } else {
        out.branch = KFreeSubset::Branch::Sampled;
        const double p = d == 0 ? 1.0 : std::min(1.0, static_cast<double>(k - 1) / static_cast<double>(d));
        bool done = false;
        for (std::uint64_t a = 0; a < kKFreeAttemptCap && !done; ++a) {
            Rng rng(seed, "kfree", a);
            Bitset sample(n);
            for (std::uint32_t v = 0; v < n; ++v)
                if (rng.bernoulli(p)) sample.set(v);
            while (auto c = find_clique(g, k, &sample)) sample.reset(c->back());
            out.attempts = a + 1;
            if (sample.count() >= out.target) {
                out.vertices = sample.to_indices();
                done = true;
            }
        }
        if (!done) throw std::runtime_error("kfree_subset: attempt cap exhausted without reaching the size bound");
    }

    if (out.vertices.size() < out.target || !kk_free(g, k, out.vertices))
        throw std::logic_error("kfree_subset postcondition failed");
    return out;
}

BoundTable lower_bound_table(std::uint64_t k, std::uint64_t r_max) {
    if (k < 3 || r_max < 3) throw std::invalid_argument("need k >= 3 and r_max >= 3");
    BoundTable t{k, {}};
    std::uint64_t prev = k * k;
    for (std::uint64_t r = 3; r <= r_max; ++r) {
        const std::uint64_t closed = (k * r * r + 15) / 16;
        std::uint64_t value = prev;
        if (r >= 4) {
            auto ok = [&](std::uint64_t n) { return n >= half_sqrt_ceil(k, n) && n - half_sqrt_ceil(k, n) >= prev; };
            const long double sk = std::sqrt(static_cast<long double>(k));
            const long double root = sk / 4 + std::sqrt(static_cast<long double>(k) / 16 + static_cast<long double>(prev));
            std::uint64_t n = std::max<std::uint64_t>(prev, static_cast<std::uint64_t>(std::floor(root * root)));
            while (n > prev && ok(n - 1)) --n;
            while (!ok(n)) ++n;
            value = n;
        }
        t.rows.push_back({r, closed, value});
        prev = value;
    }
    return t;
}

std::string bound_table_csv(const BoundTable& t) {
    std::ostringstream os;
    os << "r,closed_form,recursion_value\n";
    for (const auto& row : t.rows) os << row.r << ',' << row.closed_form << ',' << row.recursion_value << '\n';
    return os.str();
}

Graph turan_graph(std::size_t n, std::size_t k) {
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (u % k != v % k) g.add_edge(u, v);
    return g;
}

}  // namespace unitals
