#include "unitals/cliques.hpp"

namespace unitals {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < adj_.size(); ++a)
        adj_[a].for_each([&](std::size_t b) {
            if (b > a) out.emplace_back(a, static_cast<std::uint32_t>(b));
        });
    return out;
}

bool Graph::is_clique(const std::vector<std::uint32_t>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !has_edge(vs[i], vs[j])) return false;
    return true;
}

namespace {

struct CliqueWalker {
    const Graph& g;
    std::size_t target;
    const std::function<bool(const std::vector<std::uint32_t>&)>& visit;
    std::vector<Bitset> scratch;  // one candidate set per depth
    std::vector<std::uint32_t> current;

    // Returns false once the visitor asked to stop.
    bool extend(std::size_t depth) {
        if (current.size() == target) return visit(current);
        Bitset& cand = scratch[depth];
        const std::size_t need = target - current.size();
        while (cand.count() >= need) {
            const auto v = static_cast<std::uint32_t>(cand.first());
            cand.reset(v);
            current.push_back(v);
            Bitset::intersect(scratch[depth + 1], cand, g.neighbors(v));
            const bool go_on = extend(depth + 1);
            current.pop_back();
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_clique(const Graph& g, std::size_t size, const std::function<bool(const std::vector<std::uint32_t>&)>& visit,
                     const Bitset* within) {
    if (size == 0) {
        visit({});
        return;
    }
    CliqueWalker w{g, size, visit, std::vector<Bitset>(size + 1, Bitset(g.size())), {}};
    if (within) {
        w.scratch[0] = *within;
    } else {
        w.scratch[0].set_all();
    }
    w.extend(0);
}

std::optional<std::vector<std::uint32_t>> find_clique(const Graph& g, std::size_t size, const Bitset* within) {
    std::optional<std::vector<std::uint32_t>> found;
    for_each_clique(
        g, size,
        [&](const std::vector<std::uint32_t>& c) {
            found = c;
            return false;
        },
        within);
    return found;
}

std::uint64_t count_cliques(const Graph& g, std::size_t size, const Bitset* within) {
    std::uint64_t n = 0;
    for_each_clique(
        g, size,
        [&](const std::vector<std::uint32_t>&) {
            ++n;
            return true;
        },
        within);
    return n;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<std::uint32_t>& r, Bitset p, Bitset x, std::size_t min_size,
                   const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (p.none()) {
        if (x.none() && r.size() >= min_size) visit(r);
        return;
    }
    if (r.size() + p.count() < min_size) return;
    // Pivot: vertex of P ∪ X with most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
        const std::size_t n = g.neighbors(static_cast<std::uint32_t>(u)).count_and(p);
        if (!have || n > best) {
            pivot = u;
            best = n;
            have = true;
        }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bitset todo = p;
    todo.subtract(g.neighbors(static_cast<std::uint32_t>(pivot)));
    Bitset np(g.size()), nx(g.size());
    todo.for_each([&](std::size_t v) {
        const auto& nv = g.neighbors(static_cast<std::uint32_t>(v));
        Bitset::intersect(np, p, nv);
        Bitset::intersect(nx, x, nv);
        r.push_back(static_cast<std::uint32_t>(v));
        bron_kerbosch(g, r, np, nx, min_size, visit);
        r.pop_back();
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

void for_each_maximal_clique(const Graph& g, std::size_t min_size,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    Bitset p(g.size()), x(g.size());
    p.set_all();
    std::vector<std::uint32_t> r;
    bron_kerbosch(g, r, p, x, min_size, visit);
}

}  // namespace unitals
