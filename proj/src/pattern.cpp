#include "unitals/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unitals {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// Calls visit(subset) for each `size`-subset of items in lexicographic order.
template <class F>
void for_each_subset(const std::vector<std::uint32_t>& items, std::size_t size, F&& visit) {
    if (size > items.size()) return;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::vector<std::uint32_t> subset(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) subset[i] = items[idx[i]];
        visit(subset);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == items.size() - size + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PatternGraph::PatternGraph(std::uint32_t color, std::size_t n, std::vector<PointClique> cliques)
    : color_(color), graph_(n), cliques_(std::move(cliques)), vertex_cliques_(n) {
    clique_bits_.reserve(cliques_.size());
    for (std::uint32_t ci = 0; ci < cliques_.size(); ++ci) {
        auto& members = cliques_[ci].members;
        std::sort(members.begin(), members.end());
        Bitset bits(n);
        for (auto v : members) {
            if (v >= n) throw std::invalid_argument("point-clique member out of range");
            bits.set(v);
            vertex_cliques_[v].push_back(ci);
        }
        clique_bits_.push_back(std::move(bits));
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                graph_.add_edge(members[i], members[j]);
                const auto k = key(members[i], members[j]);
                edge_clique_.emplace(k, ci);
                ++edge_multiplicity_[k];
            }
    }
}

std::uint32_t PatternGraph::clique_of(std::uint32_t a, std::uint32_t b) const {
    auto it = edge_clique_.find(key(a, b));
    if (it == edge_clique_.end()) throw std::invalid_argument("edge not covered by a point-clique");
    return it->second;
}

std::size_t PatternGraph::clique_multiplicity(std::uint32_t a, std::uint32_t b) const {
    auto it = edge_multiplicity_.find(key(a, b));
    return it == edge_multiplicity_.end() ? 0 : it->second;
}

std::vector<PatternGraph> build_pattern(const PencilStructure& pencil, const PointColoring& coloring) {
    std::vector<std::vector<PointClique>> per_color(coloring.m);
    for (std::uint32_t p = 0; p < coloring.color_of.size(); ++p) {
        const auto col = coloring.color_of[p];
        if (col < 0) continue;
        PointClique pc{p, {}};
        for (auto l : pencil.plane->lines_through(p))
            if (const auto v = pencil.vertex_of[l]; v >= 0) pc.members.push_back(static_cast<std::uint32_t>(v));
        per_color[static_cast<std::size_t>(col)].push_back(std::move(pc));
    }
    std::vector<PatternGraph> out;
    out.reserve(coloring.m);
    for (std::uint32_t i = 0; i < coloring.m; ++i) out.emplace_back(i, pencil.L.size(), std::move(per_color[i]));
    return out;
}

Certificate verify_pattern(const std::vector<PatternGraph>& graphs, std::uint32_t q, std::uint32_t c) {
    Certificate cert;
    for (const auto& g : graphs) {
        const std::string tag = "color" + std::to_string(g.color()) + ".";
        const std::size_t n = g.num_vertices();
        const Graph& adj = g.graph();

        // Every edge lies in exactly one point-clique, and every clique pair is an edge.
        {
            auto& rec = cert.add(tag + "clique_decomposition", "the graph is the edge-disjoint union of its point-cliques", true);
            std::uint64_t pair_total = 0;
            for (std::uint32_t ci = 0; ci < g.cliques().size(); ++ci) {
                const auto& m = g.cliques()[ci].members;
                pair_total += binomial(m.size(), 2);
                if (!adj.is_clique(m)) {
                    rec.pass = false;
                    rec.witnesses.push_back({{"clique", ci}, {"reason", "members not pairwise adjacent"}});
                }
            }
            std::uint64_t bad_edges = 0;
            for (auto [a, b] : adj.edges())
                if (g.clique_multiplicity(a, b) != 1) {
                    ++bad_edges;
                    if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"edge", {a, b}}, {"cliques", g.clique_multiplicity(a, b)}});
                }
            const std::uint64_t edges = adj.edge_count();
            if (bad_edges || pair_total != edges) rec.pass = false;
            rec.tallies = {{"edges", edges}, {"clique_pairs", pair_total}, {"edges_not_in_exactly_one_clique", bad_edges}};
        }
        // Maximality: no outside vertex is adjacent to every member.
        {
            auto& rec = cert.add(tag + "clique_maximality", "point-cliques are maximal cliques", true);
            std::uint64_t extendable = 0;
            for (std::uint32_t ci = 0; ci < g.cliques().size(); ++ci) {
                const Bitset& members = g.clique_bits(ci);
                for (std::uint32_t v = 0; v < n; ++v) {
                    if (members.test(v)) continue;
                    if (members.is_subset_of(adj.neighbors(v))) {
                        ++extendable;
                        rec.pass = false;
                        if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"clique", ci}, {"extends_by", v}});
                        break;
                    }
                }
            }
            rec.tallies = {{"cliques", g.cliques().size()}, {"extendable", extendable}};
        }
        {
            const std::uint64_t count = g.cliques().size();
            auto& rec = cert.add(tag + "clique_count_window", "q^3/2c <= #point-cliques <= 2q^3/c", in_class_window(count, q, c));
            rec.tallies = {{"point_cliques", count}, {"q", q}, {"c", c}};
        }
        {
            auto& rec = cert.add(tag + "membership_window", "every vertex is in [q/2c, 2q/c] point-cliques", true);
            std::size_t lo = ~std::size_t{0}, hi = 0, bad = 0;
            for (std::uint32_t v = 0; v < n; ++v) {
                const std::size_t k = g.cliques_of(v).size();
                lo = std::min(lo, k);
                hi = std::max(hi, k);
                if (!in_line_window(k, q, c)) {
                    ++bad;
                    rec.pass = false;
                    if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"vertex", v}, {"memberships", k}});
                }
            }
            rec.tallies = {{"min", n ? lo : 0}, {"max", hi}, {"violations", bad}};
        }
    }
    {
        auto& rec = cert.add("edge_disjoint", "the color graphs are pairwise edge-disjoint", true);
        std::uint64_t total = 0, shared = 0;
        for (const auto& g : graphs) total += g.graph().edge_count();
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                for (std::uint32_t v = 0; v < graphs[i].num_vertices(); ++v) {
                    const auto common = graphs[i].graph().neighbors(v).count_and(graphs[j].graph().neighbors(v));
                    if (common) {
                        shared += common;
                        rec.pass = false;
                        if (rec.witnesses.size() < 16) rec.witnesses.push_back({{"colors", {i, j}}, {"vertex", v}});
                    }
                }
        rec.tallies = {{"colors", graphs.size()}, {"total_edges", total}, {"shared_edge_incidences", shared}};
    }
    return cert;
}

CliqueWitness classify_kplus1_clique(const PatternGraph& g, std::vector<std::uint32_t> vs, std::size_t k) {
    std::sort(vs.begin(), vs.end());
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    if (vs.size() != k + 1 || !g.graph().is_clique(vs)) throw std::invalid_argument("not a K_{k+1}");
    std::uint32_t best_clique = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < vs.size() && best < k; ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const auto ci = g.clique_of(vs[i], vs[j]);
            std::size_t inside = 0;
            for (auto v : vs) inside += g.clique_bits(ci).test(v);
            if (inside > best) {
                best = inside;
                best_clique = ci;
            }
        }
    if (best < k) throw StructureViolation("fan/degenerate structure violation: no point-clique holds k clique vertices");
    CliqueWitness w{vs, best == k + 1 ? CliqueKind::Degenerate : CliqueKind::Fan, best_clique,
                    g.cliques()[best_clique].point, {}, -1};
    for (auto v : vs) {
        if (g.clique_bits(best_clique).test(v))
            w.spine.push_back(v);
        else
            w.transversal = v;
    }
    return w;
}

std::uint64_t count_fans_through_edge(const PatternGraph& g, std::uint32_t a, std::uint32_t b, std::size_t k) {
    if (!g.graph().has_edge(a, b)) throw std::invalid_argument("edge not in graph");
    if (k < 2) return 0;
    const Graph& adj = g.graph();
    const std::size_t n = g.num_vertices();
    const std::uint32_t x = g.clique_of(a, b);
    const Bitset& kx = g.clique_bits(x);
    std::uint64_t total = 0;

    // Concurrence point is a∩b: spine grows inside K_x, transversal t outside.
    Bitset transversals(n);
    Bitset::intersect(transversals, adj.neighbors(a), adj.neighbors(b));
    transversals.subtract(kx);
    transversals.for_each([&](std::size_t t) {
        const std::size_t others = adj.neighbors(static_cast<std::uint32_t>(t)).count_and(kx) - 2;
        total += binomial(others, k - 2);
    });

    // Concurrence point elsewhere on one endpoint; the other endpoint is the transversal.
    for (auto [spine, trans] : {std::pair{a, b}, std::pair{b, a}}) {
        for (auto y : g.cliques_of(spine)) {
            if (y == x) continue;
            // K_y ∩ N(trans) contains the spine endpoint itself.
            const std::size_t others = g.clique_bits(y).count_and(adj.neighbors(trans)) - 1;
            total += binomial(others, k - 1);
        }
    }
    return total;
}

void for_each_kplus1_clique(const PatternGraph& g, std::size_t k, const std::function<void(const CliqueWitness&)>& visit) {
    const Graph& adj = g.graph();
    const std::size_t n = g.num_vertices();
    Bitset common(n);
    for (std::uint32_t ci = 0; ci < g.cliques().size(); ++ci) {
        const auto& pc = g.cliques()[ci];
        for_each_subset(pc.members, k + 1, [&](const std::vector<std::uint32_t>& s) {
            visit({s, CliqueKind::Degenerate, ci, pc.point, s, -1});
        });
        for_each_subset(pc.members, k, [&](const std::vector<std::uint32_t>& s) {
            common = adj.neighbors(s[0]);
            for (std::size_t i = 1; i < s.size(); ++i) common &= adj.neighbors(s[i]);
            common.subtract(g.clique_bits(ci));
            common.for_each([&](std::size_t t) {
                std::vector<std::uint32_t> vs = s;
                vs.push_back(static_cast<std::uint32_t>(t));
                std::sort(vs.begin(), vs.end());
                visit({std::move(vs), CliqueKind::Fan, ci, pc.point, s, static_cast<std::int64_t>(t)});
            });
        });
    }
}

}  // namespace unitals
