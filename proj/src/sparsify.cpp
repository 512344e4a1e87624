#include "unitals/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "unitals/parallel.hpp"
#include "unitals/rng.hpp"

namespace unitals {

std::uint8_t SparseGraph::part(std::uint32_t clique, std::uint32_t vertex) const {
    const auto& members = base->cliques()[clique].members;
    auto it = std::lower_bound(members.begin(), members.end(), vertex);
    if (it == members.end() || *it != vertex) throw std::invalid_argument("vertex not in point-clique");
    return parts[clique][static_cast<std::size_t>(it - members.begin())];
}

SparseGraph sparsify(const PatternGraph& base, const SparsifyParams& params) {
    if (!(params.alpha >= 0.0 && params.alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
    if (params.k < 1 || params.k > 255) throw std::invalid_argument("k out of range");
    SparseGraph sg;
    sg.base = &base;
    sg.params = params;
    sg.kept = Graph(base.num_vertices());
    sg.parts.resize(base.cliques().size());
    const auto k = params.k;
    for (std::uint32_t ci = 0; ci < base.cliques().size(); ++ci) {
        const auto& members = base.cliques()[ci].members;
        Rng rng(params.seed, "sparsify", (std::uint64_t{base.color()} << 32) | ci);
        auto& parts = sg.parts[ci];
        parts.resize(members.size());
        for (auto& p : parts) {
            const double u = rng.unit();
            if (u >= params.alpha) {
                p = 0;
            } else {
                const auto j = static_cast<std::size_t>(u * static_cast<double>(k) / params.alpha);
                p = static_cast<std::uint8_t>(1 + std::min(j, k - 1));
            }
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (parts[i] && parts[j] && parts[i] != parts[j]) sg.kept.add_edge(members[i], members[j]);
    }
    return sg;
}

std::string pattern_digest(const PatternGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    feed(g.color());
    feed(g.num_vertices());
    for (const auto& pc : g.cliques()) {
        feed(pc.point);
        feed(pc.members.size());
        for (auto v : pc.members) feed(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

KFreeResult find_surviving_cliques(const SparseGraph& sg, std::size_t k, std::size_t max_witnesses) {
    const PatternGraph& base = *sg.base;
    const std::size_t n = base.num_vertices();
    KFreeResult res;
    std::vector<std::uint8_t> part_of(n, 0);
    Bitset cand(n);
    for (std::uint32_t ci = 0; ci < base.cliques().size(); ++ci) {
        const auto& members = base.cliques()[ci].members;
        const Bitset& kbits = base.clique_bits(ci);
        if (members.size() >= k + 1) {
            if (auto c = find_clique(sg.kept, k + 1, &kbits)) {
                ++res.degenerate;
                if (res.witnesses.size() < max_witnesses) res.witnesses.push_back(*c);
            }
        }
        if (members.size() < k) continue;
        for (std::size_t i = 0; i < members.size(); ++i) part_of[members[i]] = sg.parts[ci][i];
        for (std::uint32_t t = 0; t < n; ++t) {
            if (kbits.test(t)) continue;
            Bitset::intersect(cand, kbits, sg.kept.neighbors(t));
            if (cand.count() < k) continue;
            std::vector<std::uint64_t> per_part(k + 1, 0);
            std::vector<std::int64_t> pick(k + 1, -1);
            cand.for_each([&](std::size_t v) {
                const auto p = part_of[v];
                ++per_part[p];
                if (pick[p] < 0) pick[p] = static_cast<std::int64_t>(v);
            });
            std::uint64_t ways = 1;
            for (std::size_t p = 1; p <= k; ++p) ways *= per_part[p];
            if (ways == 0) continue;
            res.surviving_fans += ways;
            if (res.witnesses.size() < max_witnesses) {
                std::vector<std::uint32_t> w{t};
                for (std::size_t p = 1; p <= k; ++p) w.push_back(static_cast<std::uint32_t>(pick[p]));
                std::sort(w.begin(), w.end());
                res.witnesses.push_back(std::move(w));
            }
        }
    }
    res.free = res.surviving_fans == 0 && res.degenerate == 0;
    return res;
}

Certificate check_kplus1_free(const SparseGraph& sg, std::size_t k) {
    Certificate cert;
    const PatternGraph& base = *sg.base;
    {
        auto& rec = cert.add("kpartite_point_cliques", "kept edges inside each point-clique join distinct parts among R_1..R_k", true);
        std::uint64_t kept_in_cliques = 0;
        for (std::uint32_t ci = 0; ci < base.cliques().size(); ++ci) {
            const auto& members = base.cliques()[ci].members;
            const auto& parts = sg.parts[ci];
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    const bool kept = sg.kept.has_edge(members[i], members[j]);
                    kept_in_cliques += kept;
                    const bool allowed = parts[i] && parts[j] && parts[i] != parts[j];
                    if (kept != allowed) {
                        rec.pass = false;
                        if (rec.witnesses.size() < 8) rec.witnesses.push_back({{"clique", ci}, {"edge", {members[i], members[j]}}});
                    }
                }
        }
        const auto total = sg.kept.edge_count();
        if (kept_in_cliques != total) rec.pass = false;
        rec.tallies = {{"kept_edges", total}, {"kept_edges_in_point_cliques", kept_in_cliques}};
    }
    const KFreeResult r = find_surviving_cliques(sg, k);
    {
        auto& rec = cert.add("no_degenerate_clique", "no K_{k+1} survives inside a single point-clique", r.degenerate == 0);
        rec.tallies = {{"point_cliques_with_kplus1", r.degenerate}};
    }
    {
        auto& rec = cert.add("kplus1_free", "the kept graph contains no K_{k+1}", r.free);
        rec.tallies = {{"k", k}, {"surviving_fans", r.surviving_fans}, {"degenerate", r.degenerate}};
        for (const auto& w : r.witnesses) rec.witnesses.push_back(w);
    }
    return cert;
}

Certificate check_alpha_k(const Graph& g, const AlphaKOptions& opt) {
    const std::size_t n = g.size();
    if (opt.subset_size > n) throw std::invalid_argument("subset_size exceeds vertex count");
    if (opt.mode == SubsetMode::Exhaustive && n > kExhaustiveVertexCap)
        throw std::invalid_argument("exhaustive subset search is limited to " + std::to_string(kExhaustiveVertexCap) + " vertices");

    std::vector<std::vector<std::uint32_t>> failures;
    std::uint64_t tested = 0, containing = 0;

    auto contains_kk = [&](const std::vector<std::uint32_t>& subset) {
        if (subset.size() < opt.k) return false;
        Bitset mask(n);
        for (auto v : subset) mask.set(v);
        return find_clique(g, opt.k, &mask).has_value();
    };

    if (opt.mode == SubsetMode::Sampled) {
        std::vector<char> ok(opt.samples, 0);
        std::vector<std::vector<std::uint32_t>> subsets(opt.samples);
        parallel_for(opt.samples, opt.workers, [&](std::size_t s) {
            Rng rng(opt.seed, "alpha_k", s);
            std::vector<std::uint32_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0u);
            for (std::size_t i = 0; i < opt.subset_size; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
            perm.resize(opt.subset_size);
            std::sort(perm.begin(), perm.end());
            ok[s] = contains_kk(perm);
            subsets[s] = std::move(perm);
        });
        tested = opt.samples;
        for (std::size_t s = 0; s < opt.samples; ++s) {
            if (ok[s])
                ++containing;
            else if (failures.size() < 4)
                failures.push_back(subsets[s]);
        }
    } else {
        std::vector<std::uint32_t> all(n);
        std::iota(all.begin(), all.end(), 0u);
        std::vector<std::size_t> idx(opt.subset_size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::vector<std::uint32_t> subset(opt.subset_size);
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = all[idx[i]];
            ++tested;
            if (contains_kk(subset))
                ++containing;
            else if (failures.size() < 4)
                failures.push_back(subset);
            std::size_t i = idx.size();
            while (i > 0 && idx[i - 1] == n - idx.size() + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    Certificate cert;
    auto& rec = cert.add("alpha_k_subsets", "every tested vertex subset induces a K_k", tested > 0 && containing == tested);
    rec.tallies = {{"mode", opt.mode == SubsetMode::Sampled ? "sampled" : "exhaustive"},
                   {"k", opt.k},
                   {"subset_size", opt.subset_size},
                   {"vertices", n},
                   {"tested", tested},
                   {"containing_kk", containing},
                   {"missing_kk", tested - containing}};
    for (const auto& f : failures) rec.witnesses.push_back(f);
    return cert;
}

double paper_alpha(double r, double k) {
    return std::pow(r, -15.0 / (2.0 * k)) * std::pow(std::log(r), -4.0) * std::pow(std::log(k), -4.0);
}

bool FeasibilityReport::all_hold() const {
    return std::all_of(inequalities.begin(), inequalities.end(), [](const Inequality& i) { return i.holds; });
}

const Inequality* FeasibilityReport::find(const std::string& name) const {
    for (const auto& i : inequalities)
        if (i.name == name) return &i;
    return nullptr;
}

namespace {

double log_binomial(double n, double k) {
    if (n < k) return -INFINITY;
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

FeasibilityReport feasibility_report(double q, double k, double r, double c, double alpha) {
    FeasibilityReport rep{q, k, r, c, alpha, {}};
    auto add = [&](std::string name, std::string statement, double lhs, double rhs, bool strict) {
        rep.inequalities.push_back({std::move(name), std::move(statement), lhs, rhs, strict ? lhs < rhs : lhs <= rhs});
    };
    add("alpha_range", "0 < alpha <= 1", alpha > 0 ? alpha : 0, 1.0, false);
    if (alpha <= 0) rep.inequalities.back().holds = false;
    add("coloring_color_cap", "c <= q / (48 ln q)", c, q / (48.0 * std::log(q)), false);
    add("enough_colors", "r <= c floor(q/2)", r, c * std::floor(q / 2), false);
    add("kk_density", "32 k c ln(e r) <= alpha q", 32.0 * k * c * std::log(std::exp(1.0) * r), alpha * q, false);
    const double t = q * q / (16.0 * r);
    add("proper_clique_threshold", "2 ln k <= alpha t / k with t = q^2/(16 r)", 2.0 * std::log(k), alpha * t / k, false);
    const double log_fans = 7.0 * std::log(q) + log_binomial(std::floor(2.0 * q / c), k) + 3.0 * k * std::log(alpha);
    add("fan_union_bound", "ln(q^7 C(2q/c, k) alpha^{3k}) < ln(1/2)", log_fans, std::log(0.5), true);
    return rep;
}

FeasibilityReport paper_regime_report(double k, double r) {
    const double C = std::ldexp(1.0, 100);
    const double q = C / 2.0 * std::sqrt(k) * std::pow(r, 0.5 + 15.0 / (2.0 * k)) * std::pow(std::log(r), 5.0) *
                     std::pow(std::log(k), 5.0);
    const double c = std::ceil(8.0 * r / q);
    return feasibility_report(q, k, r, c, paper_alpha(r, k));
}

Json feasibility_to_json(const FeasibilityReport& rep) {
    Json ineq = Json::array();
    for (const auto& i : rep.inequalities)
        ineq.push_back({{"name", i.name}, {"statement", i.statement}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"holds", i.holds}});
    return {{"q", rep.q}, {"k", rep.k}, {"r", rep.r}, {"c", rep.c}, {"alpha", rep.alpha}, {"all_hold", rep.all_hold()}, {"inequalities", ineq}};
}

}  // namespace unitals
