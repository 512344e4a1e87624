#pragma once

// Random Turánization of a point-clique graph: every point-clique splits its
// vertices independently into parts R_0..R_k (R_j with probability alpha/k
// for j >= 1, R_0 otherwise) and an edge survives iff its endpoints land in
// distinct parts among R_1..R_k of the point-clique holding the edge.

#include <cstdint>
#include <string>
#include <vector>

#include "unitals/certificate.hpp"
#include "unitals/cliques.hpp"
#include "unitals/pattern.hpp"

namespace unitals {

struct SparsifyParams {
    std::size_t k = 3;
    double alpha = 0.5;
    std::uint64_t seed = 0;
};

struct SparseGraph {
    const PatternGraph* base = nullptr;
    SparsifyParams params;
    std::vector<std::vector<std::uint8_t>> parts;  // [clique][position in members]
    Graph kept;

    std::uint8_t part(std::uint32_t clique, std::uint32_t vertex) const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> kept_edges() const { return kept.edges(); }
};

// Part draws use substream ("sparsify", color << 32 | clique) of params.seed,
// one unit draw per member in ascending order: u >= alpha -> R_0, otherwise
// R_{1 + floor(u k / alpha)}.
SparseGraph sparsify(const PatternGraph& base, const SparsifyParams& params);

// Deterministic 64-bit FNV-1a digest of a pattern graph (color, vertex count,
// point-cliques), used to tie serialized sparse graphs to their base.
std::string pattern_digest(const PatternGraph& g);

// Structure-guided K_{k+1} search: degenerate cliques inside one point-clique
// and fans (k spine vertices of one point-clique plus a transversal).
struct KFreeResult {
    bool free = true;
    std::uint64_t surviving_fans = 0;
    std::uint64_t degenerate = 0;
    std::vector<std::vector<std::uint32_t>> witnesses;  // first few surviving K_{k+1}
};
KFreeResult find_surviving_cliques(const SparseGraph& sparse, std::size_t k, std::size_t max_witnesses = 8);

Certificate check_kplus1_free(const SparseGraph& sparse, std::size_t k);

enum class SubsetMode { Exhaustive, Sampled };

struct AlphaKOptions {
    std::size_t k = 3;
    std::size_t subset_size = 0;
    SubsetMode mode = SubsetMode::Sampled;
    std::size_t samples = 500;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
};

inline constexpr std::size_t kExhaustiveVertexCap = 25;

// Every tested subset must induce a K_k in `g`. Sampled subsets come from
// substream ("alpha_k", sample index) via a partial Fisher–Yates shuffle.
Certificate check_alpha_k(const Graph& g, const AlphaKOptions& options);

// alpha = r^{-15/(2k)} (ln r)^{-4} (ln k)^{-4}
double paper_alpha(double r, double k);

struct Inequality {
    std::string name;
    std::string statement;
    double lhs = 0, rhs = 0;  // holds iff lhs (<= or <) rhs as stated
    bool holds = false;
};

struct FeasibilityReport {
    double q = 0, k = 0, r = 0, c = 0, alpha = 0;
    std::vector<Inequality> inequalities;
    bool all_hold() const;
    const Inequality* find(const std::string& name) const;
};

// Evaluates, for concrete numbers, the inequalities the sparsification
// argument relies on. The fan union bound is compared in log space.
FeasibilityReport feasibility_report(double q, double k, double r, double c, double alpha);

// The asymptotic parameter choice: q = (C/2) k^{1/2} r^{1/2 + 15/(2k)} ln^5 r ln^5 k
// with C = 2^100, c = ceil(8r/q), alpha = paper_alpha(r, k).
FeasibilityReport paper_regime_report(double k, double r);

Json feasibility_to_json(const FeasibilityReport& report);

}  // namespace unitals
