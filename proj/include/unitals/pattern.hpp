#pragma once

// Edge-disjoint point-clique graphs on the common secants L: for color i,
// lines l, l' of L are adjacent iff their intersection point has color i.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "unitals/bitset.hpp"
#include "unitals/certificate.hpp"
#include "unitals/cliques.hpp"
#include "unitals/coloring.hpp"
#include "unitals/pencil.hpp"

namespace unitals {

struct PointClique {
    std::uint32_t point;                  // point id in the plane
    std::vector<std::uint32_t> members;   // ascending vertex (L-index) ids
};

class PatternGraph {
public:
    PatternGraph() = default;
    // Builds the graph from its point-cliques: an edge for every pair inside a clique.
    PatternGraph(std::uint32_t color, std::size_t num_vertices, std::vector<PointClique> cliques);

    std::uint32_t color() const { return color_; }
    std::size_t num_vertices() const { return graph_.size(); }
    const Graph& graph() const { return graph_; }
    const std::vector<PointClique>& cliques() const { return cliques_; }
    const Bitset& clique_bits(std::uint32_t clique) const { return clique_bits_[clique]; }
    const std::vector<std::uint32_t>& cliques_of(std::uint32_t vertex) const { return vertex_cliques_[vertex]; }

    // Index of the point-clique holding edge {a, b}; throws if absent.
    std::uint32_t clique_of(std::uint32_t a, std::uint32_t b) const;
    // Number of (clique, pair) incidences of {a, b}; exactly 1 for a valid pattern edge.
    std::size_t clique_multiplicity(std::uint32_t a, std::uint32_t b) const;

    // Replace the adjacency (used when re-verifying imported edge lists).
    void set_graph(Graph g) { graph_ = std::move(g); }

private:
    static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return (std::uint64_t{a} << 32) | b;
    }

    std::uint32_t color_ = 0;
    Graph graph_;
    std::vector<PointClique> cliques_;
    std::vector<Bitset> clique_bits_;
    std::vector<std::vector<std::uint32_t>> vertex_cliques_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_clique_;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_multiplicity_;
};

std::vector<PatternGraph> build_pattern(const PencilStructure& pencil, const PointColoring& coloring);

// Per-color structure checks (clique decomposition, maximality, size and
// membership windows) plus pairwise edge-disjointness across colors.
Certificate verify_pattern(const std::vector<PatternGraph>& graphs, std::uint32_t q, std::uint32_t c);

enum class CliqueKind { Fan, Degenerate };

struct CliqueWitness {
    std::vector<std::uint32_t> vertices;  // the k+1 clique vertices, ascending
    CliqueKind kind;
    std::uint32_t clique;                 // point-clique holding k (fan) or k+1 (degenerate) of them
    std::uint32_t point;                  // its concurrence point
    std::vector<std::uint32_t> spine;     // vertices inside that point-clique
    std::int64_t transversal = -1;        // the remaining vertex for a fan
};

// Throws std::invalid_argument("not a K_{k+1}") for a non-clique and
// StructureViolation if no point-clique holds k or k+1 of the vertices.
CliqueWitness classify_kplus1_clique(const PatternGraph& graph, std::vector<std::uint32_t> vertices, std::size_t k);

// Exact number of (k+1)-fans containing edge {a, b}.
std::uint64_t count_fans_through_edge(const PatternGraph& graph, std::uint32_t a, std::uint32_t b, std::size_t k);

// Structure-guided enumeration of every K_{k+1}: all (k+1)-subsets of a
// point-clique, then every k-subset of a point-clique with each outside vertex
// adjacent to all of it.
void for_each_kplus1_clique(const PatternGraph& graph, std::size_t k,
                            const std::function<void(const CliqueWitness&)>& visit);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace unitals
