#pragma once

// Structure-blind clique search over bitset adjacency.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unitals/bitset.hpp"

namespace unitals {

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

    std::size_t size() const { return adj_.size(); }
    void add_edge(std::uint32_t a, std::uint32_t b) {
        adj_[a].set(b);
        adj_[b].set(a);
    }
    void remove_edge(std::uint32_t a, std::uint32_t b) {
        adj_[a].reset(b);
        adj_[b].reset(a);
    }
    bool has_edge(std::uint32_t a, std::uint32_t b) const { return adj_[a].test(b); }
    std::size_t degree(std::uint32_t v) const { return adj_[v].count(); }
    const Bitset& neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t edge_count() const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;  // a < b, lexicographic

    bool is_clique(const std::vector<std::uint32_t>& vertices) const;

private:
    std::vector<Bitset> adj_;
};

// Some clique of exactly `size` vertices inside `within` (all vertices if
// absent), lexicographically first in ascending vertex order.
std::optional<std::vector<std::uint32_t>> find_clique(const Graph& g, std::size_t size, const Bitset* within = nullptr);

// Visits every clique of exactly `size` vertices once, as an ascending list.
// The callback returns false to stop early.
void for_each_clique(const Graph& g, std::size_t size, const std::function<bool(const std::vector<std::uint32_t>&)>& visit,
                     const Bitset* within = nullptr);

std::uint64_t count_cliques(const Graph& g, std::size_t size, const Bitset* within = nullptr);

// Maximal cliques with at least min_size vertices (Bron–Kerbosch, Tomita pivot).
void for_each_maximal_clique(const Graph& g, std::size_t min_size,
                             const std::function<void(const std::vector<std::uint32_t>&)>& visit);

}  // namespace unitals
