#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitals/cliques.hpp"

namespace unitals {

class NotCliqueFree : public std::invalid_argument {
public:
    NotCliqueFree(const std::string& what, std::vector<std::uint32_t> witness)
        : std::invalid_argument(what), witness(std::move(witness)) {}
    std::vector<std::uint32_t> witness;
};

// ceil(sqrt(k n) / 2), exactly: the least m with 4 m^2 >= k n.
std::uint64_t half_sqrt_ceil(std::uint64_t k, std::uint64_t n);

struct KFreeSubset {
    enum class Branch { Neighborhood, Sampled };
    std::vector<std::uint32_t> vertices;  // ascending
    Branch branch;
    std::uint64_t attempts = 0;           // sampling attempts used (0 for the neighborhood branch)
    std::uint64_t target = 0;             // ceil(sqrt(k n)/2)
};

inline constexpr std::uint64_t kKFreeAttemptCap = 1000;

// For a K_{k+1}-free graph on n vertices, a vertex set of size at least
// ceil(sqrt(k n)/2) spanning no K_k. A vertex of degree d >= that target
// gives its neighborhood; otherwise vertices are sampled with probability
// p = (k-1)/d and one vertex of every surviving K_k is deleted, retrying
// (substream ("kfree", attempt)) up to the cap. Throws NotCliqueFree if the
// input has a K_{k+1}.
KFreeSubset kfree_subset(const Graph& g, std::size_t k, std::uint64_t seed);

struct BoundRow {
    std::uint64_t r;
    std::uint64_t closed_form;      // ceil(k r^2 / 16)
    std::uint64_t recursion_value;  // propagated lower bound on P_r(k)
};

struct BoundTable {
    std::uint64_t k;
    std::vector<BoundRow> rows;  // r = 3..r_max
};

// Row r = 3 carries the base value P_2(k) = k^2. For r >= 4 the row is the
// least n with n - ceil(sqrt(k n)/2) >= previous row, located from the
// positive root of x^2 - (sqrt(k)/2) x - previous = 0 (x = sqrt(n)).
BoundTable lower_bound_table(std::uint64_t k, std::uint64_t r_max);

std::string bound_table_csv(const BoundTable& table);

// Balanced complete k-partite graph T(n, k); vertex v lies in part v mod k.
Graph turan_graph(std::size_t n, std::size_t k);

}  // namespace unitals
