#include "unitals/bitset.hpp"

#include <algorithm>

namespace unitals {

void Bitset::set_all() {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    if (const std::size_t tail = nbits_ & 63; tail != 0) words_.back() = (std::uint64_t{1} << tail) - 1;
}

std::vector<std::uint32_t> Bitset::to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
}

}  // namespace unitals
