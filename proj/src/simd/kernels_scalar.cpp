#include "unitals/simd.hpp"

#include <bit>

namespace unitals::simd {
namespace {

std::uint64_t popcount(Words a) {
    std::uint64_t n = 0;
    for (auto w : a) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
}

std::uint64_t and_popcount(Words a, Words b) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return n;
}

void and_into(MutWords dst, Words a, Words b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void andnot_into(MutWords dst, Words a, Words b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

bool any(Words a) {
    for (auto w : a)
        if (w) return true;
    return false;
}

bool intersects(Words a, Words b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(Words a, Words b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{Isa::Scalar, popcount, and_popcount, and_into, andnot_into, any, intersects, is_subset};
    return k;
}

}  // namespace unitals::simd
