#include "unitals/simd.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define UNITALS_HAVE_NEON_TU 1
#include <arm_neon.h>

#include <bit>
#endif

namespace unitals::simd {

#if UNITALS_HAVE_NEON_TU
namespace {

inline uint64x2_t load(const std::uint64_t* p) { return vld1q_u64(p); }

inline std::uint64_t count_vec(uint64x2_t v) {
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::uint64_t popcount(Words a) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2) total += count_vec(load(a.data() + i));
    for (; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t and_popcount(Words a, Words b) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2) total += count_vec(vandq_u64(load(a.data() + i), load(b.data() + i)));
    for (; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into(MutWords dst, Words a, Words b) {
    std::size_t i = 0;
    for (; i + 2 <= dst.size(); i += 2) vst1q_u64(dst.data() + i, vandq_u64(load(a.data() + i), load(b.data() + i)));
    for (; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void andnot_into(MutWords dst, Words a, Words b) {
    std::size_t i = 0;
    for (; i + 2 <= dst.size(); i += 2) vst1q_u64(dst.data() + i, vbicq_u64(load(a.data() + i), load(b.data() + i)));
    for (; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

inline bool nonzero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

bool any(Words a) {
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2)
        if (nonzero(load(a.data() + i))) return true;
    for (; i < a.size(); ++i)
        if (a[i]) return true;
    return false;
}

bool intersects(Words a, Words b) {
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2)
        if (nonzero(vandq_u64(load(a.data() + i), load(b.data() + i)))) return true;
    for (; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(Words a, Words b) {
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2)
        if (nonzero(vbicq_u64(load(a.data() + i), load(b.data() + i)))) return false;
    for (; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

const Kernels* neon_kernels() {
    static const Kernels k{Isa::Neon, popcount, and_popcount, and_into, andnot_into, any, intersects, is_subset};
    return &k;
}

#else

const Kernels* neon_kernels() { return nullptr; }

#endif

}  // namespace unitals::simd
