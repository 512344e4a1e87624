#include "unitals/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define UNITALS_HAVE_AVX2_TU 1
#include <immintrin.h>

#include <bit>
#endif

namespace unitals::simd {

#if UNITALS_HAVE_AVX2_TU
namespace {

// Nibble-LUT popcount (Mula): per-byte counts via pshufb, summed with sad.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_epi64(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

std::uint64_t popcount(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(load(a.data() + i)), _mm256_setzero_si256()));
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t and_popcount(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_and_si256(load(a.data() + i), load(b.data() + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    std::uint64_t total = hsum_epi64(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

void and_into(MutWords dst, Words a, Words b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_and_si256(load(a.data() + i), load(b.data() + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(MutWords dst, Words a, Words b) {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), _mm256_andnot_si256(load(b.data() + i), load(a.data() + i)));
    for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

bool any(Words a) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = load(a.data() + i);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (a[i]) return true;
    return false;
}

bool intersects(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(load(a.data() + i), load(b.data() + i))) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool is_subset(Words a, Words b) {
    const std::size_t n = a.size();
    std::size_t i = 0;
    // testc(b, a) == 1  <=>  (~b & a) == 0
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels k{Isa::Avx2, popcount, and_popcount, and_into, andnot_into, any, intersects, is_subset};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &k : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace unitals::simd
