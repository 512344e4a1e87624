#pragma once

// Word-level kernels over packed 64-bit bitsets. Every kernel has a scalar
// reference implementation; vectorized variants are picked at runtime and
// must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace unitals::simd {

using Words = std::span<const std::uint64_t>;
using MutWords = std::span<std::uint64_t>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// All spans passed to one kernel call have equal length.
struct Kernels {
    Isa isa;
    std::uint64_t (*popcount)(Words a);
    std::uint64_t (*and_popcount)(Words a, Words b);
    void (*and_into)(MutWords dst, Words a, Words b);
    void (*andnot_into)(MutWords dst, Words a, Words b);  // dst = a & ~b
    bool (*any)(Words a);
    bool (*intersects)(Words a, Words b);
    bool (*is_subset)(Words a, Words b);  // a ⊆ b
};

const Kernels& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

// The kernels used by the library. Chosen once on first use: the widest
// supported variant, unless UNITALS_SIMD=scalar|avx2|neon overrides it.
const Kernels& active();

// Test hook: switch the active variant. Returns false if unsupported.
bool force_isa(Isa isa);

}  // namespace unitals::simd
