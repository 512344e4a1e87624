#include "unitals/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace unitals::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

namespace {

const Kernels* lookup(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return &scalar_kernels();
        case Isa::Avx2: return avx2_kernels();
        case Isa::Neon: return neon_kernels();
    }
    return nullptr;
}

const Kernels* select_default() {
    if (const char* env = std::getenv("UNITALS_SIMD")) {
        const std::string want(env);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
            if (want == isa_name(isa))
                if (const Kernels* k = lookup(isa)) return k;
    }
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
    static std::atomic<const Kernels*> current{select_default()};
    return current;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

bool force_isa(Isa isa) {
    const Kernels* k = lookup(isa);
    if (!k) return false;
    slot().store(k, std::memory_order_release);
    return true;
}

}  // namespace unitals::simd
