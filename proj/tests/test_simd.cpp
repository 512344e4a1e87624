#include <doctest.h>

#include <bit>

#include "gen.hpp"
#include "unitals/simd.hpp"

using namespace unitals;
using namespace unitals::simd;

namespace {

std::vector<const Kernels*> variants() {
    std::vector<const Kernels*> v{&scalar_kernels()};
    if (auto* k = avx2_kernels()) v.push_back(k);
    if (auto* k = neon_kernels()) v.push_back(k);
    return v;
}

std::uint64_t naive_popcount(const std::vector<std::uint64_t>& a) {
    std::uint64_t n = 0;
    for (auto w : a)
        for (int i = 0; i < 64; ++i) n += (w >> i) & 1;
    return n;
}

}  // namespace

TEST_CASE("scalar kernels match bit-by-bit loops") {
    const auto& s = scalar_kernels();
    gen::cases(200, 1, [&](Rng& rng, std::size_t) {
        const std::size_t n = rng.below(40);
        const auto a = gen::words(rng, n), b = gen::words(rng, n);
        CHECK(s.popcount(a) == naive_popcount(a));
        std::vector<std::uint64_t> both(n), diff(n);
        for (std::size_t i = 0; i < n; ++i) {
            both[i] = a[i] & b[i];
            diff[i] = a[i] & ~b[i];
        }
        CHECK(s.and_popcount(a, b) == naive_popcount(both));
        CHECK(s.any(a) == (naive_popcount(a) > 0));
        CHECK(s.intersects(a, b) == (naive_popcount(both) > 0));
        CHECK(s.is_subset(a, b) == (naive_popcount(diff) == 0));
        std::vector<std::uint64_t> out(n);
        s.and_into(out, a, b);
        CHECK(out == both);
        s.andnot_into(out, a, b);
        CHECK(out == diff);
    });
}

TEST_CASE("every compiled variant agrees with the scalar reference") {
    const auto& ref = scalar_kernels();
    for (const Kernels* k : variants()) {
        CAPTURE(isa_name(k->isa));
        // Lengths straddle the 4-word AVX2 stride and its tail handling.
        gen::cases(300, 2, [&](Rng& rng, std::size_t i) {
            const std::size_t n = i < 70 ? i : rng.below(300);
            auto a = gen::words(rng, n), b = gen::words(rng, n);
            if (rng.below(3) == 0) b = a;  // subset/intersect positives
            if (rng.below(3) == 0)
                for (std::size_t j = 0; j < n; ++j) b[j] |= a[j];
            CHECK(k->popcount(a) == ref.popcount(a));
            CHECK(k->and_popcount(a, b) == ref.and_popcount(a, b));
            CHECK(k->any(a) == ref.any(a));
            CHECK(k->intersects(a, b) == ref.intersects(a, b));
            CHECK(k->is_subset(a, b) == ref.is_subset(a, b));
            CHECK(k->is_subset(b, a) == ref.is_subset(b, a));
            std::vector<std::uint64_t> x(n), y(n);
            k->and_into(x, a, b);
            ref.and_into(y, a, b);
            CHECK(x == y);
            k->andnot_into(x, a, b);
            ref.andnot_into(y, a, b);
            CHECK(x == y);
            // in-place aliasing, as Bitset uses it
            auto z = a, w = a;
            k->and_into(z, z, b);
            ref.and_into(w, w, b);
            CHECK(z == w);
        });
    }
}

TEST_CASE("force_isa switches Bitset results only in speed") {
    gen::cases(20, 3, [&](Rng& rng, std::size_t) {
        const std::size_t n = 1 + rng.below(1000);
        const Bitset a = gen::bitset(rng, n, 0.3), b = gen::bitset(rng, n, 0.6);
        std::vector<std::size_t> results;
        for (const Kernels* k : variants()) {
            REQUIRE(force_isa(k->isa));
            Bitset c = a;
            c &= b;
            results.push_back(a.count() * 1000003 + a.count_and(b) * 1009 + c.count() + a.is_subset_of(b));
        }
        for (auto r : results) CHECK(r == results.front());
    });
    force_isa(avx2_kernels() ? Isa::Avx2 : Isa::Scalar);
}

TEST_CASE("unsupported variant is refused") {
    if (!neon_kernels()) CHECK_FALSE(force_isa(Isa::Neon));
    CHECK(force_isa(Isa::Scalar));
    CHECK(active().isa == Isa::Scalar);
}

TEST_CASE("Bitset keeps bits past size() clear") {
    Bitset b(70);
    b.set_all();
    CHECK(b.count() == 70);
    CHECK(b.words()[1] == (std::uint64_t{1} << 6) - 1);
    CHECK(b.first() == 0);
    b.clear();
    CHECK(b.first() == 70);
    b.set(69);
    CHECK(b.to_indices() == std::vector<std::uint32_t>{69});
}
