#pragma once

// Seedable, portable randomness.
//
// Every random decision in the library is drawn from a substream derived from
// a single 64-bit root seed:
//
//   substream_seed(root, tag, index) = mix(mix(root ^ fnv1a(tag)) + index)
//
// where mix is the SplitMix64 finalizer and fnv1a is 64-bit FNV-1a over the
// tag bytes. The substream generator is std::mt19937_64 seeded with that
// value; its output sequence is fixed by the C++ standard. Integer and real
// draws are done here (not with <random> distributions, whose algorithms are
// implementation-defined), so fixtures replay identically on every platform.

#include <cstdint>
#include <random>
#include <string_view>

namespace unitals {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t root, std::string_view tag, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t root, std::string_view tag, std::uint64_t index) : engine_(substream_seed(root, tag, index)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace unitals
