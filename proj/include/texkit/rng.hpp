// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "texkit/common.hpp"

namespace texkit {

namespace detail {
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
} // namespace detail

// Counter-based generator: draw i of stream (seed, stream) is a pure function
// of (seed, stream, i), so parallel consumers with disjoint streams are
// order-independent and runs are reproducible.
class Rng {
public:
    Rng() : Rng(0, 0) {}
    Rng(uint64_t seed, uint64_t stream)
        : key_(detail::mix64(seed + detail::kGolden) ^ detail::mix64(stream * detail::kGolden + 0x6A09E667F3BCC909ull)),
          counter_(0) {}

    uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * detail::kGolden); }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n)
    uint64_t uniform_int(uint64_t n) {
        TK_REQUIRE(n > 0, "uniform_int: n must be positive");
        return next_u64() % n;
    }

    // Standard normal via Box-Muller (two draws per sample).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    uint64_t seed_key() const { return key_; }

private:
    uint64_t key_;
    uint64_t counter_;
};

// Derives a child stream id; children of distinct (stream, index) pairs are distinct.
inline uint64_t substream(uint64_t stream, uint64_t index) {
    return detail::mix64(stream ^ detail::mix64(index + 0x243F6A8885A308D3ull));
}

// Fixed stream ids for the pipeline stages.
namespace streams {
constexpr uint64_t kModelInit = 1;
constexpr uint64_t kBatch = 2;
constexpr uint64_t kNoise = 3;
constexpr uint64_t kSampler = 4;
constexpr uint64_t kPrompts = 5;
constexpr uint64_t kSplit = 6;
constexpr uint64_t kBackground = 7;
constexpr uint64_t kData = 8;
} // namespace streams

} // namespace texkit
