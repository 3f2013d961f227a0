#pragma once

#include <array>
#include <cstdint>

namespace hsc {

/// Philox4x32-10 counter-based generator. Streams are cheap to construct and
/// statistically independent, so Monte Carlo trials can be keyed as
/// (master seed, trial index) and reproduce bit-identically on any platform.
class CounterRng {
public:
    CounterRng(std::uint64_t key, std::uint64_t stream) {
        key_[0] = static_cast<std::uint32_t>(key);
        key_[1] = static_cast<std::uint32_t>(key >> 32);
        counter_[0] = static_cast<std::uint32_t>(stream);
        counter_[1] = static_cast<std::uint32_t>(stream >> 32);
        counter_[2] = 0;
        counter_[3] = 0;
    }

    std::uint32_t next_u32() {
        if (lane_ == 4) {
            block_ = philox(counter_, key_);
            // advance the block counter (upper two words)
            if (++counter_[2] == 0) ++counter_[3];
            lane_ = 0;
        }
        return block_[lane_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t lo = next_u32();
        return lo | (static_cast<std::uint64_t>(next_u32()) << 32);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    /// Uniform integer in [0, n).
    std::uint32_t next_below(std::uint32_t n) {
        // rejection sampling keeps the distribution exact
        std::uint64_t threshold = (std::uint64_t{1} << 32) % n;
        while (true) {
            std::uint64_t r = next_u32();
            if (r >= threshold) return static_cast<std::uint32_t>(r % n);
        }
    }

private:
    static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
            std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
            std::array<std::uint32_t, 4> next{
                static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                static_cast<std::uint32_t>(p0)};
            ctr = next;
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }

    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> counter_{};
    std::array<std::uint32_t, 4> block_{};
    int lane_ = 4;
};

}  // namespace hsc
