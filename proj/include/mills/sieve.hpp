#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <type_traits>
#include <vector>

namespace mills {

// Primes <= limit, cached and grow-only; safe to call from any thread.
// The returned vector may extend past limit.
std::shared_ptr<const std::vector<std::uint32_t>> small_primes(std::uint32_t limit);

inline constexpr std::uint64_t kDefaultSegmentSize = 1u << 20;

// Memory-bounded sieve of Eratosthenes over odd residues. The callback may
// return void, or bool where false stops the scan early.
class SegmentedSieve {
public:
    explicit SegmentedSieve(std::uint64_t segment_size = kDefaultSegmentSize)
        : segment_size_(segment_size < 256 ? 256 : segment_size) {}

    std::uint64_t segment_size() const { return segment_size_; }

    template <typename F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
        if (hi <= lo) return;
        if (lo <= 2 && hi > 2) {
            if (!invoke(f, 2)) return;
        }

        auto base = small_primes(isqrt_u64(hi - 1));
        std::vector<std::uint64_t> bits;
        std::uint64_t seg_lo = lo < 3 ? 3 : lo | 1;  // first odd candidate
        while (seg_lo < hi) {
            std::uint64_t seg_hi = std::min(hi, seg_lo + segment_size_);
            std::uint64_t n_odds = (seg_hi - seg_lo + 1) / 2;  // seg_lo, seg_lo+2, ...
            bits.assign((n_odds + 63) / 64, 0);
            for (std::uint32_t p : *base) {
                if (p < 3) continue;
                std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
                if (p2 >= seg_hi) break;
                std::uint64_t start = p2;
                if (start < seg_lo) {
                    std::uint64_t m = (seg_lo + p - 1) / p * p;
                    if ((m & 1) == 0) m += p;
                    start = m;
                }
                for (std::uint64_t c = start; c < seg_hi; c += 2ull * p)
                    bits[(c - seg_lo) / 2 / 64] |= 1ull << (((c - seg_lo) / 2) % 64);
            }
            for (std::uint64_t i = 0; i < n_odds; ++i) {
                if (bits[i / 64] & (1ull << (i % 64))) continue;
                if (!invoke(f, seg_lo + 2 * i)) return;
            }
            seg_lo = seg_hi | 1;
        }
    }

    std::uint64_t count(std::uint64_t lo, std::uint64_t hi) const {
        std::uint64_t n = 0;
        for_each_prime(lo, hi, [&](std::uint64_t) { ++n; });
        return n;
    }

    static std::uint64_t isqrt_u64(std::uint64_t n);

private:
    template <typename F>
    static bool invoke(F&& f, std::uint64_t p) {
        if constexpr (std::is_void_v<decltype(f(p))>) {
            f(p);
            return true;
        } else {
            return f(p);
        }
    }

    std::uint64_t segment_size_;
};

}  // namespace mills
