#include "mills/sieve.hpp"

#include <atomic>
#include <cmath>
#include <mutex>

namespace mills {

namespace {

std::vector<std::uint32_t> sieve_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<std::uint8_t> comp((limit + 1) / 2, 0);  // odds: index i -> 2i+1
    std::uint32_t r = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit)));
    while (static_cast<std::uint64_t>(r + 1) * (r + 1) <= limit) ++r;
    while (static_cast<std::uint64_t>(r) * r > limit) --r;
    for (std::uint32_t p = 3; p <= r; p += 2) {
        if (comp[p / 2]) continue;
        for (std::uint64_t c = static_cast<std::uint64_t>(p) * p; c <= limit; c += 2ull * p)
            comp[c / 2] = 1;
    }
    primes.push_back(2);
    for (std::uint32_t v = 3; v <= limit; v += 2)
        if (!comp[v / 2]) primes.push_back(v);
    return primes;
}

std::mutex g_mutex;
std::shared_ptr<const std::vector<std::uint32_t>> g_primes;
std::atomic<std::uint32_t> g_limit{0};

}  // namespace

std::shared_ptr<const std::vector<std::uint32_t>> small_primes(std::uint32_t limit) {
    if (limit < 1024) limit = 1024;
    if (g_limit.load(std::memory_order_acquire) >= limit) {
        std::lock_guard<std::mutex> lock(g_mutex);
        return g_primes;
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_primes || g_limit.load(std::memory_order_relaxed) < limit) {
        g_primes = std::make_shared<const std::vector<std::uint32_t>>(sieve_to(limit));
        g_limit.store(limit, std::memory_order_release);
    }
    return g_primes;
}

std::uint64_t SegmentedSieve::isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x > n / x) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

}  // namespace mills
