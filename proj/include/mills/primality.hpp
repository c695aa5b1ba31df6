#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mills/bigint.hpp"

namespace mills {

inline constexpr std::uint64_t kDefaultRngSeed = 0x6d696c6c73ULL;

enum class PrimeStatus { Composite, ProvablePrime, ProbablePrime };

// method tags: "trial-division", "deterministic-mr-basis", "mr", "lucas",
// "perfect-square", "mr+lucas", "trivial"
struct PrimalityVerdict {
    PrimeStatus status = PrimeStatus::Composite;
    std::string method;
    std::optional<BigInt> witness;  // for Composite, re-checkable when available
    int rounds = 0;                 // strong-pseudoprime rounds behind ProbablePrime
};

// Largest n for which the fixed base set {2,3,...,41} (first 13 primes) is a
// deterministic strong-pseudoprime proof. Everything the gap and Honaker
// scans ever classify sits far below this. Above it verdicts degrade to
// ProbablePrime, which mirrors how the large chain terms are actually known.
const BigInt& deterministic_mr_bound();  // 3317044064679887385961981

PrimalityVerdict classify(const BigInt& n, int prp_rounds,
                          std::uint64_t rng_seed = kDefaultRngSeed);

// Deterministic for the full 64-bit range (trial division + 12 fixed bases).
bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_u64(std::uint64_t n);

class SearchExhausted : public std::runtime_error {
public:
    explicit SearchExhausted(BigInt bound);
    const BigInt& bound() const { return bound_; }

private:
    BigInt bound_;
};

struct SearchOptions {
    std::uint64_t rng_seed = kDefaultRngSeed;
    unsigned threads = 1;
    std::uint64_t small_prime_limit = 0;  // 0 = auto-scale with digit count
};

struct NextPrimeResult {
    BigInt prime;
    PrimalityVerdict verdict;
    std::uint64_t offset;  // prime - n
};

// Least p > n that classifies as not Composite. Steps through sieve
// survivors in increasing order; with search_bound set, exhausting
// (n, n + bound] raises SearchExhausted. When threads > 1 survivors are
// tested in ordered batches, so the returned p is minimal regardless of
// worker completion order.
NextPrimeResult next_prime(const BigInt& n, int prp_rounds,
                           const std::optional<BigInt>& search_bound = {},
                           const SearchOptions& opts = {});

// Offsets o in [1, window] such that base + o has no prime factor <=
// small_prime_limit. Works from base mod p per small prime; base + o is
// never divided.
std::vector<std::uint64_t> sieve_offsets(const BigInt& base, std::uint64_t window,
                                         std::uint64_t small_prime_limit);

namespace primality_detail {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool strong_prp_u64(std::uint64_t n, std::uint64_t a);

// n odd >= 3. Strong probable-prime test to base a (a mod n == 0 passes).
bool strong_prp(const BigInt& n, const BigInt& a);
// n odd >= 3, not a perfect square. Strong Lucas test with Selfridge's
// parameter choice (first D in 5, -7, 9, -11, ... with (D/n) = -1; P = 1,
// Q = (1-D)/4).
bool strong_lucas_prp(const BigInt& n);

std::uint64_t auto_small_prime_limit(const BigInt& candidate_scale);

}  // namespace primality_detail

}  // namespace mills
