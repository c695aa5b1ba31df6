#pragma once

#include <cstdint>
#include <vector>

#include "mills/bigint.hpp"
#include "mills/gaps.hpp"

namespace mills {

// Consecutive primes p < q < r with p | (qr + 1). Half-gaps k, l satisfy
// q = p + 2k, r = q + 2l for p > 2; the (2,3,5) trio has odd gaps and
// carries k = l = 0 as a not-applicable sentinel.
struct HonakerTrio {
    std::uint64_t p = 0, q = 0, r = 0;
    std::uint64_t k = 0, l = 0;
};

// All trios with lo <= p < hi, ascending. Divisibility is exact integer
// arithmetic (double-word modular reduction of q*r + 1 by p).
std::vector<HonakerTrio> search(std::uint64_t lo, std::uint64_t hi,
                                const ScanOptions& opts = {});

// 4k^2 + 4kl + 1, which p divides iff p | (qr + 1) for p > 2. Throws
// std::invalid_argument for the p = 2 trio and std::logic_error if the
// equivalence fails (an implementation bug, not mathematics).
BigInt divisibility_witness(const HonakerTrio& trio);

// Threshold above which no trio can exist under the Cramer-Granville
// conjecture with constant M (delegates to cg_threshold).
std::uint64_t finiteness_bound(double M);

// Generalized predicate: `length` consecutive primes where the first
// divides the product of the others plus (sign = +1) or minus (sign = -1)
// a fixed integer. Defaults reproduce the trio search.
struct TupleRule {
    unsigned length = 3;
    int sign = +1;
    std::uint64_t addend = 1;
};

std::vector<std::vector<std::uint64_t>> search_tuples(std::uint64_t lo, std::uint64_t hi,
                                                      const TupleRule& rule,
                                                      const ScanOptions& opts = {});

}  // namespace mills
