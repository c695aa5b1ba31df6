#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mills {

// All gap ratios use the natural log; changing the base changes every
// constant in sight.
struct GapRecord {
    std::uint64_t prime = 0;  // gap starts here
    std::uint64_t next = 0;   // the following prime
    std::uint64_t gap = 0;    // next - prime
    double ratio = 0;         // gap / ln^2(prime)
};

struct ScanOptions {
    std::uint64_t segment_size = 1u << 20;
    unsigned threads = 1;
};

// Primes p < limit whose following gap strictly exceeds every earlier
// prime's following gap, ascending. The final gap may straddle limit; it is
// attributed to its starting prime.
std::vector<GapRecord> maximal_gaps(std::uint64_t limit, const ScanOptions& opts = {});

struct RatioSup {
    double value = 0;
    GapRecord attained;
};

// max of gap/ln^2(p) over primes p in [lo, hi), the straddling gap counted
// for its starting prime. Uses maximal-gap records for the bulk (within a
// record's span the ratio is largest at the record itself); the head region
// [lo, first record >= lo) is scanned pair-by-pair because lo may land
// mid-span, where the sup need not sit on any in-range record.
RatioSup ratio_sup(std::uint64_t lo, std::uint64_t hi, const ScanOptions& opts = {});

// Exact pi(x) by segmented sieve.
std::uint64_t prime_count(std::uint64_t x, const ScanOptions& opts = {});

struct CubeCheckReport {
    std::uint64_t x_max = 0;
    std::optional<std::uint64_t> first_failure;  // smallest x with empty (x^3, (x+1)^3)
    std::uint64_t max_offset = 0;                // largest next_prime(x^3) - x^3 seen
    std::uint64_t max_offset_x = 0;
    bool passed() const { return !first_failure.has_value(); }
};

// Confirms a prime in the open interval (x^3, (x+1)^3) for every integer
// x in [1, x_max] via next-prime search.
CubeCheckReport cube_interval_check(std::uint64_t x_max);

// Largest integer p > 50 with sqrt((p-1)/2) <= M * ln^2(p); the left/right
// ratio is increasing there, so exponential growth plus bisection is exact.
// Returns 50 when no p > 50 qualifies.
std::uint64_t cg_threshold(double M);

// Line-oriented "p gap ratio" table, mirroring published maximal-gap lists.
std::string format_gap_records(const std::vector<GapRecord>& records);
std::vector<GapRecord> parse_gap_records(std::istream& in);

struct TableDiff {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Diffs a third-party table against computed records: p and gap must match
// exactly, the ratio within 1e-9.
TableDiff diff_gap_records(const std::vector<GapRecord>& computed,
                           const std::vector<GapRecord>& table);

}  // namespace mills
