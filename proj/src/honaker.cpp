#include "mills/honaker.hpp"

#include <deque>
#include <stdexcept>
#include <thread>

#include "mills/primality.hpp"
#include "mills/sieve.hpp"

namespace mills {

namespace {

using primality_detail::mulmod_u64;

// Rolling-window scan over one p-range; collects tuples with lo <= first < hi.
// The window extends past hi to complete tuples that start just below it.
std::vector<std::vector<std::uint64_t>> scan_range(std::uint64_t lo, std::uint64_t hi,
                                                   const TupleRule& rule,
                                                   std::uint64_t segment_size) {
    std::vector<std::vector<std::uint64_t>> hits;
    std::deque<std::uint64_t> window;
    SegmentedSieve sieve(segment_size);
    bool done = false;
    std::uint64_t scan_lo = lo < 2 ? 2 : lo;
    std::uint64_t scan_hi = hi + 512;
    while (!done) {
        sieve.for_each_prime(scan_lo, scan_hi, [&](std::uint64_t p) {
            window.push_back(p);
            if (window.size() < rule.length) return true;
            const std::uint64_t first = window.front();
            if (first >= hi) {
                done = true;
                return false;
            }
            std::uint64_t acc = 1 % first;
            for (std::size_t i = 1; i < rule.length; ++i)
                acc = mulmod_u64(acc, window[i] % first, first);
            const std::uint64_t add = rule.addend % first;
            const std::uint64_t value =
                rule.sign >= 0 ? (acc + add) % first : (acc + first - add) % first;
            if (value == 0) hits.emplace_back(window.begin(), window.end());
            window.pop_front();
            return true;
        });
        if (!done) {
            if (!window.empty() && window.front() >= hi) break;
            scan_lo = scan_hi;
            scan_hi += std::max<std::uint64_t>(4096, scan_hi / 16);
        }
    }
    return hits;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> search_tuples(std::uint64_t lo, std::uint64_t hi,
                                                      const TupleRule& rule,
                                                      const ScanOptions& opts) {
    if (rule.length < 2) throw std::invalid_argument("search_tuples: length must be >= 2");
    if (lo < 2 || lo >= hi) throw std::invalid_argument("search_tuples: requires 2 <= lo < hi");
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || hi - lo < (1u << 22))
        return scan_range(lo, hi, rule, opts.segment_size);

    // Disjoint p-ranges; each scan runs past its boundary for the trailing
    // tuples, so concatenation in range order is the sequential result.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t width = (hi - lo) / threads + 1;
    for (std::uint64_t a = lo; a < hi; a += width)
        ranges.emplace_back(a, std::min(hi, a + width));
    std::vector<std::vector<std::vector<std::uint64_t>>> parts(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] {
            parts[i] = scan_range(ranges[i].first, ranges[i].second, rule, opts.segment_size);
        });
    for (auto& t : pool) t.join();
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& part : parts)
        for (auto& tuple : part) out.push_back(std::move(tuple));
    return out;
}

std::vector<HonakerTrio> search(std::uint64_t lo, std::uint64_t hi, const ScanOptions& opts) {
    std::vector<HonakerTrio> trios;
    for (const auto& t : search_tuples(lo, hi, TupleRule{}, opts)) {
        HonakerTrio trio{t[0], t[1], t[2], 0, 0};
        if (trio.p > 2) {
            trio.k = (trio.q - trio.p) / 2;
            trio.l = (trio.r - trio.q) / 2;
        }
        trios.push_back(trio);
    }
    return trios;
}

BigInt divisibility_witness(const HonakerTrio& trio) {
    if (trio.p <= 2)
        throw std::invalid_argument("divisibility_witness: needs p > 2 (even-gap form)");
    const BigInt k(static_cast<unsigned long>(trio.k));
    const BigInt l(static_cast<unsigned long>(trio.l));
    BigInt witness = 4 * k * k + 4 * k * l + 1;
    if (!mpz_divisible_ui_p(witness.get_mpz_t(), trio.p))
        throw std::logic_error("divisibility_witness: p does not divide 4k^2+4kl+1; "
                               "trio fields are inconsistent");
    return witness;
}

std::uint64_t finiteness_bound(double M) { return cg_threshold(M); }

}  // namespace mills
