#include "mills/gaps.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mills/bigint.hpp"
#include "mills/primality.hpp"
#include "mills/sieve.hpp"

namespace mills {

namespace {

double gap_ratio(std::uint64_t p, std::uint64_t gap) {
    const double lp = std::log(static_cast<double>(p));
    return static_cast<double>(gap) / (lp * lp);
}

// Walk consecutive prime pairs (p, s(p)) with p < limit, extending the scan
// past limit until the final gap is resolved. f(p, next) may return false to
// stop early.
template <typename F>
void for_each_gap(std::uint64_t start, std::uint64_t limit, std::uint64_t segment_size, F&& f) {
    SegmentedSieve sieve(segment_size);
    std::uint64_t prev = 0;
    bool done = false;
    std::uint64_t hi = limit + 512;
    std::uint64_t lo = start;
    while (!done) {
        sieve.for_each_prime(lo, hi, [&](std::uint64_t p) {
            if (prev != 0) {
                if (prev >= limit) {
                    done = true;
                    return false;
                }
                if (!f(prev, p)) {
                    done = true;
                    return false;
                }
            }
            prev = p;
            return true;
        });
        if (!done) {
            if (prev >= limit) break;  // ran out before any prime >= limit appeared
            lo = hi;
            hi += std::max<std::uint64_t>(4096, hi / 16);
        }
    }
}

struct ChunkScan {
    std::uint64_t first_prime = 0;
    std::uint64_t last_prime = 0;
    // Gap maxima relative to the chunk's own history (superset of the global
    // records inside the chunk).
    std::vector<GapRecord> local;
};

ChunkScan scan_chunk(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size) {
    ChunkScan out;
    SegmentedSieve sieve(segment_size);
    std::uint64_t prev = 0, best = 0;
    sieve.for_each_prime(lo, hi, [&](std::uint64_t p) {
        if (out.first_prime == 0) out.first_prime = p;
        if (prev != 0) {
            const std::uint64_t gap = p - prev;
            if (gap > best) {
                best = gap;
                out.local.push_back({prev, p, gap, gap_ratio(prev, gap)});
            }
        }
        prev = p;
    });
    out.last_prime = prev;
    return out;
}

}  // namespace

std::vector<GapRecord> maximal_gaps(std::uint64_t limit, const ScanOptions& opts) {
    if (limit < 3) throw std::invalid_argument("maximal_gaps: limit must be >= 3");
    std::vector<GapRecord> records;
    const unsigned threads = std::max(1u, opts.threads);

    if (threads == 1 || limit < (1u << 22)) {
        std::uint64_t best = 0;
        for_each_gap(2, limit, opts.segment_size, [&](std::uint64_t p, std::uint64_t next) {
            const std::uint64_t gap = next - p;
            if (gap > best) {
                best = gap;
                records.push_back({p, next, gap, gap_ratio(p, gap)});
            }
            return true;
        });
        return records;
    }

    // Chunked scan: per-chunk prefix maxima merge into the global record list
    // (max-reduction over an ordered concatenation, boundary gaps included).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t width = (limit - 2) / threads + 1;
    for (std::uint64_t lo = 2; lo < limit; lo += width)
        ranges.emplace_back(lo, std::min(limit, lo + width));

    std::vector<ChunkScan> chunks(ranges.size());
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] {
            chunks[i] = scan_chunk(ranges[i].first, ranges[i].second, opts.segment_size);
        });
    for (auto& t : pool) t.join();

    std::uint64_t best = 0;
    std::uint64_t carry = 0;  // last prime of the previous non-empty chunk
    for (const ChunkScan& chunk : chunks) {
        if (chunk.first_prime == 0) continue;  // no primes in range
        if (carry != 0) {
            const std::uint64_t gap = chunk.first_prime - carry;
            if (gap > best) {
                best = gap;
                records.push_back({carry, chunk.first_prime, gap, gap_ratio(carry, gap)});
            }
        }
        for (const GapRecord& rec : chunk.local) {
            if (rec.gap > best) {
                best = rec.gap;
                records.push_back(rec);
            }
        }
        carry = chunk.last_prime;
    }
    // Final straddling gap: the last prime below limit still needs s(p).
    if (carry != 0 && carry < limit) {
        const std::uint64_t next = next_prime_u64(carry);
        const std::uint64_t gap = next - carry;
        if (gap > best) records.push_back({carry, next, gap, gap_ratio(carry, gap)});
    }
    return records;
}

RatioSup ratio_sup(std::uint64_t lo, std::uint64_t hi, const ScanOptions& opts) {
    if (lo < 11 || lo >= hi)
        throw std::invalid_argument("ratio_sup: requires 11 <= lo < hi");

    RatioSup out;
    out.value = -1;
    std::uint64_t best_gap = 0;
    bool in_head = true;  // no maximal-gap record with start >= lo seen yet

    for_each_gap(2, hi, opts.segment_size, [&](std::uint64_t p, std::uint64_t next) {
        const std::uint64_t gap = next - p;
        const bool is_record = gap > best_gap;
        if (is_record) best_gap = gap;
        if (p >= lo) {
            if (is_record) in_head = false;
            if (is_record || in_head) {
                const double r = gap_ratio(p, gap);
                if (r > out.value) {
                    out.value = r;
                    out.attained = {p, next, gap, r};
                }
            }
        }
        return true;
    });
    if (out.value < 0) throw std::invalid_argument("ratio_sup: no primes in [lo, hi)");
    return out;
}

std::uint64_t prime_count(std::uint64_t x, const ScanOptions& opts) {
    if (x < 2) return 0;
    const unsigned threads = std::max(1u, opts.threads);
    SegmentedSieve sieve(opts.segment_size);
    if (threads == 1 || x < (1u << 22)) return sieve.count(2, x + 1);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t width = (x - 1) / threads + 1;
    for (std::uint64_t lo = 2; lo <= x; lo += width)
        ranges.emplace_back(lo, std::min(x + 1, lo + width));
    std::vector<std::uint64_t> counts(ranges.size(), 0);
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back(
            [&, i] { counts[i] = sieve.count(ranges[i].first, ranges[i].second); });
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

CubeCheckReport cube_interval_check(std::uint64_t x_max) {
    if (x_max < 1) throw std::invalid_argument("cube_interval_check: x_max must be >= 1");
    CubeCheckReport report;
    report.x_max = x_max;

    // x^3 stays in uint64 through x = 2642244; (x+1)^3 needs one less.
    const std::uint64_t u64_safe = 2000000;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        std::uint64_t offset;
        bool found;
        if (x <= u64_safe) {
            const std::uint64_t lo = x * x * x;
            const std::uint64_t hi = (x + 1) * (x + 1) * (x + 1);
            const std::uint64_t p = next_prime_u64(lo);
            found = p < hi;
            offset = p - lo;
        } else {
            const BigInt xb(static_cast<unsigned long>(x));
            const BigInt lo = ipow(xb, 3);
            const BigInt width = ipow(xb + 1, 3) - lo - 1;
            try {
                NextPrimeResult r = next_prime(lo, 1, width);
                found = true;
                offset = r.offset;
            } catch (const SearchExhausted&) {
                found = false;
                offset = 0;
            }
        }
        if (!found) {
            report.first_failure = x;
            return report;
        }
        if (offset > report.max_offset) {
            report.max_offset = offset;
            report.max_offset_x = x;
        }
    }
    return report;
}

std::uint64_t cg_threshold(double M) {
    if (!(M > 0)) throw std::domain_error("cg_threshold: M must be > 0");
    auto fits = [M](std::uint64_t p) {
        const long double lp = std::log(static_cast<long double>(p));
        return std::sqrt((static_cast<long double>(p) - 1) / 2) <= M * lp * lp;
    };
    const std::uint64_t cap = 1ull << 62;
    if (!fits(51)) return 50;
    std::uint64_t lo = 51, hi = 51;
    while (fits(hi)) {
        lo = hi;
        if (hi >= cap / 2) return cap;  // out of the supported range
        hi *= 2;
    }
    // Largest qualifying p in [lo, hi): invariant fits(lo), !fits(hi).
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (fits(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string format_gap_records(const std::vector<GapRecord>& records) {
    std::ostringstream out;
    out.precision(15);
    for (const GapRecord& r : records)
        out << r.prime << " " << r.gap << " " << r.ratio << "\n";
    return out.str();
}

std::vector<GapRecord> parse_gap_records(std::istream& in) {
    std::vector<GapRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        GapRecord r;
        if (!(ss >> r.prime >> r.gap >> r.ratio))
            throw std::runtime_error("gap table line " + std::to_string(line_no) +
                                     ": expected 'p gap ratio'");
        r.next = r.prime + r.gap;
        out.push_back(r);
    }
    return out;
}

TableDiff diff_gap_records(const std::vector<GapRecord>& computed,
                           const std::vector<GapRecord>& table) {
    TableDiff diff;
    const std::size_t n = std::max(computed.size(), table.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= computed.size()) {
            diff.mismatches.push_back("extra table row: p=" + std::to_string(table[i].prime));
            continue;
        }
        if (i >= table.size()) {
            diff.mismatches.push_back("missing table row: p=" +
                                      std::to_string(computed[i].prime));
            continue;
        }
        const GapRecord& a = computed[i];
        const GapRecord& b = table[i];
        if (a.prime != b.prime || a.gap != b.gap)
            diff.mismatches.push_back("row " + std::to_string(i + 1) + ": computed p=" +
                                      std::to_string(a.prime) + " gap=" + std::to_string(a.gap) +
                                      ", table p=" + std::to_string(b.prime) +
                                      " gap=" + std::to_string(b.gap));
        else if (std::abs(a.ratio - b.ratio) > 1e-9)
            diff.mismatches.push_back("row " + std::to_string(i + 1) + ": ratio differs");
    }
    return diff;
}

}  // namespace mills
