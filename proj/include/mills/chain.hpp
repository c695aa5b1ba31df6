#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mills/bigint.hpp"
#include "mills/primality.hpp"

namespace mills {

// Per-term verdict summary kept with a chain (witness dropped; a composite
// term is a verification failure, not a stored state).
struct ChainTermStatus {
    PrimeStatus status = PrimeStatus::ProbablePrime;
    std::string method;
    int rounds = 0;
};

struct ExtendOptions {
    int prp_rounds = 5;
    std::uint64_t rng_seed = kDefaultRngSeed;
    unsigned threads = 1;
    std::uint64_t small_prime_limit = 0;  // 0 = auto
};

// The prime chain b_1 = seed, b_{n+1} = least prime (or PRP) in the open
// interval (b_n^c, (b_n+1)^c), stored as offsets a_n = b_{n+1} - b_n^c with
// terms cached. Immutable value type; extension returns a new chain.
class MillsChain {
public:
    static MillsChain start(const BigInt& seed, unsigned c, const ExtendOptions& opts);
    static MillsChain start(const ExtendOptions& opts) { return start(BigInt(2), 3, opts); }

    // Rebuild from stored offsets (terms recomputed exactly). Statuses may be
    // empty (all unchecked) or one entry per term.
    static MillsChain from_offsets(const BigInt& seed, unsigned c,
                                   const std::vector<std::uint64_t>& offsets,
                                   std::vector<std::optional<ChainTermStatus>> statuses = {});

    unsigned c() const { return c_; }
    const BigInt& seed() const { return seed_; }
    std::size_t size() const { return terms_.size(); }
    const BigInt& term(std::size_t i) const { return terms_.at(i); }            // b_{i+1}
    const std::vector<BigInt>& terms() const { return terms_; }
    const std::vector<std::uint64_t>& offsets() const { return offsets_; }      // a_1..a_{N-1}
    const std::optional<ChainTermStatus>& status(std::size_t i) const { return statuses_.at(i); }
    const std::vector<std::optional<ChainTermStatus>>& statuses() const { return statuses_; }

    // Width of the open search interval after term i: (b+1)^c - b^c - 1.
    BigInt window_width(std::size_t i) const;

private:
    MillsChain() = default;

    unsigned c_ = 3;
    BigInt seed_ = 2;
    std::vector<BigInt> terms_;
    std::vector<std::uint64_t> offsets_;
    std::vector<std::optional<ChainTermStatus>> statuses_;

    friend MillsChain extend(const MillsChain&, unsigned, const ExtendOptions&);
};

class WindowExhausted : public std::runtime_error {
public:
    WindowExhausted(std::size_t term_index, const BigInt& bound);
    std::size_t term_index() const { return term_index_; }

private:
    std::size_t term_index_;
};

// Appends `steps` terms, each found by a bounded next-prime search over the
// full cube-gap window. Exhausting a window would contradict the
// between-cubes lemma and aborts with WindowExhausted.
MillsChain extend(const MillsChain& chain, unsigned steps, const ExtendOptions& opts);

struct VerifyOptions {
    int prp_rounds = 5;
    std::uint64_t rng_seed = kDefaultRngSeed;
    unsigned threads = 1;
    std::uint64_t small_prime_limit = 0;   // 0 = auto
    bool check_minimality = true;
    std::size_t max_term_digits = 0;       // 0 = no cap; larger terms are skipped
};

struct VerifyReport {
    struct Violation {
        std::size_t index;  // 0-based term index
        std::string kind;   // "term-recompute", "window", "term-not-prime", "minimality"
        std::string detail;
    };
    std::vector<Violation> violations;
    std::vector<std::size_t> skipped;  // term indices skipped by max_term_digits
    // Freshly computed verdict per term; empty entries for skipped terms.
    // Lets callers persist verdicts without classifying twice.
    std::vector<std::optional<ChainTermStatus>> computed_statuses;
    std::size_t terms_checked = 0;
    bool minimality_checked = false;
    bool ok() const { return violations.empty(); }
};

// Re-tests every term, re-checks the recurrence and window bound, and (by
// default) re-confirms minimality of each offset by classifying every sieve
// survivor below it. Violations are report entries, never exceptions.
VerifyReport verify(const MillsChain& chain, const VerifyOptions& opts);

std::vector<std::size_t> digit_counts(const MillsChain& chain);

}  // namespace mills
