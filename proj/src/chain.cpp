#include "mills/chain.hpp"

namespace mills {

namespace {

ChainTermStatus summarize(const PrimalityVerdict& v) {
    return {v.status, v.method, v.rounds};
}

}  // namespace

MillsChain MillsChain::start(const BigInt& seed, unsigned c, const ExtendOptions& opts) {
    if (c < 3) throw std::invalid_argument("MillsChain: exponent c must be >= 3");
    if (seed < 2) throw std::invalid_argument("MillsChain: seed must be >= 2");
    PrimalityVerdict v = classify(seed, opts.prp_rounds, opts.rng_seed);
    if (v.status == PrimeStatus::Composite)
        throw std::invalid_argument("MillsChain: seed " + to_dec(seed) + " is composite");
    MillsChain chain;
    chain.c_ = c;
    chain.seed_ = seed;
    chain.terms_.push_back(seed);
    chain.statuses_.push_back(summarize(v));
    return chain;
}

MillsChain MillsChain::from_offsets(const BigInt& seed, unsigned c,
                                    const std::vector<std::uint64_t>& offsets,
                                    std::vector<std::optional<ChainTermStatus>> statuses) {
    if (c < 3) throw std::invalid_argument("MillsChain: exponent c must be >= 3");
    if (seed < 2) throw std::invalid_argument("MillsChain: seed must be >= 2");
    if (!statuses.empty() && statuses.size() != offsets.size() + 1)
        throw std::invalid_argument("MillsChain: statuses must cover every term");
    MillsChain chain;
    chain.c_ = c;
    chain.seed_ = seed;
    chain.terms_.push_back(seed);
    for (std::uint64_t a : offsets) {
        if (a == 0) throw std::invalid_argument("MillsChain: offsets must be positive");
        chain.terms_.push_back(ipow(chain.terms_.back(), c) + a);
        chain.offsets_.push_back(a);
    }
    if (statuses.empty())
        statuses.assign(chain.terms_.size(), std::nullopt);
    chain.statuses_ = std::move(statuses);
    return chain;
}

BigInt MillsChain::window_width(std::size_t i) const {
    const BigInt& b = terms_.at(i);
    return ipow(b + 1, c_) - ipow(b, c_) - 1;
}

WindowExhausted::WindowExhausted(std::size_t term_index, const BigInt& bound)
    : std::runtime_error("no prime or PRP below (b+1)^c after term " +
                         std::to_string(term_index + 1) + " (window " + to_dec(bound) + ")"),
      term_index_(term_index) {}

MillsChain extend(const MillsChain& chain, unsigned steps, const ExtendOptions& opts) {
    if (chain.size() == 0) throw std::invalid_argument("extend: empty chain");
    MillsChain out = chain;
    SearchOptions search{opts.rng_seed, opts.threads, opts.small_prime_limit};
    for (unsigned s = 0; s < steps; ++s) {
        const BigInt& b = out.terms_.back();
        BigInt base = ipow(b, out.c_);
        BigInt bound = out.window_width(out.terms_.size() - 1);
        NextPrimeResult r;
        try {
            r = next_prime(base, opts.prp_rounds, bound, search);
        } catch (const SearchExhausted&) {
            throw WindowExhausted(out.terms_.size() - 1, bound);
        }
        out.offsets_.push_back(r.offset);
        out.terms_.push_back(std::move(r.prime));
        out.statuses_.push_back(summarize(r.verdict));
    }
    return out;
}

VerifyReport verify(const MillsChain& chain, const VerifyOptions& opts) {
    VerifyReport report;
    report.minimality_checked = opts.check_minimality;
    report.computed_statuses.assign(chain.size(), std::nullopt);

    auto too_big = [&](const BigInt& t) {
        return opts.max_term_digits != 0 && dec_digits(t) > opts.max_term_digits;
    };

    for (std::size_t i = 0; i < chain.size(); ++i) {
        const BigInt& term = chain.term(i);

        if (i > 0) {
            const BigInt& prev = chain.term(i - 1);
            BigInt expected = ipow(prev, chain.c()) + chain.offsets()[i - 1];
            if (term != expected)
                report.violations.push_back(
                    {i, "term-recompute",
                     "stored term differs from b^c + a at step " + std::to_string(i)});
            BigInt width = chain.window_width(i - 1);
            if (BigInt(chain.offsets()[i - 1]) > width)
                report.violations.push_back(
                    {i, "window", "offset " + std::to_string(chain.offsets()[i - 1]) +
                                      " exceeds cube-gap window " + to_dec(width)});
        }

        if (too_big(term)) {
            report.skipped.push_back(i);
            continue;
        }

        PrimalityVerdict v = classify(term, opts.prp_rounds, opts.rng_seed);
        ++report.terms_checked;
        report.computed_statuses[i] = ChainTermStatus{v.status, v.method, v.rounds};
        if (v.status == PrimeStatus::Composite) {
            std::string detail = "term " + std::to_string(i + 1) + " is composite";
            if (v.witness) detail += " (witness " + to_dec(*v.witness) + ")";
            report.violations.push_back({i, "term-not-prime", detail});
            continue;
        }

        if (opts.check_minimality && i > 0) {
            const BigInt base = ipow(chain.term(i - 1), chain.c());
            const std::uint64_t a = chain.offsets()[i - 1];
            if (a > 1) {
                std::uint64_t limit = opts.small_prime_limit
                                          ? opts.small_prime_limit
                                          : primality_detail::auto_small_prime_limit(base);
                if (mpz_cmp_ui(base.get_mpz_t(), limit) < 0)
                    limit = mpz_get_ui(base.get_mpz_t());
                for (std::uint64_t o : sieve_offsets(base, a - 1, limit)) {
                    PrimalityVerdict sv = classify(base + o, opts.prp_rounds, opts.rng_seed);
                    if (sv.status != PrimeStatus::Composite) {
                        report.violations.push_back(
                            {i, "minimality",
                             "offset " + std::to_string(o) + " < " + std::to_string(a) +
                                 " also yields a prime/PRP at step " + std::to_string(i)});
                        break;
                    }
                }
            }
        }
    }
    return report;
}

std::vector<std::size_t> digit_counts(const MillsChain& chain) {
    std::vector<std::size_t> out;
    out.reserve(chain.size());
    for (const BigInt& t : chain.terms()) out.push_back(dec_digits(t));
    return out;
}

}  // namespace mills
