#include "mills/primality.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "mills/sieve.hpp"

namespace mills {

namespace primality_detail {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool strong_prp_u64(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool strong_prp(const BigInt& n, const BigInt& a) {
    BigInt base = a % n;
    if (base == 0) return true;
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

namespace {

// (x/2) mod n for odd n.
void halve_mod(BigInt& x, const BigInt& n) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
}

}  // namespace

bool strong_lucas_prp(const BigInt& n) {
    // Selfridge parameter search. Perfect squares never yield (D/n) = -1,
    // so the caller must have excluded them.
    long d_abs = 5;
    int sign = 1;
    long D;
    for (;;) {
        D = sign * d_abs;
        BigInt Dz(D);
        int j = mpz_jacobi(Dz.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) return n == d_abs;  // shared factor with D
        d_abs += 2;
        sign = -sign;
    }
    const long Q = (1 - D) / 4;

    // Strong test: n+1 = d * 2^s with d odd; probable prime if U_d = 0 or
    // V_{d*2^r} = 0 for some 0 <= r < s. Binary chain with P = 1:
    //   doubling:   U_{2k} = U_k V_k,  V_{2k} = V_k^2 - 2 Q^k
    //   increment:  U_{2k+1} = (U_{2k} + V_{2k})/2,
    //               V_{2k+1} = (D U_{2k} + V_{2k})/2
    BigInt d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    BigInt U = 1, V = 1, Qk = BigInt(Q) % n;
    if (Qk < 0) Qk += n;
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = bits - 1; i-- > 0;) {
        U = U * V % n;
        V = V * V - 2 * Qk;
        V %= n;
        if (V < 0) V += n;
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            BigInt U2 = U + V;
            halve_mod(U2, n);
            U2 %= n;
            BigInt V2 = D * U + V;
            V2 %= n;
            if (V2 < 0) V2 += n;
            halve_mod(V2, n);
            V2 %= n;
            U = U2;
            V = V2;
            Qk = Qk * Q % n;
            if (Qk < 0) Qk += n;
        }
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = V * V - 2 * Qk;
        V %= n;
        if (V < 0) V += n;
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

std::uint64_t auto_small_prime_limit(const BigInt& candidate_scale) {
    std::size_t digits = dec_digits(candidate_scale);
    if (digits < 100) return 100000;
    if (digits < 1000) return 1000000;
    return 10000000;
}

namespace {

constexpr std::array<std::uint32_t, 16> kTrialPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

constexpr std::array<std::uint32_t, 13> kMrBases = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Extra-round bases are a pure function of (seed, n): reproducible and
// independent of thread scheduling.
BigInt random_base(const BigInt& n, std::uint64_t seed, int round) {
    std::uint64_t state = seed ^ (0x517cc1b727220a95ULL * (round + 1));
    state ^= low_u64(n);
    state ^= static_cast<std::uint64_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) << 32;
    const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    BigInt acc = 0;
    for (std::size_t i = 0; i < words; ++i) {
        acc <<= 64;
        std::uint64_t w = splitmix64(state);
        BigInt wz;
        mpz_import(wz.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
        acc |= wz;
    }
    BigInt span = n - 3;  // bases in [2, n-2]
    return acc % span + 2;
}

PrimalityVerdict classify_u64(std::uint64_t n) {
    PrimalityVerdict v;
    if (n < 2) {
        v.status = PrimeStatus::Composite;
        v.method = "trivial";
        return v;
    }
    for (std::uint32_t p : kTrialPrimes) {
        if (n == p) {
            v.status = PrimeStatus::ProvablePrime;
            v.method = "trial-division";
            return v;
        }
        if (n % p == 0) {
            v.status = PrimeStatus::Composite;
            v.method = "trial-division";
            v.witness = BigInt(static_cast<unsigned long>(p));
            return v;
        }
    }
    if (n < 59ull * 59ull) {
        v.status = PrimeStatus::ProvablePrime;
        v.method = "trial-division";
        return v;
    }
    for (std::uint32_t a : kMrBases) {
        if (!strong_prp_u64(n, a)) {
            v.status = PrimeStatus::Composite;
            v.method = "deterministic-mr-basis";
            v.witness = BigInt(static_cast<unsigned long>(a));
            return v;
        }
    }
    v.status = PrimeStatus::ProvablePrime;
    v.method = "deterministic-mr-basis";
    return v;
}

}  // namespace
}  // namespace primality_detail

const BigInt& deterministic_mr_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

bool is_prime_u64(std::uint64_t n) {
    using namespace primality_detail;
    if (n < 2) return false;
    for (std::uint32_t p : kTrialPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 59ull * 59ull) return true;
    for (std::uint32_t a : kMrBases)
        if (!strong_prp_u64(n, a)) return false;
    return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n < 2 ? 2 : n + 1;
    if (c <= 2) return 2;
    if ((c & 1) == 0) {
        if (c == 2) return 2;
        ++c;
    }
    while (!is_prime_u64(c)) c += 2;
    return c;
}

PrimalityVerdict classify(const BigInt& n, int prp_rounds, std::uint64_t rng_seed) {
    using namespace primality_detail;
    if (prp_rounds < 1) throw std::invalid_argument("classify: prp_rounds must be >= 1");
    if (mpz_sgn(n.get_mpz_t()) < 0)
        return {PrimeStatus::Composite, "trivial", std::nullopt, 0};
    if (fits_u64(n)) return classify_u64(low_u64(n));

    PrimalityVerdict v;

    // Cheap divisibility screen. Factors found here come from residues of n,
    // not from factoring attempts on anything else.
    auto primes = small_primes(3000);
    for (std::uint32_t p : *primes) {
        if (p > 3000) break;
        if (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) {
            v.status = PrimeStatus::Composite;
            v.method = "trial-division";
            v.witness = BigInt(static_cast<unsigned long>(p));
            return v;
        }
    }

    if (n <= deterministic_mr_bound()) {
        for (std::uint32_t a : kMrBases) {
            if (!strong_prp(n, BigInt(static_cast<unsigned long>(a)))) {
                v.status = PrimeStatus::Composite;
                v.method = "deterministic-mr-basis";
                v.witness = BigInt(static_cast<unsigned long>(a));
                return v;
            }
        }
        v.status = PrimeStatus::ProvablePrime;
        v.method = "deterministic-mr-basis";
        return v;
    }

    if (!strong_prp(n, BigInt(2))) {
        v.status = PrimeStatus::Composite;
        v.method = "mr";
        v.witness = BigInt(2);
        return v;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        v.status = PrimeStatus::Composite;
        v.method = "perfect-square";
        v.witness = root;
        return v;
    }
    if (!strong_lucas_prp(n)) {
        v.status = PrimeStatus::Composite;
        v.method = "lucas";
        return v;
    }
    for (int round = 1; round < prp_rounds; ++round) {
        BigInt a = random_base(n, rng_seed, round);
        if (!strong_prp(n, a)) {
            v.status = PrimeStatus::Composite;
            v.method = "mr";
            v.witness = a;
            return v;
        }
    }
    v.status = PrimeStatus::ProbablePrime;
    v.method = "mr+lucas";
    v.rounds = prp_rounds;
    return v;
}

SearchExhausted::SearchExhausted(BigInt bound)
    : std::runtime_error("no prime or PRP within search bound " + to_dec(bound)),
      bound_(std::move(bound)) {}

std::vector<std::uint64_t> sieve_offsets(const BigInt& base, std::uint64_t window,
                                         std::uint64_t small_prime_limit) {
    if (window < 1) return {};
    std::vector<std::uint8_t> removed(window + 1, 0);
    if (small_prime_limit >= 2) {
        std::uint32_t limit32 = static_cast<std::uint32_t>(
            std::min<std::uint64_t>(small_prime_limit, 0xffffffffull));
        auto primes = small_primes(limit32);
        for (std::uint32_t p : *primes) {
            if (p > limit32) break;
            std::uint64_t r = mpz_fdiv_ui(base.get_mpz_t(), p);
            std::uint64_t o = (r == 0) ? p : p - r;
            for (; o <= window; o += p) removed[o] = 1;
        }
    }
    std::vector<std::uint64_t> survivors;
    for (std::uint64_t o = 1; o <= window; ++o)
        if (!removed[o]) survivors.push_back(o);
    return survivors;
}

namespace {

double approx_ln(const BigInt& n) {
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    return 0.6931471805599453 * static_cast<double>(bits);
}

}  // namespace

NextPrimeResult next_prime(const BigInt& n, int prp_rounds,
                           const std::optional<BigInt>& search_bound,
                           const SearchOptions& opts) {
    using namespace primality_detail;
    if (mpz_sgn(n.get_mpz_t()) < 0) throw std::domain_error("next_prime: n must be >= 0");
    if (search_bound && *search_bound < 1) throw SearchExhausted(*search_bound);

    std::uint64_t limit = opts.small_prime_limit ? opts.small_prime_limit
                                                 : auto_small_prime_limit(n);
    // A prime candidate must never be sieved out by itself: candidates are
    // > base, so capping the factor bound at base keeps every prime alive.
    if (n < 3) {
        limit = 0;
    } else if (mpz_cmp_ui(n.get_mpz_t(), limit) < 0) {
        limit = mpz_get_ui(n.get_mpz_t());
    }

    const std::uint64_t chunk =
        std::max<std::uint64_t>(512, static_cast<std::uint64_t>(16.0 * approx_ln(n + 2)));
    const unsigned threads = std::max(1u, opts.threads);

    BigInt searched = 0;  // offsets (n, n + searched] fully ruled out
    for (;;) {
        BigInt window_big(chunk);
        if (search_bound) {
            BigInt remaining = *search_bound - searched;
            if (remaining <= 0) throw SearchExhausted(*search_bound);
            if (window_big > remaining) window_big = remaining;
        }
        const std::uint64_t window = mpz_get_ui(window_big.get_mpz_t());
        const BigInt chunk_base = n + searched;
        const std::vector<std::uint64_t> survivors = sieve_offsets(chunk_base, window, limit);

        if (threads == 1 || survivors.size() < 2) {
            for (std::uint64_t o : survivors) {
                BigInt candidate = chunk_base + o;
                PrimalityVerdict verdict = classify(candidate, prp_rounds, opts.rng_seed);
                if (verdict.status != PrimeStatus::Composite) {
                    BigInt off = candidate - n;
                    return {std::move(candidate), std::move(verdict),
                            mpz_get_ui(off.get_mpz_t())};
                }
            }
        } else {
            // Ordered batches: batch results are inspected in offset order,
            // so the first hit is the minimal qualifying candidate.
            for (std::size_t i = 0; i < survivors.size(); i += threads) {
                const std::size_t batch = std::min<std::size_t>(threads, survivors.size() - i);
                std::vector<PrimalityVerdict> verdicts(batch);
                std::vector<std::thread> pool;
                pool.reserve(batch);
                for (std::size_t j = 0; j < batch; ++j) {
                    pool.emplace_back([&, j] {
                        BigInt candidate = chunk_base + survivors[i + j];
                        verdicts[j] = classify(candidate, prp_rounds, opts.rng_seed);
                    });
                }
                for (auto& t : pool) t.join();
                for (std::size_t j = 0; j < batch; ++j) {
                    if (verdicts[j].status != PrimeStatus::Composite) {
                        BigInt candidate = chunk_base + survivors[i + j];
                        BigInt off = candidate - n;
                        return {std::move(candidate), std::move(verdicts[j]),
                                mpz_get_ui(off.get_mpz_t())};
                    }
                }
            }
        }
        searched += window;
        if (search_bound && searched >= *search_bound)
            throw SearchExhausted(*search_bound);
    }
}

}  // namespace mills
