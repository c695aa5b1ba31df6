#include "mills/bigint.hpp"

#include <stdexcept>

namespace mills {

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt result = 1;
    BigInt sq = base;
    while (exp > 0) {
        if (exp & 1) result *= sq;
        exp >>= 1;
        if (exp > 0) sq *= sq;
    }
    return result;
}

IrootResult iroot(const BigInt& n, unsigned k) {
    if (k == 0) throw std::domain_error("iroot: k must be >= 1");
    if (mpz_sgn(n.get_mpz_t()) < 0) throw std::domain_error("iroot: n must be >= 0");
    if (k == 1 || n == 0 || n == 1) return {n, true};

    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    // 2^ceil(bits/k) >= n^(1/k): n < 2^bits so n^(1/k) < 2^(bits/k).
    BigInt x = 1;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), (bits + k - 1) / k);

    BigInt y, pw;
    for (;;) {
        // y = ((k-1)*x + n / x^(k-1)) / k, floor division throughout.
        pw = ipow(x, k - 1);
        y = (x * (k - 1) + n / pw) / k;
        if (y >= x) break;
        x = y;
    }
    pw = ipow(x, k);
    return {x, pw == n};
}

std::string to_dec(const BigInt& n) { return n.get_str(10); }

BigInt from_dec(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_dec: empty string");
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("from_dec: not a decimal digit string: " + s);
    }
    return BigInt(s, 10);
}

std::size_t dec_digits(const BigInt& n) {
    if (n == 0) return 1;
    // sizeinbase(10) may overestimate by one; correct with a comparison.
    std::size_t est = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (est == 1) return 1;
    BigInt p = ipow(BigInt(10), est - 1);
    return n >= p ? est : est - 1;
}

std::uint64_t low_u64(const BigInt& n) {
    BigInt lo;
    mpz_fdiv_r_2exp(lo.get_mpz_t(), n.get_mpz_t(), 32);
    BigInt hi;
    mpz_fdiv_q_2exp(hi.get_mpz_t(), n.get_mpz_t(), 32);
    mpz_fdiv_r_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 32);
    return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
           static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

}  // namespace mills
