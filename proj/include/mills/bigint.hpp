#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mills {

// All quantities in this project are non-negative integers or decimal
// fixed-point values built from them; GMP provides the raw limbs.
using BigInt = mpz_class;

// base^exp, exact. Binary powering; exp = 0 gives 1 for any base.
BigInt ipow(const BigInt& base, unsigned long exp);

struct IrootResult {
    BigInt root;  // floor(n^(1/k))
    bool exact;   // root^k == n
};

// Floor k-th root by integer Newton iteration. The iterate starts at a
// power of two >= the true root (from the bit length) and decreases
// monotonically; termination is the bracket test y >= x, never a residual
// tolerance, so the result satisfies root^k <= n < (root+1)^k exactly.
IrootResult iroot(const BigInt& n, unsigned k);

// Decimal-string round trip. from_dec rejects anything but [0-9]+.
std::string to_dec(const BigInt& n);
BigInt from_dec(const std::string& s);

// Number of decimal digits (1 for 0).
std::size_t dec_digits(const BigInt& n);

inline bool fits_u64(const BigInt& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_sgn(n.get_mpz_t()) >= 0;
}

// Low 64 bits of |n| (not a checked conversion).
std::uint64_t low_u64(const BigInt& n);

}  // namespace mills
