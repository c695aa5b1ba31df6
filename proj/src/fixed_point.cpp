#include "mills/fixed_point.hpp"

#include <stdexcept>
#include <utility>

namespace mills {

FixedPoint::FixedPoint(BigInt mantissa, std::uint32_t scale)
    : mantissa_(std::move(mantissa)), scale_(scale) {
    if (mpz_sgn(mantissa_.get_mpz_t()) < 0)
        throw std::domain_error("FixedPoint: negative mantissa");
}

FixedPoint FixedPoint::rescaled(std::uint32_t new_scale, Rounding dir) const {
    if (new_scale == scale_) return *this;
    if (new_scale > scale_)
        return FixedPoint(mantissa_ * ipow(BigInt(10), new_scale - scale_), new_scale);
    BigInt q, r;
    BigInt d = ipow(BigInt(10), scale_ - new_scale);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mantissa_.get_mpz_t(), d.get_mpz_t());
    if (dir == Rounding::Up && r != 0) q += 1;
    return FixedPoint(std::move(q), new_scale);
}

std::string FixedPoint::to_string() const {
    std::string digits = to_dec(mantissa_);
    if (scale_ == 0) return digits;
    if (digits.size() <= scale_) digits.insert(0, scale_ + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale_, 1, '.');
    return digits;
}

std::strong_ordering operator<=>(const FixedPoint& a, const FixedPoint& b) {
    const BigInt* am = &a.mantissa_;
    const BigInt* bm = &b.mantissa_;
    BigInt at, bt;
    if (a.scale_ < b.scale_) {
        at = a.mantissa_ * ipow(BigInt(10), b.scale_ - a.scale_);
        am = &at;
    } else if (b.scale_ < a.scale_) {
        bt = b.mantissa_ * ipow(BigInt(10), a.scale_ - b.scale_);
        bm = &bt;
    }
    int c = mpz_cmp(am->get_mpz_t(), bm->get_mpz_t());
    return c < 0    ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

FixedPoint cbrt_directed(const FixedPoint& x, std::uint32_t target_scale, Rounding dir) {
    if (x.is_zero()) return FixedPoint(BigInt(0), target_scale);

    // Want round(cbrt(m / 10^s) * 10^t) = round(cbrt(m * 10^(3t - s))).
    // Floor commutes with the integer cube root (floor(cbrt(y)) =
    // floor(cbrt(floor(y))) because (r+1)^3 is an integer), so a floor
    // division when 3t < s loses nothing for Down, and exactness for Up is
    // the root being exact with zero division remainder.
    const std::int64_t shift = 3 * static_cast<std::int64_t>(target_scale) -
                               static_cast<std::int64_t>(x.scale());
    BigInt q;
    bool rem_zero = true;
    if (shift >= 0) {
        q = x.mantissa() * ipow(BigInt(10), static_cast<unsigned long>(shift));
    } else {
        BigInt r;
        BigInt d = ipow(BigInt(10), static_cast<unsigned long>(-shift));
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.mantissa().get_mpz_t(), d.get_mpz_t());
        rem_zero = (r == 0);
    }
    auto [root, exact] = iroot(q, 3);
    if (dir == Rounding::Up && !(exact && rem_zero)) root += 1;
    return FixedPoint(std::move(root), target_scale);
}

}  // namespace mills
