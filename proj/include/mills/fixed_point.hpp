#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "mills/bigint.hpp"

namespace mills {

enum class Rounding { Down, Up };

// Non-negative decimal fixed point: value = mantissa / 10^scale. No binary
// rounding anywhere; equal-scale comparison is mantissa comparison and the
// guaranteed-digit computation downstream is a string prefix match.
class FixedPoint {
public:
    FixedPoint() = default;
    FixedPoint(BigInt mantissa, std::uint32_t scale);
    static FixedPoint from_integer(BigInt v) { return FixedPoint(std::move(v), 0); }

    const BigInt& mantissa() const { return mantissa_; }
    std::uint32_t scale() const { return scale_; }
    bool is_zero() const { return mantissa_ == 0; }

    // Exact when new_scale >= scale; otherwise rounds in the given direction.
    FixedPoint rescaled(std::uint32_t new_scale, Rounding dir) const;

    // "1.25992" style; scale 0 prints no point. Zero-padded to full scale.
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const FixedPoint& a, const FixedPoint& b);
    friend bool operator==(const FixedPoint& a, const FixedPoint& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    BigInt mantissa_ = 0;
    std::uint32_t scale_ = 0;
};

// Cube root of x at scale target_scale, floor (Down) or ceiling (Up) on the
// 10^-target_scale grid:
//   Down: r <= x^(1/3) < r + ulp
//   Up:   r - ulp < x^(1/3) <= r
// Realized as an integer cube root of the rescaled mantissa plus a one-ulp
// correction when the root is not exact on the grid, so every bound is an
// exact integer fact. x = 0 returns exact 0 for both directions.
FixedPoint cbrt_directed(const FixedPoint& x, std::uint32_t target_scale, Rounding dir);

}  // namespace mills
