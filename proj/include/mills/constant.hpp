#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mills/chain.hpp"
#include "mills/fixed_point.hpp"

namespace mills {

// Enclosure of the constant from depth-n bracketing: n directed cube roots
// of b_n (Down) and of b_n + 1 (Up). Every digit shared by lower and upper
// is a proven digit of the constant, assuming the chain terms are prime.
struct ConstantBracket {
    FixedPoint lower;
    FixedPoint upper;
    std::uint32_t scale = 0;
    std::size_t guaranteed_digits = 0;  // common decimal prefix, point not counted
};

class PrecisionTooLow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requires c = 3 and 1 <= depth <= chain length. Throws PrecisionTooLow when
// the bracket pins no digit at all at the given working scale.
ConstantBracket bracket(const MillsChain& chain, std::size_t depth, std::uint32_t scale);

struct DigitsResult {
    std::string digits;       // e.g. "1.3063778", point after the leading digit
    std::size_t guaranteed = 0;
    std::size_t depth = 0;
    std::uint32_t scale = 0;  // working scale the bracket ran at
    bool short_of_request = false;
};

// Picks the smallest depth whose bracket should cover the request (the
// guarantee grows like the digit count of b_n) and works at
// requested + 10*depth guard digits. A chain too short to deliver returns
// its best guaranteed prefix with short_of_request set.
DigitsResult constant_digits(const MillsChain& chain, std::size_t requested);

// Count of decimal digits in a digit string ('.' not counted).
std::size_t digit_length(const std::string& digits);

// First n digits of a digit string, keeping the decimal point.
std::string digit_prefix(const std::string& digits, std::size_t n);

// The 601-digit reference value (leading 1 plus 600 fractional digits).
const std::string& reference_digits();

// Pretty printer: rows of five 10-digit groups, the first group carrying the
// integer digit ("1.3063778838  6308069046 ...").
std::string format_grouped(const std::string& digits);

}  // namespace mills
