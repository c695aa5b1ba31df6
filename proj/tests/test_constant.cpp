#include <doctest.h>

#include <string>
#include <vector>

#include "mills/constant.hpp"

using namespace mills;

namespace {

// The canonical offsets; building from them skips the (already tested)
// search machinery.
MillsChain known_chain(std::size_t depth) {
    static const std::vector<std::uint64_t> offsets{3, 30, 6, 80, 12, 450, 894, 3636};
    REQUIRE(depth >= 1);
    REQUIRE(depth <= offsets.size() + 1);
    return MillsChain::from_offsets(
        BigInt(2), 3,
        std::vector<std::uint64_t>(offsets.begin(), offsets.begin() + (depth - 1)));
}

}  // namespace

TEST_SUITE_BEGIN("constant");

TEST_CASE("depth-1 bracket is the cube root pair of 2 and 3") {
    ConstantBracket br = bracket(known_chain(1), 1, 10);
    CHECK(br.lower.to_string() == "1.2599210498");
    CHECK(br.upper.to_string() == "1.4422495704");
    CHECK(br.guaranteed_digits == 1);  // only the leading "1" agrees
}

TEST_CASE("depth-4 bracket pins the first digits") {
    ConstantBracket br = bracket(known_chain(4), 4, 20);
    CHECK(br.guaranteed_digits >= 8);
    const std::string prefix = digit_prefix(br.lower.to_string(), 10);
    CHECK(prefix == "1.306377883");
    // Consistent with the stored reference digits.
    CHECK(digit_prefix(reference_digits(), br.guaranteed_digits) ==
          digit_prefix(br.lower.to_string(), br.guaranteed_digits));
}

TEST_CASE("brackets narrow monotonically with depth") {
    MillsChain chain = known_chain(6);
    const std::uint32_t scale = 40;
    ConstantBracket prev = bracket(chain, 1, scale);
    for (std::size_t depth = 2; depth <= 6; ++depth) {
        ConstantBracket cur = bracket(chain, depth, scale);
        // Within one ulp of directed rounding per step the enclosures nest.
        FixedPoint slack(BigInt(static_cast<unsigned long>(depth + 1)), scale);
        CHECK(cur.lower.mantissa() + slack.mantissa() >= prev.lower.mantissa());
        CHECK(cur.upper.mantissa() <= prev.upper.mantissa() + slack.mantissa());
        CHECK(cur.guaranteed_digits > prev.guaranteed_digits);
        prev = cur;
    }
}

TEST_CASE("higher working scale never shrinks the guaranteed prefix") {
    MillsChain chain = known_chain(5);
    ConstantBracket coarse = bracket(chain, 5, 30);
    ConstantBracket fine = bracket(chain, 5, 80);
    CHECK(fine.guaranteed_digits >= coarse.guaranteed_digits);
    CHECK(digit_prefix(fine.lower.to_string(), coarse.guaranteed_digits) ==
          digit_prefix(coarse.lower.to_string(), coarse.guaranteed_digits));
}

TEST_CASE("guaranteed digits stay stable under any scale and depth increase") {
    MillsChain chain = known_chain(7);
    ConstantBracket base = bracket(chain, 4, 25);
    const std::string frozen = digit_prefix(base.lower.to_string(), base.guaranteed_digits);
    for (std::uint32_t scale : {40u, 65u}) {
        for (std::size_t depth : {5u, 6u, 7u}) {
            ConstantBracket deeper = bracket(chain, depth, scale);
            CHECK(digit_prefix(deeper.lower.to_string(), base.guaranteed_digits) == frozen);
        }
    }
}

TEST_CASE("bracket rejects bad arguments") {
    MillsChain chain = known_chain(3);
    CHECK_THROWS_AS(bracket(chain, 0, 20), std::invalid_argument);
    CHECK_THROWS_AS(bracket(chain, 4, 20), std::invalid_argument);
    // Scale 0 pins nothing: lower 1, upper 2.
    CHECK_THROWS_AS(bracket(known_chain(1), 1, 0), PrecisionTooLow);
}

TEST_CASE("digits: shallow requests") {
    DigitsResult r = constant_digits(known_chain(4), 8);
    CHECK(r.digits == "1.3063778");
    CHECK(r.guaranteed >= 8);
    CHECK_FALSE(r.short_of_request);

    r = constant_digits(known_chain(1), 10);
    CHECK(r.guaranteed == 1);
    CHECK(r.short_of_request);
    CHECK(r.digits == "1");
    CHECK(r.depth == 1);
}

TEST_CASE("digits: depth selection tracks term size") {
    DigitsResult r = constant_digits(known_chain(8), 8);
    CHECK(r.depth == 4);  // b_4 (10 digits) is the first term with headroom
    r = constant_digits(known_chain(8), 60);
    CHECK(r.depth == 6);  // b_5 has 29 digits, not enough; b_6 has 85
    CHECK(r.guaranteed >= 60);
}

TEST_CASE("digits: 600-digit request against the reference table") {
    MillsChain chain = known_chain(9);  // through the 2285-digit b_9
    DigitsResult r = constant_digits(chain, 600);
    CHECK(r.depth == 8);
    CHECK(r.guaranteed >= 600);
    CHECK(r.scale == 680);
    CHECK_FALSE(r.short_of_request);
    CHECK(r.digits == digit_prefix(reference_digits(), 600));

    // The full 601-digit table, leading 1 included.
    DigitsResult full = constant_digits(chain, 601);
    CHECK(full.digits == reference_digits());

    // Direct depth-8 bracket at a 700-digit working scale covers the table.
    ConstantBracket br = bracket(chain, 8, 700);
    CHECK(br.guaranteed_digits >= 600);
    CHECK(digit_prefix(br.lower.to_string(), 601) == reference_digits());
}

TEST_CASE("relaxed start: seed 257 gives the documented constant") {
    ExtendOptions opts;
    MillsChain chain = extend(MillsChain::start(BigInt(257), 3, opts), 3, opts);
    DigitsResult r = constant_digits(chain, 13);
    CHECK(r.digits == "6.357861928837");
    CHECK(r.guaranteed >= 13);
}

TEST_CASE("reference digits shape") {
    const std::string& ref = reference_digits();
    CHECK(digit_length(ref) == 601);
    CHECK(ref.substr(0, 12) == "1.3063778838");
    CHECK(ref.substr(ref.size() - 10) == "3473107746");
}

TEST_CASE("digit string helpers") {
    CHECK(digit_prefix("1.30637", 3) == "1.30");
    CHECK(digit_prefix("1.30637", 1) == "1");
    CHECK(digit_prefix("1.30637", 99) == "1.30637");
    CHECK(digit_length("1.30637") == 6);

    const std::string grouped = format_grouped(digit_prefix(reference_digits(), 601));
    // 12 rows, the first starting with the integer digit.
    std::size_t rows = 0;
    for (char ch : grouped)
        if (ch == '\n') ++rows;
    CHECK(rows == 12);
    CHECK(grouped.substr(0, 12) == "1.3063778838");
}

TEST_SUITE_END();
