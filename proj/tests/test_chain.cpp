#include <doctest.h>

#include <string>
#include <vector>

#include "mills/chain.hpp"

using namespace mills;

namespace {

const char* kB6 =
    "4113101149215104800030529537915953170486139623539759933135949994882770404074832568499";

MillsChain fresh(unsigned steps, unsigned threads = 1) {
    ExtendOptions opts;
    opts.threads = threads;
    return extend(MillsChain::start(opts), steps, opts);
}

}  // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("first terms and offsets from scratch") {
    MillsChain chain = fresh(4);
    CHECK(chain.offsets() == std::vector<std::uint64_t>{3, 30, 6, 80});
    CHECK(chain.term(0) == 2);
    CHECK(chain.term(1) == 11);
    CHECK(chain.term(2) == 1361);
    CHECK(chain.term(3) == BigInt("2521008887"));
    CHECK(chain.term(4) == BigInt("16022236204009818131831320183"));

    CHECK(chain.status(3)->status == PrimeStatus::ProvablePrime);
    CHECK(chain.status(4)->status == PrimeStatus::ProbablePrime);
    CHECK(digit_counts(chain) == std::vector<std::size_t>{1, 2, 4, 10, 29});
}

TEST_CASE("b_6 matches its published value") {
    MillsChain chain = fresh(5);
    CHECK(chain.offsets().back() == 12);
    CHECK(chain.term(5) == BigInt(kB6));
    CHECK(dec_digits(chain.term(5)) == 85);
}

TEST_CASE("every offset sits inside the cube-gap window") {
    MillsChain chain = fresh(5);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const BigInt& b = chain.term(i);
        BigInt width = 3 * b * b + 3 * b + 1;  // (b+1)^3 - b^3 for c = 3
        CHECK(BigInt(chain.offsets()[i]) < width);
        CHECK(chain.window_width(i) == width - 1);
    }
}

TEST_CASE("extension is deterministic, threads or not") {
    MillsChain a = fresh(5, 1);
    MillsChain b = fresh(5, 3);
    CHECK(a.offsets() == b.offsets());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.term(i) == b.term(i));
        CHECK(a.status(i)->status == b.status(i)->status);
        CHECK(a.status(i)->method == b.status(i)->method);
    }

    ExtendOptions other_seed;
    other_seed.rng_seed = 0xdeadbeef;
    MillsChain c = extend(MillsChain::start(other_seed), 5, other_seed);
    CHECK(a.offsets() == c.offsets());
}

TEST_CASE("verify passes on a freshly extended chain") {
    MillsChain chain = fresh(5);
    VerifyOptions opts;
    VerifyReport report = verify(chain, opts);
    CHECK(report.ok());
    CHECK(report.terms_checked == 6);
    CHECK(report.minimality_checked);
}

TEST_CASE("verify flags a composite term") {
    // 1363 = 29 * 47 sits where 1361 belongs.
    MillsChain chain = MillsChain::from_offsets(BigInt(2), 3, {3, 32});
    CHECK(chain.term(2) == 1363);
    VerifyReport report = verify(chain, VerifyOptions{});
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.kind == "term-not-prime" && v.index == 2) found = true;
    CHECK(found);
}

TEST_CASE("verify flags a non-minimal offset") {
    // 13 = 8 + 5 is prime, but 11 = 8 + 3 already qualifies.
    MillsChain chain = MillsChain::from_offsets(BigInt(2), 3, {5});
    CHECK(chain.term(1) == 13);
    VerifyReport report = verify(chain, VerifyOptions{});
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations)
        if (v.kind == "minimality" && v.index == 1) found = true;
    CHECK(found);
}

TEST_CASE("verify flags an offset outside the window") {
    // 3331 is prime but lies beyond (11+1)^3 = 1728.
    MillsChain chain = MillsChain::from_offsets(BigInt(2), 3, {3, 2000});
    CHECK(chain.term(2) == 3331);
    VerifyReport report = verify(chain, VerifyOptions{});
    REQUIRE_FALSE(report.ok());
    bool window = false, minimality = false;
    for (const auto& v : report.violations) {
        if (v.kind == "window") window = true;
        if (v.kind == "minimality") minimality = true;
    }
    CHECK(window);
    CHECK(minimality);  // 1361 also qualifies below 3331
}

TEST_CASE("verify respects the term-size cap") {
    MillsChain chain = fresh(5);
    VerifyOptions opts;
    opts.max_term_digits = 30;
    VerifyReport report = verify(chain, opts);
    CHECK(report.ok());
    CHECK(report.skipped == std::vector<std::size_t>{5});  // the 85-digit b_6
    CHECK(report.terms_checked == 5);
}

TEST_CASE("relaxed start: seed 257") {
    ExtendOptions opts;
    MillsChain chain = extend(MillsChain::start(BigInt(257), 3, opts), 3, opts);
    CHECK(chain.size() == 4);
    // 257^3 = 16974593; the chain continues from the least prime above it.
    CHECK(chain.term(1) > BigInt("16974593"));
    VerifyReport report = verify(chain, VerifyOptions{});
    CHECK(report.ok());
}

TEST_CASE("constructor validation") {
    ExtendOptions opts;
    CHECK_THROWS_AS(MillsChain::start(BigInt(4), 3, opts), std::invalid_argument);
    CHECK_THROWS_AS(MillsChain::start(BigInt(2), 2, opts), std::invalid_argument);
    CHECK_THROWS_AS(MillsChain::from_offsets(BigInt(2), 3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(MillsChain::from_offsets(BigInt(1), 3, {3}), std::invalid_argument);
}

TEST_SUITE_END();
