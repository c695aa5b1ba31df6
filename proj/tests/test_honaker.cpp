#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mills/honaker.hpp"
#include "mills/primality.hpp"

using namespace mills;

namespace {

std::vector<std::uint64_t> simple_primes(std::uint64_t limit) {
    std::vector<std::uint8_t> comp(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        primes.push_back(p);
        for (std::uint64_t c = p * p; c <= limit; c += p) comp[c] = 1;
    }
    return primes;
}

// Direct BigInt re-check of the defining property.
bool divides_qr_plus_1(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
    BigInt v = BigInt(static_cast<unsigned long>(q)) * r + 1;
    return mpz_divisible_ui_p(v.get_mpz_t(), p) != 0;
}

}  // namespace

TEST_SUITE_BEGIN("honaker");

TEST_CASE("the two small trios below 50") {
    auto trios = search(2, 50);
    REQUIRE(trios.size() == 2);
    CHECK(trios[0].p == 2);
    CHECK(trios[0].q == 3);
    CHECK(trios[0].r == 5);
    CHECK(trios[0].k == 0);  // odd gaps: half-gap form not applicable
    CHECK(trios[0].l == 0);
    CHECK(trios[1].p == 3);
    CHECK(trios[1].q == 5);
    CHECK(trios[1].r == 7);
    CHECK(trios[1].k == 1);
    CHECK(trios[1].l == 1);
}

TEST_CASE("the third trio") {
    auto trios = search(50, 14142);
    REQUIRE(trios.size() == 1);
    CHECK(trios[0].p == 61);
    CHECK(trios[0].q == 67);
    CHECK(trios[0].r == 71);
    CHECK(trios[0].k == 3);
    CHECK(trios[0].l == 2);
}

TEST_CASE("boundary semantics: lo inclusive, hi exclusive") {
    auto trios = search(61, 62);
    REQUIRE(trios.size() == 1);
    CHECK(trios[0].p == 61);
    CHECK(search(62, 71).empty());
    CHECK_THROWS_AS(search(1, 50), std::invalid_argument);
    CHECK_THROWS_AS(search(50, 50), std::invalid_argument);
}

TEST_CASE("exhaustive agreement with a brute-force scan below 10^5") {
    auto primes = simple_primes(101000);
    std::vector<HonakerTrio> expected;
    for (std::size_t i = 0; i + 2 < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (p >= 100000) break;
        if (divides_qr_plus_1(p, primes[i + 1], primes[i + 2])) {
            HonakerTrio t{p, primes[i + 1], primes[i + 2], 0, 0};
            if (p > 2) {
                t.k = (t.q - t.p) / 2;
                t.l = (t.r - t.q) / 2;
            }
            expected.push_back(t);
        }
    }
    auto got = search(2, 100000);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].p == expected[i].p);
        CHECK(got[i].q == expected[i].q);
        CHECK(got[i].r == expected[i].r);
        CHECK(got[i].k == expected[i].k);
        CHECK(got[i].l == expected[i].l);
    }
    CHECK(got.size() == 3);
}

TEST_CASE("equivalence p | (qr+1) <=> p | (4k^2+4kl+1) for odd consecutive primes") {
    auto primes = simple_primes(100000);
    for (std::size_t i = 1; i + 2 < primes.size(); ++i) {  // skip p = 2
        const std::uint64_t p = primes[i], q = primes[i + 1], r = primes[i + 2];
        const std::uint64_t k = (q - p) / 2, l = (r - q) / 2;
        BigInt w = 4 * BigInt(static_cast<unsigned long>(k)) * k +
                   4 * BigInt(static_cast<unsigned long>(k)) * l + 1;
        const bool via_kl = mpz_divisible_ui_p(w.get_mpz_t(), p) != 0;
        if (via_kl != divides_qr_plus_1(p, q, r)) {
            CAPTURE(p);
            REQUIRE(via_kl == divides_qr_plus_1(p, q, r));
        }
    }
}

TEST_CASE("divisibility witness") {
    auto trios = search(2, 100);
    // (3,5,7): k = l = 1 -> 4 + 4 + 1 = 9.
    CHECK(divisibility_witness(trios[1]) == 9);
    CHECK_THROWS_AS(divisibility_witness(trios[0]), std::invalid_argument);  // p = 2

    auto third = search(50, 100);
    REQUIRE(third.size() == 1);
    // (61,67,71): k=3, l=2 -> 36 + 24 + 1 = 61.
    CHECK(divisibility_witness(third[0]) == 61);

    HonakerTrio bogus{5, 7, 11, 1, 2};
    CHECK_THROWS_AS(divisibility_witness(bogus), std::logic_error);
}

TEST_CASE("trio gaps obey the lower bound that drives finiteness") {
    // For p > 50: max(2k, 2l) >= sqrt((p-1)/2).
    for (const HonakerTrio& t : search(2, 1000000)) {
        if (t.p <= 50) continue;
        const double bound = std::sqrt((static_cast<double>(t.p) - 1) / 2);
        CHECK(std::max(2 * t.k, 2 * t.l) >= bound);
    }
}

TEST_CASE("finiteness bound delegates to the gap threshold") {
    CHECK(finiteness_bound(0.92064) == cg_threshold(0.92064));
    CHECK(finiteness_bound(199262) == cg_threshold(199262));
}

TEST_CASE("parallel search equals sequential") {
    ScanOptions par;
    par.threads = 3;
    auto a = search(2, 10000000);
    auto b = search(2, 10000000, par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].p == b[i].p);
        CHECK(a[i].q == b[i].q);
        CHECK(a[i].r == b[i].r);
    }
}

TEST_CASE("generalized tuple rule reproduces the trio search") {
    auto tuples = search_tuples(2, 100000, TupleRule{});
    auto trios = search(2, 100000);
    REQUIRE(tuples.size() == trios.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        CHECK(tuples[i][0] == trios[i].p);
        CHECK(tuples[i][1] == trios[i].q);
        CHECK(tuples[i][2] == trios[i].r);
    }
}

TEST_CASE("generalized rules: minus sign and longer tuples") {
    // p | (qr - 1) below 1000, brute-forced.
    auto primes = simple_primes(1100);
    std::vector<std::uint64_t> expect;
    for (std::size_t i = 0; i + 2 < primes.size(); ++i) {
        if (primes[i] >= 1000) break;
        BigInt v = BigInt(static_cast<unsigned long>(primes[i + 1])) * primes[i + 2] - 1;
        if (mpz_divisible_ui_p(v.get_mpz_t(), primes[i])) expect.push_back(primes[i]);
    }
    auto got = search_tuples(2, 1000, TupleRule{3, -1, 1});
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i][0] == expect[i]);

    // Length-4 variant: p | (q*r*s + 1), brute-forced.
    std::vector<std::uint64_t> expect4;
    for (std::size_t i = 0; i + 3 < primes.size(); ++i) {
        if (primes[i] >= 1000) break;
        BigInt v = BigInt(static_cast<unsigned long>(primes[i + 1])) * primes[i + 2];
        v = v * primes[i + 3] + 1;
        if (mpz_divisible_ui_p(v.get_mpz_t(), primes[i])) expect4.push_back(primes[i]);
    }
    auto got4 = search_tuples(2, 1000, TupleRule{4, +1, 1});
    REQUIRE(got4.size() == expect4.size());
    for (std::size_t i = 0; i < got4.size(); ++i) CHECK(got4[i][0] == expect4[i]);
    CHECK_THROWS_AS(search_tuples(2, 100, TupleRule{1, +1, 1}), std::invalid_argument);
}

TEST_SUITE_END();
