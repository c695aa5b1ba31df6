#include "mills/li.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mills/sieve.hpp"

namespace mills {

namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431042L;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

double li(double x, double abs_err) {
    if (!(x > 1.0)) throw std::domain_error("li: defined here for x > 1 only");
    if (abs_err <= 0) abs_err = 1e-9;

    const long double y = std::log(static_cast<long double>(x));
    long double sum = kEulerGamma + std::log(y);
    long double term = 1.0L;  // y^k / k!
    for (int k = 1; k <= 20000; ++k) {
        term *= y / k;
        const long double contrib = term / k;
        sum += contrib;
        // All terms are positive; once the term ratio r = y/(k+1) drops
        // below 1 the tail is under contrib * r / (1 - r).
        const long double r = y / (k + 1);
        if (r < 0.75L && contrib * r / (1.0L - r) < abs_err / 2) break;
    }
    return static_cast<double>(sum);
}

double analytic_bound(double x) {
    if (!(x > 1.0)) throw std::domain_error("analytic_bound: requires x > 1");
    const double main = (3.0 * x * x + 3.0 * x + 1.0) / (3.0 * std::log(x));
    const double err = 3.0 / (4.0 * kPi) * std::pow(x + 1.0, 1.5) * std::log(x + 1.0);
    return main - err;
}

std::vector<SchoenfeldRow> schoenfeld_check(const std::vector<std::uint64_t>& xs,
                                            const SchoenfeldOptions& opts) {
    std::vector<SchoenfeldRow> rows;
    rows.reserve(xs.size());
    for (std::uint64_t x : xs) {
        SchoenfeldRow row;
        row.x = x;
        row.precondition_ok = x >= 2657;
        rows.push_back(row);
    }

    // One ascending sieve pass fills every valid pi(x).
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows[a].x < rows[b].x; });

    std::uint64_t max_x = 0;
    for (const SchoenfeldRow& r : rows)
        if (r.precondition_ok) max_x = std::max(max_x, r.x);

    if (max_x > 0) {
        SegmentedSieve sieve(opts.segment_size);
        std::uint64_t count = 0;
        std::size_t next = 0;
        while (next < order.size() && !rows[order[next]].precondition_ok) ++next;
        sieve.for_each_prime(2, max_x + 1, [&](std::uint64_t p) {
            while (next < order.size() && rows[order[next]].x < p) {
                rows[order[next]].pi_x = count;
                ++next;
            }
            ++count;
        });
        while (next < order.size()) {
            rows[order[next]].pi_x = count;
            ++next;
        }
    }

    for (SchoenfeldRow& row : rows) {
        if (!row.precondition_ok) continue;
        const double xd = static_cast<double>(row.x);
        row.li_x = li(xd, 1e-6);
        row.bound = std::sqrt(xd) * std::log(xd) / (8.0 * kPi);
        const double delta = std::abs(static_cast<double>(row.pi_x) - row.li_x);
        row.slack = row.bound - delta;
        row.pass = delta < row.bound;
    }
    return rows;
}

}  // namespace mills
