#pragma once

#include <cstdint>
#include <vector>

namespace mills {

// Principal-value logarithmic integral, via the series
//   li(x) = gamma + ln(ln x) + sum_{k>=1} (ln x)^k / (k * k!)
// evaluated in extended precision with an explicit geometric tail bound.
// Throws std::domain_error for x <= 1.
double li(double x, double abs_err = 1e-9);

// (3x^2 + 3x + 1) / (3 ln x) - (3/(4 pi)) (x+1)^(3/2) ln(x+1).
// Lower bound for the prime count between consecutive cubes; increasing and
// > 1 from roughly 2657^(1/3) on. Throws std::domain_error for x <= 1.
double analytic_bound(double x);

struct SchoenfeldRow {
    std::uint64_t x = 0;
    std::uint64_t pi_x = 0;
    double li_x = 0;
    double bound = 0;   // sqrt(x) ln(x) / (8 pi)
    double slack = 0;   // bound - |pi - li|
    bool precondition_ok = false;  // x >= 2657
    bool pass = false;
};

struct SchoenfeldOptions {
    std::uint64_t segment_size = 1u << 20;
};

// Two-sided check of |pi(x) - li(x)| < sqrt(x) ln(x) / (8 pi) per input.
// Inputs below 2657 are reported as precondition violations, not evaluated.
// One sieve pass covers all inputs.
std::vector<SchoenfeldRow> schoenfeld_check(const std::vector<std::uint64_t>& xs,
                                            const SchoenfeldOptions& opts = {});

}  // namespace mills
