#pragma once

#include <stdexcept>

namespace mills {

struct XcEvaluation {
    bool holds = false;
    double lhs = 0;  // 1 + x^c + x^(c-1)
    double rhs = 0;  // (1+x)^c
    int precision_bits = 0;  // precision that separated the sides
};

class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decides 1 + x^c + x^(c-1) < (1+x)^c for x > 1, c > 2 by evaluating both
// sides with directed rounding at escalating precision until the sign of the
// difference is certain. A false return would be a counterexample to a
// proven inequality, i.e. an evaluation bug. Throws std::domain_error
// outside the domain and PrecisionExhausted if the sides cannot be
// separated at the highest configured precision.
XcEvaluation xc_inequality_holds(double x, double c);

}  // namespace mills
