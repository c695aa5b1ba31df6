#include "mills/xc_inequality.hpp"

#include <cmath>

#include <mpfr.h>

namespace mills {

namespace {

struct Real {
    mpfr_t v;
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    ~Real() { mpfr_clear(v); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
};

// 1 + x^c + x^(c-1), rounded in the direction rnd end to end.
void eval_lhs(mpfr_t out, const mpfr_t x, const mpfr_t c, mpfr_rnd_t rnd, mpfr_prec_t prec) {
    Real xc(prec), cm1(prec), xcm1(prec);
    mpfr_pow(xc.v, x, c, rnd);
    mpfr_sub_ui(cm1.v, c, 1, MPFR_RNDN);  // exact: c is a double scaled into prec >= 64
    mpfr_pow(xcm1.v, x, cm1.v, rnd);
    mpfr_add(out, xc.v, xcm1.v, rnd);
    mpfr_add_ui(out, out, 1, rnd);
}

// (1+x)^c rounded in direction rnd; 1+x is exact, pow is monotone in the base.
void eval_rhs(mpfr_t out, const mpfr_t x, const mpfr_t c, mpfr_rnd_t rnd, mpfr_prec_t prec) {
    Real base(prec);
    mpfr_add_ui(base.v, x, 1, rnd);
    mpfr_pow(out, base.v, c, rnd);
}

}  // namespace

XcEvaluation xc_inequality_holds(double x, double c) {
    if (!(x > 1.0) || !std::isfinite(x))
        throw std::domain_error("xc_inequality_holds: requires x > 1");
    if (!(c > 2.0) || !std::isfinite(c))
        throw std::domain_error("xc_inequality_holds: requires c > 2");

    for (mpfr_prec_t prec = 96; prec <= 24576; prec *= 2) {
        Real xm(prec), cm(prec);
        mpfr_set_d(xm.v, x, MPFR_RNDN);  // doubles embed exactly
        mpfr_set_d(cm.v, c, MPFR_RNDN);

        Real lhs_up(prec), rhs_dn(prec);
        eval_lhs(lhs_up.v, xm.v, cm.v, MPFR_RNDU, prec);
        eval_rhs(rhs_dn.v, xm.v, cm.v, MPFR_RNDD, prec);

        XcEvaluation out;
        out.precision_bits = static_cast<int>(prec);
        if (mpfr_cmp(lhs_up.v, rhs_dn.v) < 0) {
            out.holds = true;
            out.lhs = mpfr_get_d(lhs_up.v, MPFR_RNDN);
            out.rhs = mpfr_get_d(rhs_dn.v, MPFR_RNDN);
            return out;
        }

        Real lhs_dn(prec), rhs_up(prec);
        eval_lhs(lhs_dn.v, xm.v, cm.v, MPFR_RNDD, prec);
        eval_rhs(rhs_up.v, xm.v, cm.v, MPFR_RNDU, prec);
        if (mpfr_cmp(lhs_dn.v, rhs_up.v) > 0) {
            out.holds = false;
            out.lhs = mpfr_get_d(lhs_dn.v, MPFR_RNDN);
            out.rhs = mpfr_get_d(rhs_up.v, MPFR_RNDN);
            return out;
        }
        // Enclosures still overlap: escalate.
    }
    throw PrecisionExhausted("xc_inequality_holds: sides not separable at max precision");
}

}  // namespace mills
