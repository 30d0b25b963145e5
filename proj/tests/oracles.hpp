#pragma once

// Test-side reference implementations, kept independent of the library code
// paths they validate.

#include <mpfr.h>

#include <stdexcept>

namespace qsnp_test {

// I0(y) summed term by term at 256-bit precision (~77 decimal digits),
// t_{k+1} = t_k (y/2)^2 / (k+1)^2, until the term drops below 1e-60 of the
// running sum. Rounded to double on return.
inline double bessel_i0_reference(double y)
{
    if (y < 0.0) y = -y;
    mpfr_t sum, term, q, tmp, ratio;
    mpfr_inits2(256, sum, term, q, tmp, ratio, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(q, y, MPFR_RNDN);
    mpfr_mul(q, q, q, MPFR_RNDN);
    mpfr_div_ui(q, q, 4, MPFR_RNDN); // (y/2)^2
    mpfr_set_ui(sum, 1, MPFR_RNDN);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    bool converged = false;
    for (unsigned long k = 1; k <= 5000; ++k) {
        mpfr_mul(term, term, q, MPFR_RNDN);
        mpfr_div_ui(term, term, k, MPFR_RNDN);
        mpfr_div_ui(term, term, k, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
        mpfr_div(ratio, term, sum, MPFR_RNDN);
        mpfr_abs(ratio, ratio, MPFR_RNDN);
        if (mpfr_cmp_d(ratio, 1e-60) < 0) {
            converged = true;
            break;
        }
    }
    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, q, tmp, ratio, static_cast<mpfr_ptr>(nullptr));
    if (!converged) throw std::runtime_error("bessel_i0_reference: series did not converge");
    return out;
}

}  // namespace qsnp_test
