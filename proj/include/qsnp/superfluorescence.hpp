#pragma once

#include "qsnp/medium.hpp"

namespace qsnp {

// Derived quantities for the SF noise-field estimates. Construction verifies
// the two plasma-frequency routes (direct and via tau_R) against each other.
struct SFContext {
    MediumParams medium;
    double omega_p = 0.0;
    Timescales times;

    explicit SFContext(const MediumParams& medium);
};

// <F^dag F>(L, t): (2 pi d omega0 / c)^2 (N/S) Int_0^L dx theta(t - x/c)
// I0^2(omega_p sqrt((x/c)(t - x/c))), by adaptive quadrature at the given
// relative tolerance. Throws std::runtime_error if the quadrature does not
// converge, std::overflow_error if the integrand exceeds double range.
double sf_intensity(const SFContext& ctx, double t, double rel_tol = 1e-8);

// Short-time model, (2 pi d omega0 / c)^2 (N/S) c t.
double sf_intensity_short_time(const SFContext& ctx, double t);

// Large-t saddle estimate (1/8pi)(2 pi hbar omega0 / S c t) e^{4 sqrt(t/tau_R)}.
double sf_intensity_asymptotic(const SFContext& ctx, double t);

struct SFDelay {
    double closed_form = 0.0; // tau_R [ln(2 pi N_T)/4]^2
    double root_solve = 0.0;  // from matching the asymptotic intensity to the SF peak
};

// Two routes to the SF delay time. Throws std::runtime_error on bracketing
// failure of the root solve.
SFDelay sf_delay(const SFContext& ctx);

}  // namespace qsnp
