#pragma once

#include "qsnp/medium.hpp"

namespace qsnp {

// Medium + pulse with the derived quantities the closed forms share. The
// derived members come from the medium operations themselves, so the three
// SNR forms below stay algebraically consistent.
struct SNRInputs {
    MediumParams medium;
    PulseParams pulse;
    double observation_t = 0.0; // default L / v_g, the arrival of the pulse peak

    double v_g = 0.0;
    double excess = 0.0; // v_g/c - 1
    double beta = 0.0;
    double tau_R = 0.0;
    double gain_g = 0.0; // 2 beta (1/c - 1/v_g)

    SNRInputs(const MediumParams& medium, const PulseParams& pulse);
};

// Amplified dipole-fluctuation noise
//   (2 pi d omega0/c)^2 (N/S)(c/2 beta)[e^{g v_g t} - e^{-2 beta t}],
// evaluated through expm1 so the near-cancelling exponents survive when
// g v_g t and beta t are both tiny. Valid ramping form for t <= L/v_g.
double noise_intensity(const SNRInputs& in, double t);

// Output signal <F_s^dag F_s>(0, t - L/v_g) = q 2 pi hbar omega0 /
// (v_g S tau_p sqrt(pi)) e^{-(t-L/v_g)^2/tau_p^2}.
double signal_intensity(const SNRInputs& in, double t);

// Time-integrated energy flux of the incident pulse, q hbar omega0 / S.
double signal_flux(const SNRInputs& in);

struct SnrFlags {
    bool narrowband = false;       // |Delta| tau_p > 1
    bool small_gain = false;       // g L <= 0.1
    bool within_radiative = false; // t <= tau_RAD / 10
};

struct SnrResult {
    double form_qa3 = 0.0;  // signal over the (2 pi d omega0/c)^2 N L / S noise floor
    double form_qa4 = 0.0;  // (q/sqrt(pi))(tau_R/tau_p)(c/v_g) Gaussian
    double form_new1 = 0.0; // (q/sqrt(pi)) tau_p Gaussian / [(v_g/c-1)(L/c) Delta^2 tau_p^2]
    SnrFlags flags;
};

// All three closed forms; throws std::logic_error if they disagree beyond
// 1e-10 relative (inconsistent derived inputs).
SnrResult snr(const SNRInputs& in, double t);

// Value at t = L/v_g: (q/sqrt(pi))(tau_R/tau_p)(c/v_g).
double peak_snr(const SNRInputs& in);

// Variant with the time-dependent noise denominator instead of the value
// frozen at the pulse arrival; the frozen convention is the default used by
// snr().
double snr_time_dependent_noise(const SNRInputs& in, double t);

struct SnrBounds {
    double ars_bound = 0.0; // (q/sqrt(pi)) / (Delta tau_p)^2
    bool ars_bound_valid = false;
    double ars_bound_margin = 0.0; // (v_g/c-1)(L/c) / tau_p, threshold 10
    double frequency_independent_bound = 0.0; // q c tau_p / ((v_g - c) L/c)
    bool frequency_independent_valid = false; // |Delta| tau_p >= 1
};

SnrBounds snr_bounds(const SNRInputs& in);

struct VacuumNoise {
    double value = 0.0;               // (2 pi d omega0/c)^2 N L / S
    double lorentzian_over_pi = 0.0;  // quadrature of the gain line over pi, ~1
};

// Anti-normal-ordering route: the amplified vacuum contribution
// integrates the gain Lorentzian to pi and lands on the same noise floor
// as the qa3 denominator.
VacuumNoise vacuum_noise_crosscheck(const SNRInputs& in);

}  // namespace qsnp
