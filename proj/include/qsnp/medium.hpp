#pragma once

#include <complex>

namespace qsnp {

// Two-level transition. The dipole moment d is the canonical strength
// parameter; the oscillator strength f is kept in sync through
// f = 2 m_e omega0 d^2 / (hbar e^2) so either parameterization can be used
// on input. beta is the dipole damping rate; beta == 0 on input means
// "derive the radiative value from the sample geometry" (done when the
// transition is bound into a MediumParams).
struct TransitionSpec {
    double omega0 = 0.0;                // resonance angular frequency, rad/s
    double dipole_d = 0.0;              // statC cm
    double oscillator_strength_f = 0.0; // dimensionless
    double beta = 0.0;                  // rad/s

    static TransitionSpec from_dipole(double omega0, double dipole_d, double beta = 0.0);
    static TransitionSpec from_oscillator_strength(double omega0, double f, double beta = 0.0);
};

// Inverted (or absorbing) two-level gas filling a pencil of length L and
// cross section S. Construction derives N_T = N S L and the radiative
// damping rate; a caller-supplied beta must match the radiative rate
// pi d^2 omega0 / (S hbar c) to 1e-12 relative, since no other broadening
// mechanism is modeled.
struct MediumParams {
    TransitionSpec transition;
    double density_N = 0.0;   // atoms / cm^3
    double inversion_w = 0.0; // in [-1, 1]
    double length_L = 0.0;    // cm
    double area_S = 0.0;      // cm^2
    double atom_count_NT = 0.0;

    MediumParams() = default;
    MediumParams(TransitionSpec transition, double density_N, double inversion_w,
                 double length_L, double area_S);

    // omega_p^2 = 8 pi N d^2 omega0 / hbar
    double plasma_frequency_sq() const;
    // Same quantity through (4 / tau_R)(c / L); agrees with the direct form
    // to rounding, exposed for the identity checks.
    double plasma_frequency_sq_from_timescales() const;
};

// Incident Gaussian signal pulse. carrier_omega is always omega0 - Delta.
struct PulseParams {
    double photon_number_q = 0.0; // may be fractional
    double duration_tau_p = 0.0;  // s
    double detuning_Delta = 0.0;  // rad/s, Delta = omega0 - omega
    double carrier_omega = 0.0;   // rad/s
    bool narrowband = false;      // |Delta| tau_p > 1

    PulseParams() = default;
    PulseParams(double q, double tau_p, double delta, double omega0);
};

struct Timescales {
    double tau_RAD = 0.0;        // single-atom radiative lifetime
    double tau_R = 0.0;          // collective rate, tau_RAD / N_T
    double tau_D = 0.0;          // SF delay, tau_R [ln(2 pi N_T)/4]^2
    double transit_L_over_c = 0.0;
};

enum class IndexMode {
    MultilevelSum, // 1 - (w omega_p^2 / 2) / (omega0^2 - omega^2)
    TwoLevelReal,  // 1 - (w omega_p^2 / 4 omega0) Delta / (Delta^2 + beta^2)
    FarDetuned,    // 1 - (w omega_p^2 / 4 omega0) / Delta
};

// Real refractive index in the requested approximation. regime_ok, when
// given, reports whether the far-detuned premise omega_p^2/(4 omega0) << |Delta|
// holds at ratio >= 10.
double refractive_index(const MediumParams& medium, double omega, IndexMode mode,
                        bool* regime_ok = nullptr);

// Complex index including the damping pole, 1 - (w omega_p^2/4 omega0)/(Delta - i beta).
std::complex<double> refractive_index_damped(const MediumParams& medium, double omega);

struct GroupVelocity {
    double v_g = 0.0;    // cm/s
    double excess = 0.0; // v_g/c - 1, computed without cancellation
};

// v_g = c / (1 - w omega_p^2 / (4 Delta^2)). Throws std::domain_error at the
// pole w omega_p^2 = 4 Delta^2 and at Delta = 0.
GroupVelocity group_velocity(const MediumParams& medium, double detuning_delta);

struct CkkRoots {
    std::complex<double> lower; // sorted by real part, then imaginary part
    std::complex<double> upper;
    bool conjugate_pair = false;
};

// Both roots of Omega^2 - K c Omega + w omega_p^2 / 4 = 0.
CkkRoots ckk_dispersion(const MediumParams& medium, double K);

struct GainCoefficient {
    double lorentzian = 0.0;          // (omega_p^2 / 2c) beta / (Delta^2 + beta^2)
    double far_detuned = 0.0;         // (omega_p^2 / 2c) beta / Delta^2
    double from_group_velocity = 0.0; // 2 beta (1/c - 1/v_g)
};

// Gain per unit length for a fully inverted medium (w = 1 assumed).
// far_detuned and from_group_velocity are two routes to the same quantity
// and agree to rounding; lorentzian keeps the beta^2 in the line shape.
GainCoefficient gain_coefficient(const MediumParams& medium, double detuning_delta);

// tau_RAD = S hbar c / (2 pi d^2 omega0), tau_R = tau_RAD / N_T,
// tau_D = tau_R [ln(2 pi N_T)/4]^2. Throws if N_T <= 1/(2 pi).
Timescales timescales(const MediumParams& medium);

struct ConditionMargin {
    bool satisfied = false;
    double margin = 0.0; // achieved ratio; the threshold is 10 for every ">>"
};

struct RegimeReport {
    ConditionMargin ars1;      // v_g T / c >= 10 tau_p
    ConditionMargin ars2;      // (v_g/c - 1) T >= 10 tau_p
    ConditionMargin hierarchy; // tau_RAD >= 10 T and T >= 10 tau_p
    ConditionMargin sf_safety; // max(tau_p, L/c) < tau_R < tau_D
    ConditionMargin ckk;       // tau_p <= tau_R
};

RegimeReport regime_report(const MediumParams& medium, const PulseParams& pulse,
                           double observation_T);

}  // namespace qsnp
