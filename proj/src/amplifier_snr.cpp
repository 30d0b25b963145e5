#include "qsnp/amplifier_snr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsnp/constants.hpp"
#include "qsnp/quadrature.hpp"

namespace qsnp {

using namespace constants;

namespace {

double noise_floor(const MediumParams& m)
{
    // (2 pi d omega0 / c)^2 N L / S, the qa3 denominator.
    const double a = 2.0 * pi * m.transition.dipole_d * m.transition.omega0 / c_light;
    return a * a * m.density_N * m.length_L / m.area_S;
}

}  // namespace

SNRInputs::SNRInputs(const MediumParams& m, const PulseParams& p) : medium(m), pulse(p)
{
    const GroupVelocity gv = group_velocity(medium, pulse.detuning_Delta);
    v_g = gv.v_g;
    excess = gv.excess;
    beta = medium.transition.beta;
    tau_R = timescales(medium).tau_R;
    gain_g = gain_coefficient(medium, pulse.detuning_Delta).from_group_velocity;
    observation_t = medium.length_L / v_g;
}

double noise_intensity(const SNRInputs& in, double t)
{
    if (t < 0.0) throw std::invalid_argument("noise_intensity: t must be >= 0");
    const MediumParams& m = in.medium;
    const double a = 2.0 * pi * m.transition.dipole_d * m.transition.omega0 / c_light;
    const double pref = a * a * m.density_N / m.area_S;
    if (in.beta == 0.0) return pref * in.v_g * t; // beta -> 0 limit of the bracket
    // (c/2b)[e^{g v_g t} - e^{-2bt}] = (c/2b) e^{-2bt} expm1((g v_g + 2b) t);
    // with g = 2b(1/c - 1/v_g) the combined exponent is 2b v_g t / c exactly.
    const double combined = 2.0 * in.beta * in.v_g / c_light * t;
    return pref * (0.5 * c_light / in.beta) * std::exp(-2.0 * in.beta * t) * std::expm1(combined);
}

double signal_intensity(const SNRInputs& in, double t)
{
    const double q = in.pulse.photon_number_q;
    const double tau_p = in.pulse.duration_tau_p;
    const double omega0 = in.medium.transition.omega0;
    const double u = (t - in.medium.length_L / in.v_g) / tau_p;
    return q * 2.0 * pi * hbar * omega0 / (in.v_g * in.medium.area_S * tau_p * sqrt_pi) *
           std::exp(-u * u);
}

double signal_flux(const SNRInputs& in)
{
    return in.pulse.photon_number_q * hbar * in.medium.transition.omega0 / in.medium.area_S;
}

SnrResult snr(const SNRInputs& in, double t)
{
    const double q = in.pulse.photon_number_q;
    const double tau_p = in.pulse.duration_tau_p;
    const double delta = in.pulse.detuning_Delta;
    const double L = in.medium.length_L;
    const double u = (t - L / in.v_g) / tau_p;
    const double gauss = std::exp(-u * u);

    SnrResult r;
    r.form_qa3 = signal_intensity(in, t) / noise_floor(in.medium);
    r.form_qa4 = q / sqrt_pi * (in.tau_R / tau_p) * (c_light / in.v_g) * gauss;
    r.form_new1 =
        q / sqrt_pi * tau_p / (in.excess * (L / c_light) * delta * delta * tau_p * tau_p) * gauss;

    const double big = std::max({std::abs(r.form_qa3), std::abs(r.form_qa4), std::abs(r.form_new1)});
    const double spread = std::max({std::abs(r.form_qa3 - r.form_qa4),
                                    std::abs(r.form_qa4 - r.form_new1),
                                    std::abs(r.form_qa3 - r.form_new1)});
    if (big > 0.0 && spread > 1e-10 * big)
        throw std::logic_error("snr: closed forms disagree; derived inputs are inconsistent");

    r.flags.narrowband = in.pulse.narrowband;
    r.flags.small_gain = in.gain_g * L <= 0.1;
    r.flags.within_radiative = in.beta > 0.0 && t <= 0.1 / (2.0 * in.beta);
    return r;
}

double peak_snr(const SNRInputs& in)
{
    return in.pulse.photon_number_q / sqrt_pi * (in.tau_R / in.pulse.duration_tau_p) *
           (c_light / in.v_g);
}

double snr_time_dependent_noise(const SNRInputs& in, double t)
{
    const double n = noise_intensity(in, t);
    if (n <= 0.0) throw std::domain_error("snr_time_dependent_noise: zero noise at t = 0");
    return signal_intensity(in, t) * std::exp(in.gain_g * in.medium.length_L) / n;
}

SnrBounds snr_bounds(const SNRInputs& in)
{
    const double q = in.pulse.photon_number_q;
    const double tau_p = in.pulse.duration_tau_p;
    const double dt = in.pulse.detuning_Delta * tau_p;
    const double sep = in.excess * in.medium.length_L / c_light; // pulse-front separation

    SnrBounds b;
    b.ars_bound = q / sqrt_pi / (dt * dt);
    b.ars_bound_margin = sep / tau_p;
    b.ars_bound_valid = b.ars_bound_margin >= 10.0;
    b.frequency_independent_bound = q * tau_p / sep;
    b.frequency_independent_valid = std::abs(dt) >= 1.0;

    const double peak = peak_snr(in);
    if (b.ars_bound_valid && peak > b.ars_bound * (1.0 + 1e-10))
        throw std::logic_error("snr_bounds: peak SNR exceeds the ARS bound in its validity regime");
    if (b.frequency_independent_valid && peak > b.frequency_independent_bound * (1.0 + 1e-10))
        throw std::logic_error("snr_bounds: peak SNR exceeds the frequency-independent bound");
    return b;
}

VacuumNoise vacuum_noise_crosscheck(const SNRInputs& in)
{
    VacuumNoise v;
    v.value = noise_floor(in.medium);

    // Int d(Delta) beta / (Delta^2 + beta^2) over the full line; the window
    // [-1e9, 1e9] beta leaves an analytic tail of 2 atan(1e-9).
    const double beta = in.beta;
    auto lorentzian = [beta](double d) { return beta / (d * d + beta * beta); };
    const double X = 1e9 * beta;
    const QuadratureResult q = integrate_split(lorentzian, -X, X,
                                               {-1e3 * beta, -beta, beta, 1e3 * beta}, 1e-10);
    if (!q.converged) throw std::runtime_error("vacuum_noise_crosscheck: quadrature failed");
    v.lorentzian_over_pi = (q.value + 2.0 * std::atan(1e-9)) / pi;
    return v;
}

}  // namespace qsnp
