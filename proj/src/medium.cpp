#include "qsnp/medium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsnp/constants.hpp"

namespace qsnp {

using namespace constants;

TransitionSpec TransitionSpec::from_dipole(double omega0, double dipole_d, double beta)
{
    if (omega0 <= 0.0) throw std::invalid_argument("TransitionSpec: omega0 must be positive");
    if (dipole_d < 0.0) throw std::invalid_argument("TransitionSpec: dipole moment must be >= 0");
    if (beta < 0.0) throw std::invalid_argument("TransitionSpec: beta must be >= 0");
    TransitionSpec t;
    t.omega0 = omega0;
    t.dipole_d = dipole_d;
    t.oscillator_strength_f =
        2.0 * electron_mass * omega0 * dipole_d * dipole_d / (hbar * electron_charge * electron_charge);
    t.beta = beta;
    return t;
}

TransitionSpec TransitionSpec::from_oscillator_strength(double omega0, double f, double beta)
{
    if (f < 0.0) throw std::invalid_argument("TransitionSpec: oscillator strength must be >= 0");
    const double d = electron_charge * std::sqrt(f * hbar / (2.0 * electron_mass * omega0));
    TransitionSpec t = from_dipole(omega0, d, beta);
    t.oscillator_strength_f = f; // keep the given value exactly
    return t;
}

MediumParams::MediumParams(TransitionSpec tr, double n, double w, double l, double s)
    : transition(tr), density_N(n), inversion_w(w), length_L(l), area_S(s)
{
    if (density_N < 0.0) throw std::invalid_argument("MediumParams: density must be >= 0");
    if (inversion_w < -1.0 || inversion_w > 1.0)
        throw std::invalid_argument("MediumParams: inversion w must lie in [-1, 1]");
    if (length_L <= 0.0 || area_S <= 0.0)
        throw std::invalid_argument("MediumParams: geometry must be positive");
    atom_count_NT = density_N * area_S * length_L;

    const double beta_rad =
        pi * tr.dipole_d * tr.dipole_d * tr.omega0 / (area_S * hbar * c_light);
    if (transition.beta == 0.0) {
        transition.beta = beta_rad;
    } else if (beta_rad > 0.0 &&
               std::abs(transition.beta - beta_rad) > 1e-12 * beta_rad) {
        throw std::invalid_argument(
            "MediumParams: beta inconsistent with the radiative rate "
            "pi d^2 omega0 / (S hbar c); only radiative broadening is modeled");
    }
}

double MediumParams::plasma_frequency_sq() const
{
    const double d = transition.dipole_d;
    return 8.0 * pi * density_N * d * d * transition.omega0 / hbar;
}

double MediumParams::plasma_frequency_sq_from_timescales() const
{
    if (atom_count_NT <= 0.0) return 0.0;
    const Timescales ts = timescales(*this);
    return (4.0 / ts.tau_R) * (c_light / length_L);
}

PulseParams::PulseParams(double q, double tau_p, double delta, double omega0)
    : photon_number_q(q), duration_tau_p(tau_p), detuning_Delta(delta),
      carrier_omega(omega0 - delta)
{
    if (photon_number_q <= 0.0) throw std::invalid_argument("PulseParams: q must be positive");
    if (duration_tau_p <= 0.0) throw std::invalid_argument("PulseParams: tau_p must be positive");
    if (carrier_omega <= 0.0) throw std::invalid_argument("PulseParams: carrier frequency must be positive");
    narrowband = std::abs(detuning_Delta) * duration_tau_p > 1.0;
}

double refractive_index(const MediumParams& medium, double omega, IndexMode mode,
                        bool* regime_ok)
{
    if (omega <= 0.0) throw std::invalid_argument("refractive_index: omega must be positive");
    const double w = medium.inversion_w;
    const double wp2 = medium.plasma_frequency_sq();
    const double omega0 = medium.transition.omega0;
    const double beta = medium.transition.beta;
    const double delta = omega0 - omega;

    if (regime_ok) *regime_ok = std::abs(delta) >= 10.0 * wp2 / (4.0 * omega0);

    switch (mode) {
    case IndexMode::MultilevelSum: {
        const double denom = omega0 * omega0 - omega * omega;
        if (denom == 0.0 && wp2 * w != 0.0)
            throw std::domain_error("refractive_index: resonance singularity at omega = omega0");
        return (wp2 * w == 0.0) ? 1.0 : 1.0 - 0.5 * wp2 * w / denom;
    }
    case IndexMode::TwoLevelReal: {
        const double denom = delta * delta + beta * beta;
        if (denom == 0.0 && wp2 * w != 0.0)
            throw std::domain_error(
                "refractive_index: resonance singularity (beta = 0, omega = omega0)");
        return (wp2 * w == 0.0) ? 1.0 : 1.0 - wp2 * w / (4.0 * omega0) * delta / denom;
    }
    case IndexMode::FarDetuned: {
        if (delta == 0.0 && wp2 * w != 0.0)
            throw std::domain_error("refractive_index: far-detuned form undefined on resonance");
        return (wp2 * w == 0.0) ? 1.0 : 1.0 - wp2 * w / (4.0 * omega0 * delta);
    }
    }
    throw std::logic_error("refractive_index: unknown mode");
}

std::complex<double> refractive_index_damped(const MediumParams& medium, double omega)
{
    if (omega <= 0.0) throw std::invalid_argument("refractive_index_damped: omega must be positive");
    const double wp2w = medium.plasma_frequency_sq() * medium.inversion_w;
    if (wp2w == 0.0) return {1.0, 0.0};
    const double omega0 = medium.transition.omega0;
    const std::complex<double> pole(omega0 - omega, -medium.transition.beta);
    if (pole == std::complex<double>(0.0, 0.0))
        throw std::domain_error("refractive_index_damped: resonance singularity (beta = 0, omega = omega0)");
    return 1.0 - wp2w / (4.0 * omega0) / pole;
}

GroupVelocity group_velocity(const MediumParams& medium, double delta)
{
    if (delta == 0.0)
        throw std::domain_error("group_velocity: formula diverges at zero detuning");
    const double r = medium.plasma_frequency_sq() * medium.inversion_w / (4.0 * delta * delta);
    const double denom = 1.0 - r;
    if (denom == 0.0)
        throw std::domain_error("group-velocity divergence: w omega_p^2 = 4 Delta^2");
    GroupVelocity gv;
    gv.v_g = c_light / denom;
    gv.excess = r / denom; // Eq. form (v_g/c - 1) = r / (1 - r), no cancellation
    return gv;
}

CkkRoots ckk_dispersion(const MediumParams& medium, double K)
{
    // Omega^2 - K c Omega + w omega_p^2 / 4 = 0
    const double b = K * c_light;
    const double q = 0.25 * medium.plasma_frequency_sq() * medium.inversion_w;
    const double disc = b * b - 4.0 * q;
    CkkRoots roots;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // Avoid cancellation: compute the large-magnitude root first, get the
        // other from the product of roots.
        double r1, r2;
        if (b == 0.0) {
            r1 = -0.5 * sq;
            r2 = 0.5 * sq;
        } else {
            const double big = 0.5 * (b + std::copysign(sq, b));
            r1 = big;
            r2 = (big != 0.0) ? q / big : 0.0;
        }
        if (r1 > r2) std::swap(r1, r2);
        roots.lower = r1;
        roots.upper = r2;
    } else {
        const double im = 0.5 * std::sqrt(-disc);
        roots.lower = {0.5 * b, -im};
        roots.upper = {0.5 * b, im};
        roots.conjugate_pair = true;
    }
    return roots;
}

GainCoefficient gain_coefficient(const MediumParams& medium, double delta)
{
    const double wp2 = medium.plasma_frequency_sq();
    const double beta = medium.transition.beta;
    GainCoefficient g;
    g.lorentzian = 0.5 * wp2 / c_light * beta / (delta * delta + beta * beta);
    g.far_detuned = (delta != 0.0) ? 0.5 * wp2 / c_light * beta / (delta * delta)
                                   : std::numeric_limits<double>::infinity();
    if (delta != 0.0) {
        // Build from v_g at full inversion regardless of the stored w; the
        // gain formula assumes all atoms excited.
        MediumParams inverted = medium;
        inverted.inversion_w = 1.0;
        const GroupVelocity gv = group_velocity(inverted, delta);
        g.from_group_velocity = 2.0 * beta * (1.0 / c_light - 1.0 / gv.v_g);
    } else {
        g.from_group_velocity = std::numeric_limits<double>::infinity();
    }
    return g;
}

Timescales timescales(const MediumParams& medium)
{
    // d = 0 is the uncoupled limit: every radiative timescale is infinite.
    const double d = medium.transition.dipole_d;
    Timescales ts;
    ts.tau_RAD = medium.area_S * hbar * c_light / (2.0 * pi * d * d * medium.transition.omega0);
    if (medium.atom_count_NT <= 0.0)
        throw std::domain_error("timescales: atom count N_T must be positive");
    ts.tau_R = ts.tau_RAD / medium.atom_count_NT;
    const double lg = std::log(2.0 * pi * medium.atom_count_NT);
    if (lg <= 0.0)
        throw std::domain_error("timescales: tau_D undefined for N_T <= 1/(2 pi)");
    ts.tau_D = ts.tau_R * 0.0625 * lg * lg; // tau_R (ln(2 pi N_T) / 4)^2
    ts.transit_L_over_c = medium.length_L / c_light;
    return ts;
}

RegimeReport regime_report(const MediumParams& medium, const PulseParams& pulse,
                           double observation_T)
{
    const double tau_p = pulse.duration_tau_p;
    const Timescales ts = timescales(medium);
    RegimeReport rep;

    double vg_over_c = 1.0, excess = 0.0;
    try {
        const GroupVelocity gv = group_velocity(medium, pulse.detuning_Delta);
        vg_over_c = gv.v_g / c_light;
        excess = gv.excess;
    } catch (const std::domain_error&) {
        // On the pole the ARS ratios are formally infinite; report them so.
        vg_over_c = std::numeric_limits<double>::infinity();
        excess = std::numeric_limits<double>::infinity();
    }

    const double threshold = 10.0; // every ">>" is read as ratio >= 10

    rep.ars1.margin = vg_over_c * observation_T / tau_p;
    rep.ars1.satisfied = rep.ars1.margin >= threshold;

    rep.ars2.margin = excess * observation_T / tau_p;
    rep.ars2.satisfied = rep.ars2.margin >= threshold;

    rep.hierarchy.margin = std::min(ts.tau_RAD / observation_T, observation_T / tau_p);
    rep.hierarchy.satisfied = rep.hierarchy.margin >= threshold;

    const double slow = std::max(tau_p, ts.transit_L_over_c);
    rep.sf_safety.margin = std::min(ts.tau_R / slow, ts.tau_D / ts.tau_R);
    rep.sf_safety.satisfied = slow < ts.tau_R && ts.tau_R < ts.tau_D;

    rep.ckk.margin = ts.tau_R / tau_p;
    rep.ckk.satisfied = tau_p <= ts.tau_R;

    return rep;
}

}  // namespace qsnp
