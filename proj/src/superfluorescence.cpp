#include "qsnp/superfluorescence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsnp/bessel.hpp"
#include "qsnp/constants.hpp"
#include "qsnp/quadrature.hpp"

namespace qsnp {

using namespace constants;

SFContext::SFContext(const MediumParams& m) : medium(m), times(timescales(m))
{
    const double wp2 = medium.plasma_frequency_sq();
    const double wp2_alt = medium.plasma_frequency_sq_from_timescales();
    if (std::abs(wp2 - wp2_alt) > 1e-12 * wp2)
        throw std::logic_error("SFContext: plasma-frequency identities disagree");
    omega_p = std::sqrt(wp2);
}

namespace {

double field_sq_prefactor(const MediumParams& m)
{
    const double a = 2.0 * pi * m.transition.dipole_d * m.transition.omega0 / c_light;
    return a * a * m.density_N / m.area_S;
}

}  // namespace

double sf_intensity(const SFContext& ctx, double t, double rel_tol)
{
    if (t < 0.0) throw std::invalid_argument("sf_intensity: t must be >= 0");
    const double L = ctx.medium.length_L;
    // The step function restricts the integrand to x < c t; cutting the domain
    // there also removes the kink it would otherwise put inside the interval.
    const double upper = std::min(L, c_light * t);
    if (upper <= 0.0) return 0.0;

    // Largest Bessel argument on the domain, used for an overflow guard and to
    // keep the integrand scaled near unity.
    const double xm = std::min(upper, 0.5 * c_light * t);
    const double y_max = ctx.omega_p * std::sqrt((xm / c_light) * (t - xm / c_light));
    if (2.0 * y_max > 700.0)
        throw std::overflow_error("sf_intensity: I0^2 overflows double range; reduce t");

    auto integrand = [&](double x) {
        const double arg = (x / c_light) * (t - x / c_light);
        const double y = ctx.omega_p * std::sqrt(std::max(arg, 0.0));
        const double scaled = bessel_i0_scaled(y);
        return std::exp(2.0 * (y - y_max)) * scaled * scaled;
    };
    const QuadratureResult q = integrate(integrand, 0.0, upper, rel_tol);
    if (!q.converged)
        throw std::runtime_error("sf_intensity: quadrature did not converge, achieved " +
                                 std::to_string(q.error_estimate / std::abs(q.value)) +
                                 " relative");
    return field_sq_prefactor(ctx.medium) * std::exp(2.0 * y_max) * q.value;
}

double sf_intensity_short_time(const SFContext& ctx, double t)
{
    return field_sq_prefactor(ctx.medium) * c_light * t;
}

double sf_intensity_asymptotic(const SFContext& ctx, double t)
{
    if (t <= 0.0) throw std::invalid_argument("sf_intensity_asymptotic: t must be positive");
    const double S = ctx.medium.area_S;
    const double omega0 = ctx.medium.transition.omega0;
    return (1.0 / (8.0 * pi)) * (2.0 * pi * hbar * omega0 / (S * c_light * t)) *
           std::exp(4.0 * std::sqrt(t / ctx.times.tau_R));
}

SFDelay sf_delay(const SFContext& ctx)
{
    const double nt = ctx.medium.atom_count_NT;
    if (nt <= 1.0) throw std::domain_error("sf_delay: N_T must exceed 1");
    SFDelay d;
    d.closed_form = ctx.times.tau_D;

    // Equating (c/2pi) <F^dag F> in its asymptotic form to the peak SF
    // intensity N_T hbar omega0 / (S tau_R) reduces to
    //   4 sqrt(x) = ln(8 pi N_T x),  x = t / tau_R.
    const double lg = std::log(8.0 * pi * nt);
    auto h = [&](double x) { return 4.0 * std::sqrt(x) - lg - std::log(x); };
    double lo = 0.3, hi = 1e7;
    if (h(lo) >= 0.0 || h(hi) <= 0.0)
        throw std::runtime_error("sf_delay: root bracketing failed");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    d.root_solve = 0.5 * (lo + hi) * ctx.times.tau_R;
    return d;
}

}  // namespace qsnp
