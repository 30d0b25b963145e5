#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsnp/amplifier_snr.hpp"
#include "qsnp/quadrature.hpp"
#include "test_media.hpp"

using namespace qsnp;
using constants::c_light;
using constants::hbar;
using constants::sqrt_pi;
using qsnp_test::medium_with_tau_r;

namespace {

// Amplifier with v_g fixed through the detuning: r = omega_p^2/(4 Delta^2).
SNRInputs make_inputs(double r, double q, double tau_p_over_tau_r, double tau_R = 1e-8,
                      double transit_fraction = 0.1)
{
    const double L = transit_fraction * tau_R * c_light;
    MediumParams m = medium_with_tau_r(tau_R, 1e8, L);
    const double delta = std::sqrt(m.plasma_frequency_sq() / (4.0 * r));
    PulseParams pulse(q, tau_p_over_tau_r * tau_R, delta, m.transition.omega0);
    return SNRInputs(m, pulse);
}

}  // namespace

TEST_CASE("noise vanishes at t = 0 and doubles with density")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    CHECK(noise_intensity(in, 0.0) == 0.0);

    // Doubling N at Delta -> sqrt(2) Delta keeps v_g and g fixed, so the
    // prefactor linearity shows up as an exact factor 2.
    MediumParams m2(in.medium.transition, 2.0 * in.medium.density_N, 1.0, in.medium.length_L,
                    in.medium.area_S);
    const double delta2 = std::sqrt(2.0) * in.pulse.detuning_Delta;
    SNRInputs in2(m2, PulseParams(1.0, in.pulse.duration_tau_p, delta2, m2.transition.omega0));
    REQUIRE(in2.v_g == doctest::Approx(in.v_g).epsilon(1e-12));
    const double t = in.medium.length_L / in.v_g;
    CHECK(noise_intensity(in2, t) == doctest::Approx(2.0 * noise_intensity(in, t)).epsilon(1e-12));
}

TEST_CASE("noise beta -> 0 limit reaches the amplified-length floor")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    const double t_star = in.medium.length_L / in.v_g; // v_g t = L
    const auto vac = vacuum_noise_crosscheck(in);

    // Dial beta (keeping g = 2 beta (1/c - 1/v_g) in step) and watch the noise
    // converge linearly onto the vacuum-route value as beta shrinks.
    double prev_gap = 1.0;
    for (double scale : {1e8, 1e4, 1.0}) {
        SNRInputs tuned = in;
        tuned.beta *= scale;
        tuned.gain_g *= scale;
        const double gap = std::abs(noise_intensity(tuned, t_star) / vac.value - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-8);

    SNRInputs zero = in;
    zero.beta = 0.0;
    zero.gain_g = 0.0;
    CHECK(noise_intensity(zero, t_star) == doctest::Approx(vac.value).epsilon(1e-13));
}

TEST_CASE("signal pulse")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    const double t_peak = in.medium.length_L / in.v_g;

    SUBCASE("integrated flux is q hbar omega0 / S")
    {
        const double tau_p = in.pulse.duration_tau_p;
        auto flux_density = [&](double t) {
            return in.v_g / (2.0 * constants::pi) * signal_intensity(in, t);
        };
        const auto q = integrate(flux_density, t_peak - 12.0 * tau_p, t_peak + 12.0 * tau_p, 1e-12);
        REQUIRE(q.converged);
        CHECK(q.value == doctest::Approx(signal_flux(in)).epsilon(1e-10));
    }
    SUBCASE("peak sits at the group-delay arrival")
    {
        const double tau_p = in.pulse.duration_tau_p;
        CHECK(signal_intensity(in, t_peak) > signal_intensity(in, t_peak + 0.2 * tau_p));
        CHECK(signal_intensity(in, t_peak) > signal_intensity(in, t_peak - 0.2 * tau_p));
    }
    SUBCASE("linear in q")
    {
        auto in2 = make_inputs(0.5, 2.0, 1.0);
        CHECK(signal_intensity(in2, t_peak) ==
              doctest::Approx(2.0 * signal_intensity(in, t_peak)).epsilon(1e-12));
    }
}

TEST_CASE("snr worked value: q = 1, tau_p = tau_R, v_g = 2c")
{
    auto in = make_inputs(0.5, 1.0, 1.0); // r = 1/2 makes v_g = 2c
    REQUIRE(in.v_g == doctest::Approx(2.0 * c_light).epsilon(1e-12));
    const double t_peak = in.medium.length_L / in.v_g;
    const auto s = snr(in, t_peak);
    const double expected = 1.0 / (2.0 * sqrt_pi); // 0.28209479...
    CHECK(s.form_qa3 == doctest::Approx(expected).epsilon(1e-10));
    CHECK(s.form_qa4 == doctest::Approx(expected).epsilon(1e-10));
    CHECK(s.form_new1 == doctest::Approx(expected).epsilon(1e-10));
    CHECK(peak_snr(in) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("snr decays to zero off peak")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    const double t_peak = in.medium.length_L / in.v_g;
    CHECK(snr(in, t_peak + 8.0 * in.pulse.duration_tau_p).form_qa4 < 1e-20);
}

TEST_CASE("three forms agree over a parameter grid")
{
    // 10 x 10 x 10 in (detuning ratio, pulse duration, length).
    for (int i = 0; i < 10; ++i) {
        const double r = 0.05 + 0.09 * i;
        for (int j = 0; j < 10; ++j) {
            const double tp = std::pow(10.0, -1.0 + 0.2 * j);
            for (int l = 0; l < 10; ++l) {
                auto in = make_inputs(r, 1.0, tp, 1e-8, 0.02 + 0.03 * l);
                const double t = in.medium.length_L / in.v_g + 0.3 * in.pulse.duration_tau_p;
                const auto s = snr(in, t); // throws beyond 1e-10 disagreement
                const double big = std::max({s.form_qa3, s.form_qa4, s.form_new1});
                const double spread = std::max({std::abs(s.form_qa3 - s.form_qa4),
                                                std::abs(s.form_qa4 - s.form_new1),
                                                std::abs(s.form_qa3 - s.form_new1)});
                CHECK(spread <= 1e-10 * big);
            }
        }
    }
}

TEST_CASE("snr is exactly linear in q")
{
    auto a = make_inputs(0.5, 1.0, 1.0);
    auto b = make_inputs(0.5, 3.0, 1.0);
    const double t = a.medium.length_L / a.v_g;
    CHECK(snr(b, t).form_qa4 == doctest::Approx(3.0 * snr(a, t).form_qa4).epsilon(1e-13));
}

TEST_CASE("inconsistent derived inputs are rejected")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    in.tau_R *= 1.001; // break the (ac) substitution
    CHECK_THROWS_AS(snr(in, in.observation_t), std::logic_error);
}

TEST_CASE("CKK-regime SNR values")
{
    // tau_p = tau_R c/v_g puts the peak at exactly q/sqrt(pi).
    auto base = make_inputs(0.5, 1.0, 1.0);
    const double tau_p = base.tau_R * c_light / base.v_g;
    PulseParams pulse(1.0, tau_p, base.pulse.detuning_Delta, base.medium.transition.omega0);
    SNRInputs in(base.medium, pulse);
    CHECK(peak_snr(in) == doctest::Approx(1.0 / sqrt_pi).epsilon(1e-10));

    PulseParams pulse2(2.0, tau_p, base.pulse.detuning_Delta, base.medium.transition.omega0);
    CHECK(peak_snr(SNRInputs(base.medium, pulse2)) > 1.0);
}

TEST_CASE("ARS-regime bound and verdict")
{
    // Build (v_g/c - 1) L/c = 10 tau_p with |Delta| tau_p = 5.
    const double tau_R = 1e-8;
    MediumParams m0 = medium_with_tau_r(tau_R, 1e8, 1.0);
    const double r = 0.2;
    const double delta = std::sqrt(m0.plasma_frequency_sq() / (4.0 * r));
    const double tau_p = 5.0 / delta;
    const double excess = r / (1.0 - r);
    const double L = 10.0 * tau_p * c_light / excess;
    MediumParams m(m0.transition, m0.density_N, 1.0, L, m0.area_S);
    SNRInputs in(m, PulseParams(1.0, tau_p, delta, m.transition.omega0));

    const auto b = snr_bounds(in);
    CHECK(b.ars_bound_valid);
    CHECK(b.ars_bound == doctest::Approx(1.0 / (sqrt_pi * 25.0)).epsilon(1e-12));
    CHECK(peak_snr(in) < 0.0226); // noise-dominated verdict
    CHECK(peak_snr(in) <= b.ars_bound * (1.0 + 1e-10));
    CHECK(peak_snr(in) <= b.frequency_independent_bound * (1.0 + 1e-10));
}

TEST_CASE("frequency-independent bound")
{
    SUBCASE("vacuous as v_g -> c")
    {
        auto in = make_inputs(1e-9, 1.0, 1.0);
        CHECK(snr_bounds(in).frequency_independent_bound > 1e6);
    }
    SUBCASE("invariant under transition-frequency rescaling at fixed v_g, tau_p, L")
    {
        const double tau_R = 1e-8, L = 0.1 * tau_R * c_light;
        for (double scale : {1.0, 2.0, 7.0}) {
            MediumParams m = medium_with_tau_r(tau_R, 1e8, L, 0.01, scale * 2.4e15);
            const double delta = std::sqrt(m.plasma_frequency_sq() / (4.0 * 0.3));
            SNRInputs in(m, PulseParams(1.0, 1e-8, delta, m.transition.omega0));
            static double reference = 0.0;
            const double bound = snr_bounds(in).frequency_independent_bound;
            if (reference == 0.0) reference = bound;
            CHECK(bound == doctest::Approx(reference).epsilon(1e-10));
        }
    }
}

TEST_CASE("vacuum-noise cross-check")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    const auto v = vacuum_noise_crosscheck(in);

    SUBCASE("matches the qa3 denominator")
    {
        const double a = 2.0 * constants::pi * in.medium.transition.dipole_d *
                         in.medium.transition.omega0 / c_light;
        const double denom = a * a * in.medium.density_N * in.medium.length_L / in.medium.area_S;
        CHECK(v.value == doctest::Approx(denom).epsilon(1e-10));
    }
    SUBCASE("Lorentzian integrates to pi")
    {
        CHECK(v.lorentzian_over_pi == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("linear in L")
    {
        MediumParams half(in.medium.transition, in.medium.density_N, 1.0,
                          0.5 * in.medium.length_L, in.medium.area_S);
        SNRInputs in_half(half, PulseParams(1.0, in.pulse.duration_tau_p,
                                            in.pulse.detuning_Delta,
                                            half.transition.omega0));
        CHECK(vacuum_noise_crosscheck(in_half).value ==
              doctest::Approx(0.5 * v.value).epsilon(1e-12));
    }
}

TEST_CASE("ordering equivalence: dipole route meets vacuum route")
{
    auto in = make_inputs(0.5, 1.0, 1.0);
    SNRInputs zero_beta = in;
    zero_beta.beta = 0.0;
    zero_beta.gain_g = 0.0;
    const double t_star = in.medium.length_L / in.v_g;
    const double dipole_route = noise_intensity(zero_beta, t_star);
    const double vacuum_route = vacuum_noise_crosscheck(in).value;
    CHECK(std::abs(dipole_route / vacuum_route - 1.0) < 1e-8);
}

TEST_CASE("peak SNR bound holds across the ARS-valid sweep")
{
    for (double r : {0.1, 0.3, 0.6})
        for (double dt_ratio : {1.0, 3.0, 10.0}) {
            const double tau_R = 1e-8;
            MediumParams m0 = medium_with_tau_r(tau_R, 1e8, 1.0);
            const double delta = std::sqrt(m0.plasma_frequency_sq() / (4.0 * r));
            const double tau_p = dt_ratio / delta;
            const double excess = r / (1.0 - r);
            const double L = 12.0 * tau_p * c_light / excess; // safely ARS-valid
            MediumParams m(m0.transition, m0.density_N, 1.0, L, m0.area_S);
            SNRInputs in(m, PulseParams(1.0, tau_p, delta, m.transition.omega0));
            const auto b = snr_bounds(in);
            REQUIRE(b.ars_bound_valid);
            CHECK(peak_snr(in) <= b.ars_bound * (1.0 + 1e-10));
        }
}
