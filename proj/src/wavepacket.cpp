#include "qsnp/wavepacket.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qsnp/constants.hpp"

namespace qsnp {

using constants::pi;
using std::complex;

namespace {

constexpr double kOverflowExponent = 690.0; // ln(1e300) ~ 690.8

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::ArrayXcd ifft(const Eigen::ArrayXcd& spec)
{
    Eigen::FFT<double> fft;
    Eigen::VectorXcd out;
    fft.inv(out, spec.matrix().eval());
    return out.array();
}

Eigen::ArrayXcd fft_fwd(const Eigen::ArrayXcd& samples)
{
    Eigen::FFT<double> fft;
    Eigen::VectorXcd out;
    fft.fwd(out, samples.matrix().eval());
    return out.array();
}

// e^{-i omega_k t} per bin; zero for the unstable band under OscillatoryOnly.
// amplitudes gates the overflow guard so explicitly zeroed bins cannot trip it.
Eigen::ArrayXcd evolution_factors(const Grid1D& grid, double mass_m, double c, double t,
                                  BranchRule branch, const Eigen::ArrayXcd& amplitudes)
{
    const Eigen::ArrayXd k = grid.k();
    const int n = grid.n_points;
    Eigen::ArrayXcd factors(n);
    for (int j = 0; j < n; ++j) {
        const double kk = k[j];
        const double under = kk * kk - mass_m * mass_m;
        if (under >= 0.0) {
            const double omega = (kk >= 0.0 ? 1.0 : -1.0) * c * std::sqrt(under);
            factors[j] = std::polar(1.0, -omega * t);
            continue;
        }
        if (branch == BranchRule::OscillatoryOnly) {
            factors[j] = 0.0;
            continue;
        }
        const double kappa = c * std::sqrt(-under);
        const double exponent = (branch == BranchRule::GrowingBranch ? kappa : -kappa) * t;
        if (exponent > kOverflowExponent && std::abs(amplitudes[j]) > 0.0)
            throw std::overflow_error("unstable-mode overflow; reduce t");
        factors[j] = std::abs(amplitudes[j]) > 0.0 ? std::exp(exponent) : 0.0;
    }
    return factors;
}

}  // namespace

Grid1D::Grid1D(double x_min_, double dx_, int n_points_)
    : x_min(x_min_), dx(dx_), n_points(n_points_)
{
    if (dx <= 0.0) throw std::invalid_argument("Grid1D: dx must be positive");
    if (n_points < 16 || !power_of_two(n_points))
        throw std::invalid_argument("Grid1D: n_points must be a power of two >= 16");
}

double Grid1D::dk() const { return 2.0 * pi / length(); }

Eigen::ArrayXd Grid1D::x() const
{
    return x_min + dx * Eigen::ArrayXd::LinSpaced(n_points, 0, n_points - 1);
}

Eigen::ArrayXd Grid1D::k() const
{
    Eigen::ArrayXd k(n_points);
    const double dkv = dk();
    for (int j = 0; j < n_points; ++j) {
        const int jj = (j < n_points / 2) ? j : j - n_points;
        k[j] = dkv * jj;
    }
    return k;
}

int Grid1D::index_at_or_above(double value) const
{
    const double pos = (value - x_min) / dx;
    if (pos <= 0.0) return 0;
    if (pos > n_points - 1) return n_points;
    return static_cast<int>(std::ceil(pos));
}

bool SpectralPacket::safe_support() const
{
    const Eigen::ArrayXd k = grid.k();
    const Eigen::ArrayXd power = g_of_k.abs2();
    const double total = power.sum();
    if (total == 0.0) return false;
    double band = 0.0;
    for (int j = 0; j < grid.n_points; ++j)
        if (std::abs(k[j]) < mass_m) band += power[j];
    return band / total < 1e-12;
}

SpectralPacket make_gaussian_packet(const Grid1D& grid, double k0, double sigma_k, double x0,
                                    double mass_m, BranchRule branch, double c)
{
    if (sigma_k <= 0.0) throw std::invalid_argument("make_gaussian_packet: sigma_k must be positive");
    if (x0 < grid.x_min || x0 >= grid.x_min + grid.length())
        throw std::invalid_argument("make_gaussian_packet: x0 outside the grid");

    SpectralPacket p;
    p.grid = grid;
    p.branch = branch;
    p.mass_m = mass_m;
    p.c = c;
    p.carrier_in_unstable_band = std::abs(k0) < mass_m;

    const Eigen::ArrayXd k = grid.k();
    p.g_of_k.resize(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j) {
        const double u = (k[j] - k0) / sigma_k;
        p.g_of_k[j] = std::exp(-0.5 * u * u) * std::polar(1.0, -k[j] * x0);
        if (branch == BranchRule::OscillatoryOnly && std::abs(k[j]) < mass_m) p.g_of_k[j] = 0.0;
    }
    const double n2 = synthesize(p, 0.0).norm2();
    if (n2 <= 0.0) throw std::invalid_argument("make_gaussian_packet: packet has no support");
    p.g_of_k /= std::sqrt(n2);
    return p;
}

GridField synthesize(const SpectralPacket& packet, double t)
{
    const Grid1D& grid = packet.grid;
    const Eigen::ArrayXcd factors =
        evolution_factors(grid, packet.mass_m, packet.c, t, packet.branch, packet.g_of_k);
    const Eigen::ArrayXd k = grid.k();
    Eigen::ArrayXcd spec(grid.n_points);
    for (int j = 0; j < grid.n_points; ++j)
        spec[j] = packet.g_of_k[j] * factors[j] * std::polar(1.0, k[j] * grid.x_min);

    GridField field;
    field.grid = grid;
    field.samples = ifft(spec) * (grid.n_points * grid.dk());
    field.time = t;
    return field;
}

Eigen::ArrayXcd spectrum_of(const GridField& field)
{
    const Grid1D& grid = field.grid;
    Eigen::ArrayXcd spec = fft_fwd(field.samples);
    const Eigen::ArrayXd k = grid.k();
    const double scale = grid.dx / (2.0 * pi);
    for (int j = 0; j < grid.n_points; ++j)
        spec[j] *= scale * std::polar(1.0, -k[j] * grid.x_min);
    return spec;
}

std::pair<GridField, GridField> truncate_split(const GridField& field, double cut_x)
{
    const int idx = field.grid.index_at_or_above(cut_x);
    GridField forward = field, rest = field;
    forward.samples.head(idx).setZero();
    rest.samples.tail(field.grid.n_points - idx).setZero();
    return {forward, rest};
}

GridField evolve_truncated(const GridField& field, double mass_m, BranchRule branch, double t,
                           double c)
{
    if (t == 0.0) return field;
    SpectralPacket p;
    p.grid = field.grid;
    p.g_of_k = spectrum_of(field);
    p.branch = branch;
    p.mass_m = mass_m;
    p.c = c;
    GridField out = synthesize(p, t);
    out.time = field.time + t;
    return out;
}

std::pair<Eigen::ArrayXcd, Eigen::ArrayXcd> plemelj_amplitudes(const SpectralPacket& packet)
{
    const Grid1D& grid = packet.grid;
    const int n = grid.n_points;
    const int n0 = grid.index_at_or_above(0.0);
    const Eigen::ArrayXd k = grid.k();

    // Strip the x_min phases; in the bare DFT domain the half-space cut is an
    // exact circular convolution.
    Eigen::ArrayXcd gh(n);
    for (int j = 0; j < n; ++j) gh[j] = packet.g_of_k[j] * std::polar(1.0, k[j] * grid.x_min);

    // zeta = g/2 - (i/2pi) PV Int g(k')/(k - k') dk'. The kernel below is the
    // closed-form spectrum of the discrete step at x = 0: its s = 0 weight is
    // the Plemelj 1/2, the rest is the discrete principal value. For a cut
    // falling between samples it reduces to the odd-symmetric midpoint rule
    // with periodized weights -i/(n sin(pi s/n)) and zero weight at s = 0;
    // a cut on a sample adds the half-sample terms matching truncate_split's
    // bin assignment.
    Eigen::ArrayXcd kernel(n);
    kernel[0] = static_cast<double>(n - n0) / n;
    for (int s = 1; s < n; ++s) {
        const std::complex<double> num =
            std::polar(1.0, -2.0 * pi * s * n0 / n) *
            (1.0 - std::polar(1.0, -2.0 * pi * s * (n - n0) / n));
        kernel[s] = num / (1.0 - std::polar(1.0, -2.0 * pi * s / n)) / static_cast<double>(n);
    }

    Eigen::ArrayXcd conv = Eigen::ArrayXcd::Zero(n);
    for (int s = 0; s < n; ++s) {
        if (std::abs(kernel[s]) < 1e-18) continue; // even offsets vanish for mid-cell cuts
        conv.segment(s, n - s) += kernel[s] * gh.segment(0, n - s);
        conv.head(s) += kernel[s] * gh.tail(s);
    }

    Eigen::ArrayXcd zeta(n);
    for (int j = 0; j < n; ++j) zeta[j] = conv[j] * std::polar(1.0, -k[j] * grid.x_min);
    Eigen::ArrayXcd xi = packet.g_of_k - zeta;
    return {zeta, xi};
}

SLClassification classify_sl(const GridField& field, double t, double c)
{
    auto [s, l] = truncate_split(field, c * t);
    SLClassification out;
    out.s_norm2 = s.norm2();
    out.l_norm2 = l.norm2();
    out.superluminal = std::move(s);
    out.luminal = std::move(l);
    return out;
}

CancellationReport cancellation_check(const SpectralPacket& packet, double cut_x, double T)
{
    require_padding(packet, T);

    const GridField psi0 = synthesize(packet, 0.0);
    auto [phi0, r0] = truncate_split(psi0, cut_x);

    GridField phi_t = phi0, r_t = r0, psi_t = psi0;
    if (T > 0.0) {
        phi_t = evolve_truncated(phi0, packet.mass_m, packet.branch, T, packet.c);
        r_t = evolve_truncated(r0, packet.mass_m, packet.branch, T, packet.c);
        psi_t = synthesize(packet, T);
    }

    const double cut = packet.c * T;
    const GridField phi_l = truncate_split(phi_t, cut).second;
    const GridField r_l = truncate_split(r_t, cut).second;
    const GridField psi_l = truncate_split(psi_t, cut).second;

    CancellationReport rep;
    rep.phi_l_norm = std::sqrt(phi_l.norm2());
    rep.r_l_norm = std::sqrt(r_l.norm2());
    rep.psi_l_norm = std::sqrt(psi_l.norm2());
    rep.residual =
        std::sqrt((phi_l.samples + r_l.samples - psi_l.samples).abs2().sum() * packet.grid.dx);
    rep.residual_over_phi = rep.phi_l_norm > 0.0 ? rep.residual / rep.phi_l_norm : 0.0;
    rep.growth_factor = rep.psi_l_norm > 0.0
                            ? rep.phi_l_norm / rep.psi_l_norm
                            : std::numeric_limits<double>::infinity();
    if (T > 0.0 && rep.growth_factor < 10.0)
        throw std::runtime_error("T too small - growth factor below threshold");
    return rep;
}

double luminal_growth_rate(const SpectralPacket& packet, double cut_x,
                           const std::vector<double>& times)
{
    if (times.size() < 2)
        throw std::invalid_argument("luminal_growth_rate: need at least two times");
    const GridField psi0 = synthesize(packet, 0.0);
    const GridField phi0 = truncate_split(psi0, cut_x).first;

    double st = 0, sy = 0, stt = 0, sty = 0;
    for (double t : times) {
        const GridField phi_t = evolve_truncated(phi0, packet.mass_m, packet.branch, t, packet.c);
        const double lnorm = std::sqrt(truncate_split(phi_t, packet.c * t).second.norm2());
        if (lnorm <= 0.0) throw std::runtime_error("luminal_growth_rate: vanishing luminal part");
        const double y = std::log(lnorm);
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double m = static_cast<double>(times.size());
    const double denom = m * stt - st * st;
    if (denom == 0.0) throw std::invalid_argument("luminal_growth_rate: degenerate time samples");
    return (m * sty - st * sy) / denom;
}

void require_padding(const SpectralPacket& packet, double T)
{
    const Eigen::ArrayXd k = packet.grid.k();
    const Eigen::ArrayXd power = packet.g_of_k.abs2();
    const double total = power.sum();
    if (total == 0.0) return;
    const double kbar = (k * power).sum() / total;

    double v = packet.c;
    const double under = kbar * kbar - packet.mass_m * packet.mass_m;
    if (under > 0.0) v = std::abs(kbar) * packet.c / std::sqrt(under);

    const double needed = 4.0 * (v + packet.c) * T;
    if (packet.grid.length() < needed)
        throw std::invalid_argument(
            "grid too small: wrap-around would reach the analysis window (needs length >= " +
            std::to_string(needed) + ")");
}

FDState make_fd_state(const Grid1D& grid, Eigen::ArrayXcd now, Eigen::ArrayXcd prev, double dt,
                      double mass_m, double c)
{
    if (dt <= 0.0) throw std::invalid_argument("make_fd_state: dt must be positive");
    if (c * dt / grid.dx > 1.0 + 1e-12)
        throw std::invalid_argument("make_fd_state: CFL number c dt/dx exceeds 1");
    if (now.size() != grid.n_points || prev.size() != grid.n_points)
        throw std::invalid_argument("make_fd_state: sample count mismatch");
    FDState s;
    s.grid = grid;
    s.field_now = std::move(now);
    s.field_prev = std::move(prev);
    s.dt = dt;
    s.mass_m = mass_m;
    s.c = c;
    return s;
}

FDState make_fd_state(const SpectralPacket& packet, double dt)
{
    SpectralPacket osc = packet;
    osc.branch = BranchRule::OscillatoryOnly;
    Eigen::ArrayXcd now = synthesize(osc, 0.0).samples;
    Eigen::ArrayXcd prev = synthesize(osc, -dt).samples;
    return make_fd_state(packet.grid, std::move(now), std::move(prev), dt, packet.mass_m,
                         packet.c);
}

void fd_propagate(FDState& state, int n_steps)
{
    const int n = state.grid.n_points;
    const double nu2 = std::pow(state.c * state.dt / state.grid.dx, 2);
    const double mass_term = std::pow(state.c * state.mass_m * state.dt, 2);
    Eigen::ArrayXcd lap(n), next(n);
    for (int step = 0; step < n_steps; ++step) {
        const Eigen::ArrayXcd& e = state.field_now;
        lap.segment(1, n - 2) =
            e.segment(2, n - 2) + e.segment(0, n - 2) - 2.0 * e.segment(1, n - 2);
        lap[0] = e[1] + e[n - 1] - 2.0 * e[0];
        lap[n - 1] = e[0] + e[n - 2] - 2.0 * e[n - 1];
        next = 2.0 * e - state.field_prev + nu2 * lap + mass_term * e;
        state.field_prev.swap(state.field_now);
        state.field_now.swap(next);
        state.time += state.dt;
    }
}

GridField fd_field(const FDState& state)
{
    GridField f;
    f.grid = state.grid;
    f.samples = state.field_now;
    f.time = state.time;
    return f;
}

ArrivalEstimate measure_arrival(const std::vector<GridField>& fields, ArrivalMode mode,
                                double threshold_fraction)
{
    if (fields.size() < 3)
        throw std::invalid_argument("measure_arrival: need at least three snapshots");

    std::vector<double> ts, xs;
    for (const GridField& f : fields) {
        const Eigen::ArrayXd w = f.samples.abs2();
        const double total = w.sum();
        if (total <= 0.0) throw std::domain_error("measure_arrival: zero-intensity field");
        double pos;
        if (mode == ArrivalMode::Centroid) {
            pos = (f.grid.x() * w).sum() / total;
        } else {
            const double thr = threshold_fraction * w.maxCoeff();
            int j = f.grid.n_points - 1;
            while (j > 0 && w[j] < thr) --j;
            pos = f.grid.x()[j];
        }
        ts.push_back(f.time);
        xs.push_back(pos);
    }

    const double m = static_cast<double>(ts.size());
    double st = 0, sx = 0, stt = 0, stx = 0;
    for (size_t i = 0; i < ts.size(); ++i) {
        st += ts[i];
        sx += xs[i];
        stt += ts[i] * ts[i];
        stx += ts[i] * xs[i];
    }
    const double denom = m * stt - st * st;
    if (denom == 0.0) throw std::invalid_argument("measure_arrival: degenerate time samples");

    ArrivalEstimate est;
    est.velocity = (m * stx - st * sx) / denom;
    const double intercept = (sx - est.velocity * st) / m;
    double ss = 0.0;
    for (size_t i = 0; i < ts.size(); ++i) {
        const double r = xs[i] - (intercept + est.velocity * ts[i]);
        ss += r * r;
    }
    est.fit_residual = std::sqrt(ss / m);
    return est;
}

ArsP2Chain ars_p2_chain(double mass_m, double T, double k0, double delta_k)
{
    if (k0 <= 0.0 || delta_k <= 0.0)
        throw std::invalid_argument("ars_p2_chain: k0 and delta_k must be positive");
    ArsP2Chain c;
    c.first_over_second = mass_m * mass_m * T * delta_k / (k0 * k0);
    c.second_over_third = k0 / delta_k;
    return c;
}

}  // namespace qsnp
