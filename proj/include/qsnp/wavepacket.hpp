#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace qsnp {

// Uniform periodic spatial grid. n_points must be a power of two (>= 16) so
// the spectral transforms stay exact inverses of each other.
struct Grid1D {
    double x_min = 0.0;
    double dx = 0.0;
    int n_points = 0;

    Grid1D() = default;
    Grid1D(double x_min, double dx, int n_points);

    double length() const { return n_points * dx; }
    double dk() const;
    Eigen::ArrayXd x() const;
    // Fourier-dual wavenumbers in FFT bin order (0, dk, ..., -dk).
    Eigen::ArrayXd k() const;
    // First sample index with x_j >= value (clamped to [0, n_points]).
    int index_at_or_above(double value) const;

    bool operator==(const Grid1D& o) const
    {
        return x_min == o.x_min && dx == o.dx && n_points == o.n_points;
    }
};

// Evolution rule for the unstable band |k| < m of omega_k = c sqrt(k^2 - m^2).
// Oscillatory modes (|k| > m) evolve as sgn(k) c sqrt(k^2 - m^2) under every
// rule; the growing branch is the continuation from just above the real axis.
enum class BranchRule {
    OscillatoryOnly, // |k| < m amplitudes zeroed
    GrowingBranch,   // omega = +i c sqrt(m^2 - k^2), amplitude e^{+c sqrt(m^2-k^2) t}
    DecayingBranch,  // omega = -i c sqrt(m^2 - k^2)
};

struct GridField {
    Grid1D grid;
    Eigen::ArrayXcd samples;
    double time = 0.0;

    double norm2() const { return samples.abs2().sum() * grid.dx; }
};

// Single-branch spectral wavepacket: complex amplitude g(k) per Fourier bin,
// field synthesis Psi(x,t) = sum_k g(k) e^{i(kx - omega_k t)} dk.
struct SpectralPacket {
    Grid1D grid;
    Eigen::ArrayXcd g_of_k; // FFT bin order
    BranchRule branch = BranchRule::GrowingBranch;
    double mass_m = 0.0;
    double c = 1.0;
    bool carrier_in_unstable_band = false;

    // True when the unstable band carries less than 1e-12 of the spectral power.
    bool safe_support() const;
};

// Gaussian g(k) centered at k0 with width sigma_k, positioned at x0,
// normalized to unit spatial norm at t = 0. OscillatoryOnly zeroes the
// |k| < m bins before normalization. k0 inside (-m, m) flags the packet but
// still builds it.
SpectralPacket make_gaussian_packet(const Grid1D& grid, double k0, double sigma_k, double x0,
                                    double mass_m, BranchRule branch = BranchRule::GrowingBranch,
                                    double c = 1.0);

// Field at time t. Throws std::overflow_error once any growing-mode factor
// would exceed 1e300.
GridField synthesize(const SpectralPacket& packet, double t);

// Spectral amplitudes of a field snapshot (inverse of synthesize at t = 0).
Eigen::ArrayXcd spectrum_of(const GridField& field);

// Sharp split at cut_x: first part keeps x >= cut_x (the sample exactly at
// the cut goes with it), second keeps the complement. Parts sum to the input
// bit-exactly.
std::pair<GridField, GridField> truncate_split(const GridField& field, double cut_x);

// Transform, apply single-branch evolution over t, transform back.
GridField evolve_truncated(const GridField& field, double mass_m, BranchRule branch, double t,
                           double c = 1.0);

// Spectral amplitudes of the two half-space truncations of the packet:
// zeta(k) = g/2 - (i/2pi) PV Int g(k')/(k - k') dk' for the x > 0 part, and
// xi = g - zeta, bit-exactly. The principal value is discretized with the
// odd-offset midpoint rule periodized over the spectral domain (zero weight
// at k = k'); computed by direct k-space convolution, independent of the
// transform-of-truncation route it is checked against.
std::pair<Eigen::ArrayXcd, Eigen::ArrayXcd> plemelj_amplitudes(const SpectralPacket& packet);

struct SLClassification {
    GridField superluminal; // x >= c t
    GridField luminal;      // x < c t
    double s_norm2 = 0.0;
    double l_norm2 = 0.0;
};

SLClassification classify_sl(const GridField& field, double t, double c = 1.0);

struct CancellationReport {
    double phi_l_norm = 0.0;      // ||Phi^L(T)||
    double r_l_norm = 0.0;        // ||R^L(T)||
    double psi_l_norm = 0.0;      // ||Psi^L(T)||
    double residual = 0.0;        // ||Phi^L + R^L - Psi^L||
    double residual_over_phi = 0.0;
    double growth_factor = 0.0;   // ||Phi^L|| / ||Psi^L||
};

// Evolves the complete, truncated and residual packets to T and verifies the
// luminal-region cancellation. Throws "T too small" when the truncated
// luminal part has not yet grown a factor 10 past the complete packet's.
CancellationReport cancellation_check(const SpectralPacket& packet, double cut_x, double T);

// Fitted e-folding rate of ||Phi^L(t)|| over the given times (least squares
// on the log norm).
double luminal_growth_rate(const SpectralPacket& packet, double cut_x,
                           const std::vector<double>& times);

// Periodic-domain padding rule: the grid must be at least 4 (|v_g| + c) T
// long, with v_g taken at the spectral centroid. Throws on violation.
void require_padding(const SpectralPacket& packet, double T);

// Second-order leapfrog state for d^2 E/dt^2 = c^2 d^2 E/dx^2 + (c m)^2 E.
struct FDState {
    Grid1D grid;
    Eigen::ArrayXcd field_now;
    Eigen::ArrayXcd field_prev;
    double dt = 0.0;
    double mass_m = 0.0;
    double c = 1.0;
    double time = 0.0;
};

// CFL c dt/dx <= 1 enforced (equality allowed; it makes the massless
// advection exact). field_prev is the field at -dt.
FDState make_fd_state(const Grid1D& grid, Eigen::ArrayXcd field_now, Eigen::ArrayXcd field_prev,
                      double dt, double mass_m, double c = 1.0);

// Initializes the back-step from the packet's oscillatory part evaluated at
// -dt, which embeds the first-order spectral picture into the second-order
// equation and selects the forward branch.
FDState make_fd_state(const SpectralPacket& packet, double dt);

// Advances n_steps leapfrog steps with periodic boundaries. The stencil
// reaches one cell per step, so compactly supported data stays exactly zero
// beyond the discrete cone.
void fd_propagate(FDState& state, int n_steps);

GridField fd_field(const FDState& state);

enum class ArrivalMode { Centroid, Threshold };

struct ArrivalEstimate {
    double velocity = 0.0;
    double fit_residual = 0.0; // rms deviation of the position track, length units
};

// Least-squares velocity of a sequence of snapshots (>= 3), tracking either
// the intensity-weighted centroid or the rightmost threshold crossing.
ArrivalEstimate measure_arrival(const std::vector<GridField>& fields, ArrivalMode mode,
                                double threshold_fraction = 0.5);

// The c = 1 observability chain m^2 T >> k0^2/dk >> k0, reported as the two
// ratios; meaningful in normalized units only.
struct ArsP2Chain {
    double first_over_second = 0.0; // m^2 T / (k0^2/delta_k)
    double second_over_third = 0.0; // (k0^2/delta_k) / k0
};

ArsP2Chain ars_p2_chain(double mass_m, double T, double k0, double delta_k);

}  // namespace qsnp
