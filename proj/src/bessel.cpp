#include "qsnp/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "qsnp/constants.hpp"

namespace qsnp {

namespace {

// Crossover between the two branches. The asymptotic series truncated at its
// smallest term has relative error O(e^{-2y}); 18 keeps that below 1e-15,
// while the power series stays fully converged (all terms positive, no
// cancellation) at any argument. Both branches agree to < 1e-13 across
// [15, 25], checked in the unit tests.
constexpr double kSeriesCut = 18.0;

double i0_power_series(double y)
{
    const double q = 0.25 * y * y;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Sum of the asymptotic series without the e^y/sqrt(2 pi y) prefactor,
// truncated at its smallest term.
double i0_asymptotic_sum(double y)
{
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double odd = 2.0 * k + 1.0;
        const double next = term * odd * odd / (8.0 * y * (k + 1.0));
        if (next >= term) break;  // asymptotic series started diverging
        term = next;
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

}  // namespace

double bessel_i0(double y)
{
    y = std::abs(y);  // I0 is even
    if (y > 700.0)
        throw std::overflow_error("bessel_i0: argument " + std::to_string(y) +
                                  " exceeds 700, result overflows double range");
    if (y < kSeriesCut) return i0_power_series(y);
    return std::exp(y) / std::sqrt(2.0 * constants::pi * y) * i0_asymptotic_sum(y);
}

double bessel_i0_scaled(double y)
{
    y = std::abs(y);
    if (y < kSeriesCut) return std::exp(-y) * i0_power_series(y);
    return i0_asymptotic_sum(y) / std::sqrt(2.0 * constants::pi * y);
}

}  // namespace qsnp
