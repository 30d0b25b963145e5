#pragma once

// Shared construction helpers for physically consistent test media.

#include <cmath>

#include "qsnp/constants.hpp"
#include "qsnp/medium.hpp"

namespace qsnp_test {

// Medium with a prescribed collective decay time tau_R at a given atom count:
// the dipole is solved from tau_RAD = N_T tau_R.
inline qsnp::MediumParams medium_with_tau_r(double tau_R, double atom_count, double length_L,
                                            double area_S = 0.01, double omega0 = 2.4e15)
{
    using namespace qsnp::constants;
    const double tau_rad = atom_count * tau_R;
    const double d = std::sqrt(area_S * hbar * c_light / (2.0 * pi * omega0 * tau_rad));
    const double density = atom_count / (area_S * length_L);
    return qsnp::MediumParams(qsnp::TransitionSpec::from_dipole(omega0, d), density, 1.0,
                              length_L, area_S);
}

}  // namespace qsnp_test
