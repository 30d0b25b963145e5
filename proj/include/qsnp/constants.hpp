#pragma once

// Physical constants in Gaussian CGS units. All formulas in the library are
// written for CGS inputs (cm, s, erg, statC); the wavepacket module also runs
// in a normalized mode with c = 1.

namespace qsnp::constants {

inline constexpr double c_light = 2.99792458e10;       // cm/s
inline constexpr double hbar = 1.054571817e-27;        // erg s
inline constexpr double electron_charge = 4.80320471257e-10;  // statC
inline constexpr double electron_mass = 9.1093837015e-28;     // g

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double sqrt_pi = 1.7724538509055160273;

}  // namespace qsnp::constants
