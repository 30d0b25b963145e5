#pragma once

namespace qsnp {

// Modified Bessel function of the first kind, order zero.
//
// Power series below the crossover, asymptotic expansion
//   I0(y) ~ e^y/sqrt(2 pi y) * (1 + 1/(8y) + 9/(128 y^2) + ...)
// above it. Relative error < 1e-12 on [0, 700]; arguments beyond 700
// overflow double range and throw std::overflow_error.
double bessel_i0(double y);

// exp(-|y|) * I0(y); never overflows. Used where I0^2 appears inside
// integrands that would otherwise exceed double range.
double bessel_i0_scaled(double y);

}  // namespace qsnp
