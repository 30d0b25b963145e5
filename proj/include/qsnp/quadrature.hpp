#pragma once

#include <functional>
#include <vector>

namespace qsnp {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
// Bisects the interval with the largest |K15 - G7| estimate until the summed
// estimate meets max(abs_tol, rel_tol * |value|) or max_intervals is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-10, double abs_tol = 0.0,
                           int max_intervals = 4000);

// Same, with the integration range pre-split at the given interior points
// (integrable kinks, step edges). Points outside (a, b) are ignored.
QuadratureResult integrate_split(const std::function<double(double)>& f, double a, double b,
                                 const std::vector<double>& breakpoints,
                                 double rel_tol = 1e-10, double abs_tol = 0.0,
                                 int max_intervals = 4000);

}  // namespace qsnp
