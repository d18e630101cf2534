#pragma once

#include <functional>
#include <vector>

namespace nlcurve {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7-15 integration of f over [a,b] to absolute
// tolerance abs_tol.  initial_splits lists interior points (e.g. kink
// locations) that seed the subdivision so discontinuities of f' sit at
// interval boundaries.  Worst-error-first bisection; deterministic.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_subdivisions = 2000,
                              const std::vector<double>& initial_splits = {});

} // namespace nlcurve
