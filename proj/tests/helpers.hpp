#pragma once

#include <nlcurve/geom.hpp>
#include <nlcurve/quadrature.hpp>

#include <cmath>
#include <random>

namespace nlcurve::testing {

inline const double kPi = std::acos(-1.0);

// Regular n-gon inscribed in the circle of radius r about c (closed polyline).
inline Polyline circle_polyline(int n, Point c = {0, 0}, double r = 1.0) {
    Polyline pl;
    for (int k = 0; k <= n; ++k) {
        const double t = 2 * kPi * k / n;
        pl.vertices.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
    }
    return pl;
}

inline CurveSet single_segment(Point a, Point b) {
    CurveSet c;
    c.components.push_back(Polyline{{a, b}});
    return c;
}

// Exact kappa_sigma of the full circle of radius R at an on-circle point with
// outward normal: -(2^-sigma / sigma) sqrt(pi) Gamma((1-sigma)/2) / Gamma(1-sigma/2).
inline double circle_reference(double sigma, double R = 1.0) {
    const double g1 = std::tgamma((1.0 - sigma) / 2.0);
    const double g2 = std::tgamma(1.0 - sigma / 2.0);
    return -(std::pow(2.0, -sigma) / sigma) * std::sqrt(kPi) * g1 / g2 * std::pow(R, -sigma);
}

// Arc polyline (open), for piece-level tests.
inline Polyline arc_polyline(Point c, double r, double t0, double t1, int n) {
    Polyline pl;
    for (int k = 0; k <= n; ++k) {
        const double t = t0 + (t1 - t0) * k / n;
        pl.vertices.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
    }
    return pl;
}

inline CurveSet spiral_curve(int n = 400, double c = 0.2, double t0 = kPi / 2,
                             double t1 = kPi / 2 + 4 * kPi) {
    Polyline pl;
    for (int k = 0; k <= n; ++k) {
        const double t = t0 + (t1 - t0) * k / n;
        pl.vertices.push_back({c * t * std::cos(t), c * t * std::sin(t)});
    }
    CurveSet out;
    out.components.push_back(pl);
    return out;
}

} // namespace nlcurve::testing
