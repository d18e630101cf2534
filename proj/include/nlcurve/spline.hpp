#pragma once

#include <nlcurve/geom.hpp>

#include <functional>
#include <string>

namespace nlcurve {

struct ParametricCurve {
    double alpha = 0.0;
    double beta = 1.0;
    std::function<Point(double)> eval;
    double holder_exponent = 1.0; // claimed C^{1,a} exponent, a in (0,1]
    std::string name = "curve";
};

struct SplineResult {
    Polyline polyline;
    int n = 0;
    std::vector<double> partition; // t_k = alpha + k (beta-alpha)/n
};

// Linear interpolating spline I_n(C) on the uniform partition.  Consecutive
// duplicate samples are merged; throws ValidationError if all coincide.
SplineResult interpolate(const ParametricCurve& curve, int n);

// Built-in curves:
//   circle     [cx, cy, R]                      domain [0, 2pi]
//   arc        [cx, cy, R, t0, t1]              domain [t0, t1]
//   ellipse    [cx, cy, a, b]                   domain [0, 2pi]
//   graph_poly [x0, x1, c0, c1, ...]            t -> (t, sum_i c_i t^i)
//   graph_sin  [x0, x1, amp, freq]              t -> (t, amp sin(freq t))
//   spiral     [c, t0, t1]                      t -> c t (cos t, sin t)
// Throws ValidationError for unknown names or invalid parameters.
ParametricCurve catalog(const std::string& name, const std::vector<double>& params);

} // namespace nlcurve
