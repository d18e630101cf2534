#pragma once

#include <nlcurve/geom.hpp>
#include <nlcurve/special.hpp>

#include <cstdint>

namespace nlcurve {

struct OracleOptions {
    double theta_tolerance = 1e-8;
    int max_subdivisions = 4000;
    std::uint64_t perturbation_seed = 12345;
};

struct RayProfile {
    double finite = 0.0; // telescoped finite part of int_0^inf chi r^(-1-sigma) dr
    double head = 0.0;   // coefficient chi_0 of the divergent eps^(-sigma)/sigma term
};

// Radial profile of the definitional integrand along the ray at angle theta:
// chi is piecewise constant between crossing radii and the integral telescopes
// in closed form.  Throws DegenerateRayError for collinear / vertex-grazing
// rays (callers perturb theta).
RayProfile ray_profile(const CurveSet& curve, const Frame& frame, double theta, Sigma sigma);

// kappa_sigma by the definition: (1/2) int_0^pi [profile(theta) + profile(theta+pi)] dtheta
// with antipodal pairing so the divergent head coefficients cancel exactly
// (principal value).  Independent of the closed-form pipeline.
double kappa_oracle(const CurveSet& curve, const Frame& frame, Sigma sigma,
                    const OracleOptions& opts = {});

// Theorem 1 Part 1 polar formula for a single radial piece contained in one
// closed half-plane of the frame: +-(1/sigma) int rhat(theta)^(-sigma) dtheta.
// Throws NotRadialError if some sampled angle has >= 2 hits.
double kappa_radial_oracle(const Polyline& piece, const Frame& frame, Sigma sigma,
                           double theta_tolerance = 1e-10);

} // namespace nlcurve
