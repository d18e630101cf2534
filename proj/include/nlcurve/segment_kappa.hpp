#pragma once

#include <nlcurve/geom.hpp>
#include <nlcurve/special.hpp>

namespace nlcurve {

// Angle of the foot of the perpendicular from the origin to the segment's
// supporting line, mapped into (-pi/2, 3pi/2].  Frame coordinates.
// Throws OnExtensionError when the origin lies on the line.
double perp_angle(const Segment& seg);

// Closed-form kappa_sigma of a segment contained in the closed upper
// half-plane y >= 0 (frame coordinates, z at the origin, u = +y):
//   sec^sigma(theta_m - theta_perp) / (sigma r_m^sigma)
//     * (Psi(sin(theta2 - theta_perp)) - Psi(sin(theta1 - theta_perp))).
// Returns 0 when the origin lies on the supporting line.
double kappa_halfplane_segment(const Segment& seg, Sigma sigma);

// kappa_sigma of an arbitrary segment relative to an arbitrary frame:
// transform to frame coordinates, split at y = 0, apply the half-plane
// formula above (the lower piece reflected and negated via
// kappa(z,C,-u) = -kappa(z,C,u)).
double kappa_segment(const Segment& seg, const Frame& frame, Sigma sigma);

} // namespace nlcurve
