#include <nlcurve/segment_kappa.hpp>

#include <cmath>

namespace nlcurve {

namespace {

const double kPi = std::acos(-1.0);

// Foot of the perpendicular from the origin onto the supporting line.
Point foot_of_perpendicular(const Segment& seg) {
    const Point d = seg.b - seg.a;
    const double t = -dot(seg.a, d) / dot(d, d);
    return seg.a + t * d;
}

} // namespace

double perp_angle(const Segment& seg) {
    const Point q = foot_of_perpendicular(seg);
    const double len = seg.length();
    if (norm(q) < 1e-9 * len)
        throw OnExtensionError("origin lies on the segment's supporting line");
    double thp = std::atan2(q.y, q.x);
    if (thp <= -kPi / 2) thp += 2 * kPi;
    return thp;
}

double kappa_halfplane_segment(const Segment& seg, Sigma sigma) {
    const double sg = sigma.value();
    const Point q = foot_of_perpendicular(seg);
    const double len = seg.length();
    if (norm(q) < 1e-9 * len) return 0.0; // z on L_e: kappa = 0 by definition
    const double thp = std::atan2(q.y, q.x);
    // Endpoint angles relative to theta_perp, branch-cut safe: for a segment
    // with z off its supporting line both offsets lie in (-pi/2, pi/2).
    double d1 = std::remainder(std::atan2(seg.a.y, seg.a.x) - thp, 2 * kPi);
    double d2 = std::remainder(std::atan2(seg.b.y, seg.b.x) - thp, 2 * kPi);
    if (d1 > d2) std::swap(d1, d2);
    const Point m = 0.5 * (seg.a + seg.b);
    const double rm = norm(m);
    const double dm = std::remainder(std::atan2(m.y, m.x) - thp, 2 * kPi);
    const double sec = 1.0 / std::cos(dm); // > 0: |theta_m - theta_perp| < pi/2
    return std::pow(sec, sg) / (sg * std::pow(rm, sg)) *
           (psi_sigma(std::sin(d2), sigma) - psi_sigma(std::sin(d1), sigma));
}

double kappa_segment(const Segment& seg, const Frame& frame, Sigma sigma) {
    const Point a = to_frame_coords(seg.a, frame);
    const Point b = to_frame_coords(seg.b, frame);
    const Point d = b - a;
    const double len = norm(d);
    // z on the supporting line => exact zero.
    if (std::fabs(cross(a, d)) < 1e-12 * len * std::max(norm(a), norm(b)))
        return 0.0;
    if (a.y >= 0.0 && b.y >= 0.0)
        return kappa_halfplane_segment({a, b}, sigma);
    if (a.y <= 0.0 && b.y <= 0.0)
        return -kappa_halfplane_segment({{a.x, -a.y}, {b.x, -b.y}}, sigma);
    // Straddles y = 0: split at the crossing; the lower piece is reflected and
    // negated via kappa(z,C,-u) = -kappa(z,C,u).
    const double t = a.y / (a.y - b.y);
    const Point c{a.x + t * d.x, 0.0};
    if (a.y > 0.0)
        return kappa_halfplane_segment({a, c}, sigma) -
               kappa_halfplane_segment({c, {b.x, -b.y}}, sigma);
    return -kappa_halfplane_segment({{a.x, -a.y}, c}, sigma) +
           kappa_halfplane_segment({c, b}, sigma);
}

} // namespace nlcurve
