#include <nlcurve/oracle.hpp>

#include <nlcurve/quadrature.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace nlcurve {

namespace {

const double kPi = std::acos(-1.0);

// chi is s (-1)^j between crossing radii r_j and r_{j+1}, where
// s = sign(-(e . u)) is the value just past z; the radial integral of
// chi r^(-1-sigma) then telescopes.
RayProfile profile_from_hits(const std::vector<RayHit>& hits, double eu, double sg) {
    RayProfile out;
    if (std::fabs(eu) < 1e-15) return out; // boundary direction, measure zero
    const double s = eu < 0.0 ? 1.0 : -1.0;
    out.head = s;
    if (hits.empty()) return out;
    const auto chi = [&](std::size_t j) { return (j % 2 == 0) ? s : -s; };
    double f = -chi(0) * std::pow(hits[0].r, -sg) / sg;
    for (std::size_t j = 1; j < hits.size(); ++j)
        f += chi(j) * (std::pow(hits[j - 1].r, -sg) - std::pow(hits[j].r, -sg)) / sg;
    f += chi(hits.size()) * std::pow(hits.back().r, -sg) / sg;
    out.finite = f;
    return out;
}

} // namespace

RayProfile ray_profile(const CurveSet& curve, const Frame& frame, double theta, Sigma sigma) {
    const auto hits = ray_hits(frame.z, theta, curve);
    for (const auto& h : hits)
        if (h.near_vertex)
            throw DegenerateRayError("ray grazes a segment endpoint");
    const double eu = std::cos(theta) * frame.u.x() + std::sin(theta) * frame.u.y();
    return profile_from_hits(hits, eu, sigma.value());
}

double kappa_oracle(const CurveSet& curve, const Frame& frame, Sigma sigma,
                    const OracleOptions& opts) {
    if (curve.empty()) return 0.0;

    auto robust_profile = [&](double theta) {
        double t = theta;
        for (int attempt = 0;; ++attempt) {
            try {
                return ray_profile(curve, frame, t, sigma);
            } catch (const DegenerateRayError&) {
                if (attempt >= 8) throw;
                std::mt19937_64 rng(opts.perturbation_seed ^ std::bit_cast<std::uint64_t>(theta) ^
                                    static_cast<std::uint64_t>(attempt));
                std::uniform_real_distribution<double> nudge(0.5, 1.5);
                const double mag = 1e-9 * std::pow(10.0, attempt / 3);
                t = theta + (rng() % 2 ? 1.0 : -1.0) * mag * nudge(rng);
            }
        }
    };

    auto g = [&](double theta) {
        const RayProfile p1 = robust_profile(theta);
        const RayProfile p2 = robust_profile(theta + kPi);
        if (std::fabs(p1.head + p2.head) > 1e-8)
            throw PvMismatchError("paired divergent heads fail to cancel");
        return 0.5 * (p1.finite + p2.finite);
    };

    // Seed the subdivision with every vertex angle (mod pi) so the integrand's
    // kinks sit at interval boundaries, and with the direction perpendicular
    // to u, where the sign s = sign(-(e . u)) jumps.
    std::vector<double> splits;
    for (const auto& pl : curve.components) {
        for (const auto& v : pl.vertices) {
            double a = std::atan2(v.y - frame.z.y, v.x - frame.z.x);
            a = std::fmod(a + 2 * kPi, kPi);
            splits.push_back(a);
        }
    }
    splits.push_back(std::fmod(std::atan2(frame.u.y(), frame.u.x()) + kPi / 2 + 2 * kPi, kPi));
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end(),
                             [](double a, double b) { return b - a <= 1e-12; }),
                 splits.end());

    const QuadResult q = integrate_adaptive(g, 0.0, kPi, opts.theta_tolerance,
                                            opts.max_subdivisions, splits);
    return q.value;
}

double kappa_radial_oracle(const Polyline& piece, const Frame& frame, Sigma sigma,
                           double theta_tolerance) {
    if (piece.segment_count() < 1) return 0.0;

    // Work in frame coordinates; reflect lower-half pieces into the upper
    // half-plane and flip the sign (kappa(z,C,-u) = -kappa(z,C,u)).
    std::vector<Point> verts;
    double ymin = 0.0, ymax = 0.0;
    for (const auto& v : piece.vertices) {
        Point p = to_frame_coords(v, frame);
        // Snap clip-boundary vertices onto the axis so their angle is +pi,
        // not -pi: a stray -1e-16 would silently shrink the angular range.
        if (std::fabs(p.y) <= 1e-12 * std::max(1.0, norm(p))) p.y = 0.0;
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
        verts.push_back(p);
    }
    const double scale = std::max(1.0, norm(verts.front()));
    double sign = 1.0;
    if (ymin < -1e-9 * scale) {
        if (ymax > 1e-9 * scale)
            throw NotRadialError("piece straddles both half-planes of the frame");
        sign = -1.0;
        // The +0.0 keeps snapped boundary vertices at +0, not -0, so their
        // atan2 angle stays +pi.
        for (auto& p : verts) p.y = -p.y + 0.0;
    }

    CurveSet flat;
    flat.components.push_back(Polyline{verts});

    std::vector<double> angles;
    for (const auto& p : verts) angles.push_back(std::atan2(p.y, p.x));
    const double lo = *std::min_element(angles.begin(), angles.end());
    const double hi = *std::max_element(angles.begin(), angles.end());
    if (hi - lo <= 1e-12) return 0.0; // radial sliver: zero-measure support

    const double sg = sigma.value();
    auto integrand = [&](double theta) {
        const auto hits = ray_hits(Point{0, 0}, theta, flat);
        if (hits.empty()) return 0.0;
        if (hits.size() > 1) throw NotRadialError("piece is not radial w.r.t. z");
        return std::pow(hits[0].r, -sg);
    };

    std::sort(angles.begin(), angles.end());
    const QuadResult q =
        integrate_adaptive(integrand, lo, hi, theta_tolerance, 4000, angles);
    return sign * q.value / sg;
}

} // namespace nlcurve
