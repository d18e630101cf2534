#include <nlcurve/geom.hpp>

#include <algorithm>
#include <cmath>

namespace nlcurve {

UnitVec::UnitVec(double x, double y) : x_(x), y_(y) {
    if (std::fabs(x * x + y * y - 1.0) > 1e-12)
        throw ValidationError("UnitVec: coordinates are not unit length");
}

UnitVec UnitVec::normalized(double x, double y) {
    const double n = std::hypot(x, y);
    if (n == 0.0) throw ValidationError("unit vector must be nonzero");
    return UnitVec(x / n, y / n);
}

UnitVec UnitVec::rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    double nx = c * x_ - s * y_;
    double ny = s * x_ + c * y_;
    const double n = std::hypot(nx, ny);
    return UnitVec(nx / n, ny / n);
}

double Polyline::length() const {
    double total = 0.0;
    for (int i = 0; i < segment_count(); ++i) total += segment(i).length();
    return total;
}

double CurveSet::length() const {
    double total = 0.0;
    for (const auto& pl : components) total += pl.length();
    return total;
}

bool CurveSet::empty() const {
    for (const auto& pl : components)
        if (pl.segment_count() > 0) return false;
    return true;
}

std::vector<Segment> CurveSet::all_segments() const {
    std::vector<Segment> out;
    for (const auto& pl : components)
        for (int i = 0; i < pl.segment_count(); ++i) out.push_back(pl.segment(i));
    return out;
}

namespace {

double seg_scale(const Segment& s) {
    return std::max({std::fabs(s.a.x), std::fabs(s.a.y), std::fabs(s.b.x), std::fabs(s.b.y), 1.0});
}

// -1 / 0 / +1 orientation of c relative to the directed line a->b, with a
// relative epsilon on the determinant.
int orient(Point a, Point b, Point c) {
    const double det = cross(b - a, c - a);
    const double scale = std::max({norm(b - a), norm(c - a), 1.0});
    if (std::fabs(det) <= kOrientEps * scale * scale) return 0;
    return det > 0.0 ? 1 : -1;
}

bool on_segment_box(Point a, Point b, Point c) {
    const double eps = kOrientEps * std::max({seg_scale({a, b}), 1.0});
    return c.x >= std::min(a.x, b.x) - eps && c.x <= std::max(a.x, b.x) + eps &&
           c.y >= std::min(a.y, b.y) - eps && c.y <= std::max(a.y, b.y) + eps;
}

enum class Meet { none, proper, touch };

Meet segments_meet(const Segment& s1, const Segment& s2) {
    const int d1 = orient(s2.a, s2.b, s1.a);
    const int d2 = orient(s2.a, s2.b, s1.b);
    const int d3 = orient(s1.a, s1.b, s2.a);
    const int d4 = orient(s1.a, s1.b, s2.b);
    if (d1 * d2 < 0 && d3 * d4 < 0) return Meet::proper;
    if (d1 == 0 && on_segment_box(s2.a, s2.b, s1.a)) return Meet::touch;
    if (d2 == 0 && on_segment_box(s2.a, s2.b, s1.b)) return Meet::touch;
    if (d3 == 0 && on_segment_box(s1.a, s1.b, s2.a)) return Meet::touch;
    if (d4 == 0 && on_segment_box(s1.a, s1.b, s2.b)) return Meet::touch;
    return Meet::none;
}

bool is_closed(const Polyline& pl) {
    if (pl.vertices.size() < 3) return false;
    const double scale = std::max(norm(pl.vertices.front()), 1.0);
    return dist(pl.vertices.front(), pl.vertices.back()) <= 1e-9 * scale;
}

} // namespace

void validate_polyline(const Polyline& pl) {
    if (pl.vertices.size() < 2)
        throw ValidationError("polyline needs at least 2 vertices");
    for (std::size_t i = 0; i + 1 < pl.vertices.size(); ++i) {
        if (dist(pl.vertices[i], pl.vertices[i + 1]) == 0.0)
            throw ValidationError("polyline has coincident consecutive vertices");
    }
    const int n = pl.segment_count();
    const bool closed = is_closed(pl);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (closed && i == 0 && j == n - 1);
            const Meet m = segments_meet(pl.segment(i), pl.segment(j));
            if (m == Meet::proper)
                throw ValidationError("polyline is self-intersecting");
            if (m == Meet::touch && !adjacent)
                throw ValidationError("polyline touches itself at a non-adjacent segment");
        }
    }
}

void validate_curveset(const CurveSet& curve) {
    for (const auto& pl : curve.components) validate_polyline(pl);
    const int nc = static_cast<int>(curve.components.size());
    for (int ci = 0; ci < nc; ++ci) {
        for (int cj = ci + 1; cj < nc; ++cj) {
            const auto& a = curve.components[ci];
            const auto& b = curve.components[cj];
            for (int i = 0; i < a.segment_count(); ++i)
                for (int j = 0; j < b.segment_count(); ++j)
                    if (segments_meet(a.segment(i), b.segment(j)) != Meet::none)
                        throw ValidationError("curve components are not pairwise disjoint");
        }
    }
}

Point to_frame_coords(Point p, const Frame& frame) {
    const Point d = p - frame.z;
    const UnitVec up = frame.u.perp_cw();
    return {dot(d, up.as_point()), dot(d, frame.u.as_point())};
}

Point from_frame_coords(Point p, const Frame& frame) {
    const UnitVec up = frame.u.perp_cw();
    return frame.z + p.x * up.as_point() + p.y * frame.u.as_point();
}

std::pair<CurveSet, CurveSet> halfplane_clip(const CurveSet& curve, const Frame& frame) {
    CurveSet upper, lower;
    const Point u = frame.u.as_point();

    for (const auto& pl : curve.components) {
        Polyline cur_up, cur_lo;
        auto flush = [&](Polyline& chain, CurveSet& dst) {
            if (chain.vertices.size() >= 2) dst.components.push_back(chain);
            chain.vertices.clear();
        };
        auto append = [&](Polyline& chain, Point a, Point b, CurveSet& dst) {
            if (dist(a, b) <= 1e-15) return;
            if (!chain.vertices.empty() && dist(chain.vertices.back(), a) <= 1e-12 * std::max(norm(a), 1.0)) {
                chain.vertices.push_back(b);
            } else {
                flush(chain, dst);
                chain.vertices = {a, b};
            }
        };

        for (int i = 0; i < pl.segment_count(); ++i) {
            const Segment s = pl.segment(i);
            const double eps = kOrientEps * std::max(seg_scale(s), norm(frame.z));
            const double da = dot(s.a - frame.z, u);
            const double db = dot(s.b - frame.z, u);
            if (std::fabs(da) <= eps && std::fabs(db) <= eps) {
                // Lies on the split line: zero contribution, discard.
                flush(cur_up, upper);
                flush(cur_lo, lower);
                continue;
            }
            if (da > eps && db < -eps) {
                const double t = da / (da - db);
                const Point c = s.a + t * (s.b - s.a);
                append(cur_up, s.a, c, upper);
                append(cur_lo, c, s.b, lower);
            } else if (da < -eps && db > eps) {
                const double t = da / (da - db);
                const Point c = s.a + t * (s.b - s.a);
                append(cur_lo, s.a, c, lower);
                append(cur_up, c, s.b, upper);
            } else if (da > eps || db > eps) {
                append(cur_up, s.a, s.b, upper);
            } else {
                append(cur_lo, s.a, s.b, lower);
            }
        }
        flush(cur_up, upper);
        flush(cur_lo, lower);
    }
    return {upper, lower};
}

std::vector<RayHit> ray_hits(Point origin, double theta, const CurveSet& curve) {
    const Point e{std::cos(theta), std::sin(theta)};
    std::vector<RayHit> hits;
    for (int ci = 0; ci < static_cast<int>(curve.components.size()); ++ci) {
        const auto& pl = curve.components[ci];
        for (int si = 0; si < pl.segment_count(); ++si) {
            const Segment seg = pl.segment(si);
            const Point a = seg.a - origin;
            const Point d = seg.b - seg.a;
            const double scale = std::max({norm(a), norm(d), 1.0});
            const double den = cross(e, d);
            if (std::fabs(den) <= kOrientEps * scale) {
                // Parallel; collinear and overlapping the positive ray => degenerate.
                if (std::fabs(cross(e, a)) <= kOrientEps * scale) {
                    const double ta = dot(a, e);
                    const double tb = dot(a + d, e);
                    if (std::max(ta, tb) > kOrientEps * scale)
                        throw DegenerateRayError("ray collinear with a curve segment");
                }
                continue;
            }
            const double r = cross(a, d) / den;
            const double s = cross(a, e) / den;
            if (r > 1e-12 * scale && s >= -1e-12 && s <= 1.0 + 1e-12) {
                RayHit h;
                h.r = r;
                h.component = ci;
                h.segment = si;
                h.s = std::clamp(s, 0.0, 1.0);
                h.near_vertex = (s < 1e-9 || s > 1.0 - 1e-9);
                hits.push_back(h);
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const RayHit& p, const RayHit& q) {
        if (p.r != q.r) return p.r < q.r;
        if (p.component != q.component) return p.component < q.component;
        return p.segment < q.segment;
    });
    return hits;
}

Parity crossing_parity(Point x, Point y, const CurveSet& curve) {
    if (dist(x, y) == 0.0)
        throw ValidationError("crossing_parity: x and y must differ");
    int count = 0;
    for (const auto& pl : curve.components) {
        for (int i = 0; i < pl.segment_count(); ++i) {
            const Segment s = pl.segment(i);
            const int d1 = orient(x, y, s.a);
            const int d2 = orient(x, y, s.b);
            const int d3 = orient(s.a, s.b, x);
            const int d4 = orient(s.a, s.b, y);
            if (d1 * d2 < 0 && d3 * d4 < 0) {
                ++count;
                continue;
            }
            // Any touching configuration is non-transversal.
            if ((d1 == 0 && on_segment_box(x, y, s.a)) ||
                (d2 == 0 && on_segment_box(x, y, s.b)) ||
                (d3 == 0 && on_segment_box(s.a, s.b, x)) ||
                (d4 == 0 && on_segment_box(s.a, s.b, y)))
                return Parity::degenerate;
        }
    }
    return count % 2 == 1 ? Parity::odd : Parity::even;
}

} // namespace nlcurve
