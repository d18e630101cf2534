#include <nlcurve/decompose.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace nlcurve {

namespace {

const double kPi = std::acos(-1.0);
const double kTwoPi = 2.0 * kPi;

struct FlatSeg {
    int component, segment;
    Point a, d; // origin-relative start and direction (b - a)
};

double point_segment_dist(Point p, const Segment& s) {
    const Point d = s.b - s.a;
    const double t = std::clamp(dot(p - s.a, d) / dot(d, d), 0.0, 1.0);
    return dist(p, s.a + t * d);
}

// Parameter along the segment where the line through the origin at angle
// `ang` meets it.
double param_at_angle(const FlatSeg& fs, double ang) {
    const Point e{std::cos(ang), std::sin(ang)};
    return cross(fs.a, e) / cross(e, fs.d);
}

struct WedgeHit {
    double r;
    int flat;
};

std::vector<WedgeHit> hits_at(const std::vector<FlatSeg>& segs, double ang) {
    const Point e{std::cos(ang), std::sin(ang)};
    std::vector<WedgeHit> out;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
        const FlatSeg& fs = segs[i];
        const double scale = std::max({norm(fs.a), norm(fs.d), 1.0});
        const double den = cross(e, fs.d);
        if (std::fabs(den) <= 1e-15 * scale) continue;
        const double r = cross(fs.a, fs.d) / den;
        const double s = cross(fs.a, e) / den;
        if (r > 1e-12 * scale && s >= -1e-12 && s <= 1.0 + 1e-12)
            out.push_back({r, i});
    }
    std::sort(out.begin(), out.end(), [](const WedgeHit& p, const WedgeHit& q) {
        if (p.r != q.r) return p.r < q.r;
        return p.flat < q.flat;
    });
    return out;
}

} // namespace

LayerDecomposition radial_layers(const CurveSet& curve, Point z) {
    LayerDecomposition out;
    out.frame = Frame{z, UnitVec(0.0, 1.0)};
    if (curve.empty()) return out;

    std::vector<FlatSeg> segs;
    for (int ci = 0; ci < static_cast<int>(curve.components.size()); ++ci) {
        const auto& pl = curve.components[ci];
        for (int si = 0; si < pl.segment_count(); ++si) {
            const Segment s = pl.segment(si);
            if (point_segment_dist(z, s) <= 1e-9)
                throw ZOnCurveError("radial_layers: z lies on the curve");
            const Point a = s.a - z;
            const Point d = s.b - s.a;
            if (std::fabs(cross(a, d)) <= kOrientEps * norm(d) * std::max(norm(a), 1.0)) {
                // Collinear with a ray from z: zero angular measure, excluded.
                out.radial_segments.push_back(s);
                continue;
            }
            segs.push_back({ci, si, a, d});
        }
    }
    if (segs.empty()) return out;

    // Event angles: every segment endpoint as seen from z.
    std::vector<double> events;
    for (const auto& fs : segs) {
        double t1 = std::atan2(fs.a.y, fs.a.x);
        double t2 = std::atan2(fs.a.y + fs.d.y, fs.a.x + fs.d.x);
        events.push_back(t1 < 0 ? t1 + kTwoPi : t1);
        events.push_back(t2 < 0 ? t2 + kTwoPi : t2);
    }
    std::sort(events.begin(), events.end());
    std::vector<double> evs;
    for (double e : events)
        if (evs.empty() || e - evs.back() > 1e-12) evs.push_back(e);
    if (evs.size() > 1 && evs.front() + kTwoPi - evs.back() <= 1e-12) evs.pop_back();

    // Sweep: within each wedge the radial order is fixed; the k-th nearest
    // segment piece belongs to layer k+1.
    struct Interval {
        int layer;
        double lo, hi;
    };
    std::map<int, std::vector<Interval>> per_seg; // flat index -> intervals

    const std::size_t nw = evs.size();
    for (std::size_t w = 0; w < nw; ++w) {
        const double a = evs[w];
        const double b = (w + 1 < nw) ? evs[w + 1] : evs[0] + kTwoPi;
        if (b - a <= 1e-12) continue;
        const double mid = 0.5 * (a + b);
        const auto hits = hits_at(segs, mid);
        for (int k = 0; k < static_cast<int>(hits.size()); ++k) {
            const FlatSeg& fs = segs[hits[k].flat];
            double sa = std::clamp(param_at_angle(fs, a), 0.0, 1.0);
            double sb = std::clamp(param_at_angle(fs, b), 0.0, 1.0);
            if (sa > sb) std::swap(sa, sb);
            if (sb - sa <= 1e-13) continue;
            per_seg[hits[k].flat].push_back({k + 1, sa, sb});
        }
    }

    // Merge adjacent intervals per segment/layer, then stitch pieces across
    // shared endpoints when the layer index matches.
    Polyline current;
    int current_layer = 0;
    auto flush = [&]() {
        if (current.vertices.size() >= 2) {
            out.pieces.push_back({current_layer, current, current_layer % 2 == 1 ? 1 : -1});
            out.max_layer = std::max(out.max_layer, current_layer);
        }
        current.vertices.clear();
    };
    auto emit = [&](const FlatSeg& fs, int layer, double lo, double hi) {
        const Point p = z + fs.a + lo * fs.d;
        const Point q = z + fs.a + hi * fs.d;
        const double scale = std::max(norm(q - z), 1.0);
        if (layer == current_layer && !current.vertices.empty() &&
            dist(current.vertices.back(), p) <= 1e-9 * scale) {
            current.vertices.push_back(q);
        } else {
            flush();
            current_layer = layer;
            current.vertices = {p, q};
        }
    };

    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
        auto it = per_seg.find(i);
        if (it == per_seg.end()) continue;
        auto& ivs = it->second;
        std::sort(ivs.begin(), ivs.end(), [](const Interval& p, const Interval& q) {
            if (p.lo != q.lo) return p.lo < q.lo;
            return p.hi < q.hi;
        });
        std::vector<Interval> merged;
        for (const auto& iv : ivs) {
            if (!merged.empty() && merged.back().layer == iv.layer &&
                iv.lo - merged.back().hi <= 1e-9) {
                merged.back().hi = std::max(merged.back().hi, iv.hi);
            } else {
                merged.push_back(iv);
            }
        }
        for (const auto& iv : merged) emit(segs[i], iv.layer, iv.lo, iv.hi);
    }
    flush();
    return out;
}

std::vector<CurveSet> split_components(const CurveSet& curve) {
    std::vector<CurveSet> out;
    for (const auto& pl : curve.components) {
        if (pl.segment_count() < 1) continue;
        CurveSet c;
        c.components.push_back(pl);
        out.push_back(c);
    }
    return out;
}

std::vector<SignedPiece> decompose_full(const CurveSet& curve, const Frame& frame) {
    const LayerDecomposition layers = radial_layers(curve, frame.z);
    std::vector<SignedPiece> out;
    for (const auto& lp : layers.pieces) {
        CurveSet single;
        single.components.push_back(lp.piece);
        auto [up, lo] = halfplane_clip(single, frame);
        for (const auto& part : split_components(up))
            out.push_back({lp.sign, lp.layer_index, true, part.components[0]});
        for (const auto& part : split_components(lo))
            out.push_back({lp.sign, lp.layer_index, false, part.components[0]});
    }
    return out;
}

} // namespace nlcurve
