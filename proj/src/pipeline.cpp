#include <nlcurve/pipeline.hpp>

#include <nlcurve/segment_kappa.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <random>
#include <thread>

namespace nlcurve {

namespace {

double point_segment_dist(Point p, const Segment& s) {
    const Point d = s.b - s.a;
    const double t = std::clamp(dot(p - s.a, d) / dot(d, d), 0.0, 1.0);
    return dist(p, s.a + t * d);
}

double distance_to_curve(Point z, const CurveSet& curve) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : curve.all_segments())
        best = std::min(best, point_segment_dist(z, s));
    return best;
}

// Directions from z to the far endpoints of every segment containing z.
// u is admissible when these directions do not strictly separate it: for an
// interior point this reduces to exact normality; at a vertex it accepts any
// direction in the corner's normal cone.
void check_normal(Point z, const UnitVec& u, const CurveSet& curve) {
    std::vector<Point> dirs;
    for (const auto& s : curve.all_segments()) {
        if (point_segment_dist(z, s) > 1e-9) continue;
        for (Point end : {s.a, s.b}) {
            const double d = dist(end, z);
            if (d > 1e-9) dirs.push_back((1.0 / d) * (end - z));
        }
    }
    bool pos = false, neg = false;
    for (const auto& w : dirs) {
        const double d = dot(u.as_point(), w);
        if (d > 1e-9) pos = true;
        if (d < -1e-9) neg = true;
    }
    if (pos && neg)
        throw InvalidNormalError("u is not an admissible normal at the on-curve point z");
}

// Step 1: remove the open disk B_rho(z) by clipping every segment at its
// exact circle intersections.
CurveSet remove_disk(const CurveSet& curve, Point z, double rho) {
    CurveSet out;
    for (const auto& pl : curve.components) {
        Polyline chain;
        auto flush = [&]() {
            if (chain.vertices.size() >= 2) out.components.push_back(chain);
            chain.vertices.clear();
        };
        auto append = [&](Point a, Point b) {
            if (dist(a, b) <= 1e-12) return;
            if (!chain.vertices.empty() && dist(chain.vertices.back(), a) <= 1e-12)
                chain.vertices.push_back(b);
            else {
                flush();
                chain.vertices = {a, b};
            }
        };
        for (int i = 0; i < pl.segment_count(); ++i) {
            const Segment s = pl.segment(i);
            const Point a = s.a - z;
            const Point d = s.b - s.a;
            const double A = dot(d, d);
            const double B = dot(a, d);
            const double C = dot(a, a) - rho * rho;
            const double disc = B * B - A * C;
            double t1 = 1.0, t2 = 0.0; // inside-disk parameter interval
            if (disc > 0.0) {
                const double sq = std::sqrt(disc);
                t1 = (-B - sq) / A;
                t2 = (-B + sq) / A;
            }
            t1 = std::clamp(t1, 0.0, 1.0);
            t2 = std::clamp(t2, 0.0, 1.0);
            if (t2 <= t1) { // segment entirely outside the disk
                append(s.a, s.b);
                continue;
            }
            if (t1 > 0.0) append(s.a, s.a + t1 * d);
            else flush();
            if (t2 < 1.0) {
                flush();
                append(s.a + t2 * d, s.b);
            } else {
                flush();
            }
        }
        flush();
    }
    return out;
}

double piece_kappa(const Polyline& piece, const Frame& frame, Sigma sigma) {
    double total = 0.0;
    for (int i = 0; i < piece.segment_count(); ++i)
        total += kappa_segment(piece.segment(i), frame, sigma);
    return total;
}

KappaReport run_once(const CurveSet& curve, const Frame& frame, Sigma sigma,
                     const PipelineOptions& opts) {
    KappaReport report;
    CurveSet working = curve;

    if (distance_to_curve(frame.z, working) <= 1e-9) {
        check_normal(frame.z, frame.u, working);
        double rho;
        if (opts.rho) {
            rho = *opts.rho;
            if (!(rho > 0.0)) throw ValidationError("rho must be positive");
        } else {
            double far = 0.0;
            for (const auto& pl : working.components)
                for (const auto& v : pl.vertices) far = std::max(far, dist(v, frame.z));
            rho = 0.05 * far;
        }
        working = remove_disk(working, frame.z, rho);
        report.removed_rho = rho;
    }

    const auto pieces = decompose_full(working, frame);

    std::vector<double> contrib(pieces.size(), 0.0);
    const int threads = std::min<int>(max_threads(), static_cast<int>(pieces.size()));
    if (threads > 1 && pieces.size() > 8) {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t) {
            futs.push_back(std::async(std::launch::async, [&]() {
                for (std::size_t i = next.fetch_add(1); i < pieces.size(); i = next.fetch_add(1))
                    contrib[i] = piece_kappa(pieces[i].piece, frame, sigma);
            }));
        }
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < pieces.size(); ++i)
            contrib[i] = piece_kappa(pieces[i].piece, frame, sigma);
    }

    int idx = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& pc = pieces[i];
        PieceContribution row;
        row.sign = pc.sign;
        row.piece_id = "n=" + std::to_string(pc.layer_index) + (pc.upper ? "/P+/" : "/P-/") +
                       std::to_string(idx++);
        row.contribution = contrib[i];
        report.per_piece.push_back(row);
        report.value += pc.sign * contrib[i];
    }
    return report;
}

} // namespace

int max_threads() {
    if (const char* env = std::getenv("NLCURVE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

KappaReport kappa_polyline(const CurveSet& curve, const Frame& frame, Sigma sigma,
                           const PipelineOptions& opts) {
    validate_curveset(curve);
    if (curve.empty()) return {};
    try {
        return run_once(curve, frame, sigma, opts);
    } catch (const InvalidNormalError&) {
        throw;
    } catch (const GeometryError& err) {
        // Retry once with a tiny deterministic frame rotation.
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> mag(0.5, 1.5);
        const double angle = (rng() % 2 ? 1.0 : -1.0) * 1e-10 * mag(rng);
        Frame rotated{frame.z, frame.u.rotated(angle)};
        KappaReport report = run_once(curve, rotated, sigma, opts);
        report.warnings.push_back(std::string("degeneracy (") + err.what() +
                                  "); retried with a 1e-10 frame rotation");
        return report;
    }
}

KappaReport kappa_parametric(const std::vector<ParametricCurve>& curves, const Frame& frame,
                             Sigma sigma, const PipelineOptions& opts) {
    KappaReport pre;
    CurveSet curve;
    for (const auto& pc : curves) {
        if (sigma.value() >= pc.holder_exponent)
            pre.warnings.push_back("sigma >= claimed Holder exponent of '" + pc.name +
                                   "'; Theorem 1 hypothesis a > sigma is violated");
        curve.components.push_back(interpolate(pc, opts.spline_n).polyline);
    }
    try {
        validate_curveset(curve);
    } catch (const ValidationError& err) {
        throw ValidationError(std::string(err.what()) +
                              " (interpolant self-intersection: try a larger spline n)");
    }
    KappaReport report = kappa_polyline(curve, frame, sigma, opts);
    report.warnings.insert(report.warnings.begin(), pre.warnings.begin(), pre.warnings.end());
    return report;
}

} // namespace nlcurve
