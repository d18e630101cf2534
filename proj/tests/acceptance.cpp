// Acceptance gate: runs the eight primary criteria and prints one PASS/FAIL
// line each.  With no arguments all criteria run; with numeric arguments only
// the listed ones run.  Exit status = number of failed criteria among those run.
//
// Criteria 5 and 7 are implemented faithfully but are expected to fail; see
// the notes in README.md ("Acceptance status") for the analysis.

#include <nlcurve/io.hpp>
#include <nlcurve/oracle.hpp>
#include <nlcurve/pipeline.hpp>
#include <nlcurve/quadrature.hpp>
#include <nlcurve/segment_kappa.hpp>

#include "helpers.hpp"

#include <cstdio>
#include <random>
#include <set>
#include <string>

using namespace nlcurve;
using namespace nlcurve::testing;

namespace {

bool criterion1() {
    // Lemma 1 identities vs adaptive quadrature on a 50 x 5 grid, <= 1e-10.
    double maxerr = 0.0;
    for (double sv : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const Sigma sigma(sv);
        for (int i = 0; i <= 50; ++i) {
            {
                const double z = kPi * i / 50.0;
                const double a = std::min(z, kPi / 2), b = std::max(z, kPi / 2);
                double ref =
                    integrate_adaptive([&](double t) { return std::pow(std::sin(t), sv); }, a, b,
                                       1e-12, 4000)
                        .value;
                if (z < kPi / 2) ref = -ref;
                maxerr = std::max(maxerr, std::fabs(integral_sin_pow(z, sigma) - ref));
            }
            {
                const double z = -kPi / 2 + kPi * i / 50.0;
                const double a = std::min(z, 0.0), b = std::max(z, 0.0);
                double ref =
                    integrate_adaptive([&](double t) { return std::pow(std::cos(t), sv); }, a, b,
                                       1e-12, 4000)
                        .value;
                if (z < 0.0) ref = -ref;
                maxerr = std::max(maxerr, std::fabs(integral_cos_pow(z, sigma) - ref));
            }
        }
    }
    std::printf("  max |identity - quadrature| = %.3e\n", maxerr);
    return maxerr <= 1e-10;
}

bool criterion2() {
    // 500 random (segment, frame, sigma) instances: closed form vs oracle.
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    const double sigmas[] = {0.25, 0.5, 0.75};
    double maxrel = 0.0;
    int done = 0;
    for (int i = 0; done < 500; ++i) {
        const Segment seg{{d(rng), d(rng)}, {d(rng), d(rng)}};
        if (seg.length() < 0.05) continue;
        const Frame fr{{d(rng), d(rng)}, UnitVec::normalized(d(rng), d(rng) + 0.1)};
        const Point dd = seg.b - seg.a;
        // Skip frames whose z sits inside the closed form's 1e-9 L_e cutoff.
        if (std::fabs(cross(fr.z - seg.a, dd)) / norm(dd) < 1e-8) continue;
        const Sigma s(sigmas[done % 3]);
        const double closed = kappa_segment(seg, fr, s);
        OracleOptions oo;
        oo.theta_tolerance = 1e-9;
        const double oracle = kappa_oracle(single_segment(seg.a, seg.b), fr, s, oo);
        const double err = std::fabs(closed - oracle) / std::max(1.0, std::fabs(oracle));
        maxrel = std::max(maxrel, err);
        if (err > 1e-6) {
            std::printf("  worst instance #%d: closed=%.12g oracle=%.12g\n", done, closed, oracle);
            return false;
        }
        ++done;
    }
    std::printf("  500 instances, max deviation = %.3e\n", maxrel);
    return true;
}

bool criterion3() {
    const Sigma s(0.5);
    bool ok = true;

    // Proposition 2: half-plane additivity.
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    double worst2 = 0.0;
    for (int i = 0; i < 25; ++i) {
        Polyline pl;
        const double bx = d(rng), by = d(rng);
        pl.vertices = {{bx, by}, {bx + 1, by + 0.4}, {bx + 1.3, by + 1.5}, {bx + 0.2, by + 2.2}};
        CurveSet c;
        c.components.push_back(pl);
        const Frame f{{d(rng), d(rng)}, UnitVec::normalized(d(rng), d(rng) + 0.1)};
        double whole;
        try {
            whole = kappa_polyline(c, f, s).value;
        } catch (const std::exception&) {
            continue;
        }
        auto [up, lo] = halfplane_clip(c, f);
        const double parts = kappa_polyline(up, f, s).value + kappa_polyline(lo, f, s).value;
        worst2 = std::max(worst2, std::fabs(whole - parts) / std::max(1.0, std::fabs(whole)));
    }
    std::printf("  Prop 2 worst deviation = %.3e\n", worst2);
    ok = ok && worst2 <= 1e-10;

    // Proposition 3: disjoint radial additivity, 100 star-shaped instances.
    std::uniform_real_distribution<double> rr(0.5, 2.0), a0(0.0, 2 * kPi);
    double worst3 = 0.0;
    for (int inst = 0; inst < 100; ++inst) {
        const Point z{d(rng), d(rng)};
        Polyline star;
        const double start = a0(rng);
        for (int k = 0; k <= 12; ++k) {
            const double t = start + 5.0 * k / 12;
            const double r = rr(rng);
            star.vertices.push_back({z.x + r * std::cos(t), z.y + r * std::sin(t)});
        }
        const Frame f{z, UnitVec::normalized(d(rng), d(rng) + 0.1)};
        CurveSet c;
        c.components.push_back(star);
        const double whole = kappa_polyline(c, f, s).value;
        Polyline p1, p2;
        const int cut = 4 + inst % 5;
        p1.vertices.assign(star.vertices.begin(), star.vertices.begin() + cut + 1);
        p2.vertices.assign(star.vertices.begin() + cut, star.vertices.end());
        CurveSet c1, c2;
        c1.components.push_back(p1);
        c2.components.push_back(p2);
        const double parts = kappa_polyline(c1, f, s).value + kappa_polyline(c2, f, s).value;
        worst3 = std::max(worst3, std::fabs(whole - parts) / std::max(1.0, std::fabs(whole)));
    }
    std::printf("  Prop 3 worst deviation (100 instances) = %.3e\n", worst3);
    ok = ok && worst3 <= 1e-10;

    // Proposition 4: two-turn spiral alternating sum vs the oracle.
    const Frame f{{0, 0}, UnitVec(0.0, 1.0)};
    const CurveSet spiral = spiral_curve(400);
    const double pipeline = kappa_polyline(spiral, f, s).value;
    OracleOptions oo;
    oo.theta_tolerance = 1e-10;
    const double dev4 = std::fabs(pipeline - kappa_oracle(spiral, f, s, oo));
    std::printf("  Prop 4 spiral |pipeline - oracle| = %.3e\n", dev4);
    ok = ok && dev4 <= 2e-9;
    return ok;
}

bool criterion4() {
    const Sigma s(0.5);
    bool ok = true;

    // u-negation antisymmetry end to end, 1e-12.
    const CurveSet spiral = spiral_curve(150);
    const Frame f{{0.3, -0.2}, UnitVec::normalized(1.0, 2.0)};
    const double a = kappa_polyline(spiral, f, s).value;
    const double b = kappa_polyline(spiral, Frame{f.z, f.u.negated()}, s).value;
    std::printf("  |kappa(u) + kappa(-u)| = %.3e\n", std::fabs(a + b));
    ok = ok && std::fabs(a + b) <= 1e-12 * std::max(1.0, std::fabs(a));

    // Isometry invariance, 1e-10.
    const double ang = 0.83;
    const Point shift{1.7, -2.4};
    const double c = std::cos(ang), sn = std::sin(ang);
    auto rot = [&](Point p) {
        return Point{c * p.x - sn * p.y + shift.x, sn * p.x + c * p.y + shift.y};
    };
    CurveSet moved;
    for (const auto& pl : spiral.components) {
        Polyline m;
        for (const auto& v : pl.vertices) m.vertices.push_back(rot(v));
        moved.components.push_back(m);
    }
    const Frame fm{rot(f.z), UnitVec::normalized(c * f.u.x() - sn * f.u.y(),
                                                 sn * f.u.x() + c * f.u.y())};
    const double am = kappa_polyline(moved, fm, s).value;
    std::printf("  isometry deviation = %.3e\n", std::fabs(am - a));
    ok = ok && std::fabs(am - a) <= 1e-10 * std::max(1.0, std::fabs(a));

    // z on L_e => exact zero; empty curve => exact zero.
    const double on_ext = kappa_segment({{1, 1}, {3, 3}}, Frame{{0, 0}, UnitVec(0.0, 1.0)}, s);
    const double empty = kappa_polyline(CurveSet{}, f, s).value;
    std::printf("  z-on-extension value = %g, empty-curve value = %g\n", on_ext, empty);
    ok = ok && on_ext == 0.0 && empty == 0.0;
    return ok;
}

bool criterion5() {
    // Unit circle, z at the center, sigma = 0.5, n sweep:
    // |kappa_n - kappa_oracle| strictly decreasing and <= 1e-3 at n = 512.
    const Sigma s(0.5);
    const Frame center{{0, 0}, UnitVec(0.0, 1.0)};
    const std::vector<ParametricCurve> circle = {catalog("circle", {0, 0, 1})};
    CurveSet finest;
    finest.components.push_back(interpolate(circle[0], 512).polyline);
    OracleOptions oo;
    oo.theta_tolerance = 1e-10;
    const double oracle = kappa_oracle(finest, center, s, oo);
    std::printf("  kappa_oracle (I_512) = %.6e\n", oracle);
    bool decreasing = true;
    double prev = 1e300, final_dev = 0.0;
    for (int n : {16, 32, 64, 128, 256, 512}) {
        PipelineOptions opts;
        opts.spline_n = n;
        const double v = kappa_parametric(circle, center, s, opts).value;
        const double dev = std::fabs(v - oracle);
        std::printf("  n=%4d  kappa=%.6e  |kappa - oracle|=%.6e\n", n, v, dev);
        if (dev >= prev) decreasing = false;
        prev = dev;
        final_dev = dev;
    }
    return decreasing && final_dev <= 1e-3;
}

bool criterion6() {
    // Unit circle, z on the circle, u outward, sigma = 0.5: joint (n up, rho down)
    // sweep; |kappa_{n,rho} - kappa_oracle| decreasing, final <= 1e-2.  The
    // reference is the independent quadrature oracle on the finest sweep spline
    // (principal-value pairing handles the on-curve z directly).
    const Sigma s(0.5);
    const Frame f{{1, 0}, UnitVec(1.0, 0.0)};
    const std::vector<ParametricCurve> circle = {catalog("circle", {0, 0, 1})};
    CurveSet finest;
    finest.components.push_back(interpolate(circle[0], 512).polyline);
    OracleOptions oo;
    oo.theta_tolerance = 1e-9;
    const double oracle = kappa_oracle(finest, f, s, oo);
    std::printf("  kappa_oracle (I_512, on-curve PV) = %.6e\n", oracle);
    bool decreasing = true;
    double prev = 1e300, final_dev = 0.0;
    double rho = 0.1;
    for (int n : {32, 64, 128, 256, 512}) {
        PipelineOptions opts;
        opts.spline_n = n;
        opts.rho = rho;
        const double v = kappa_parametric(circle, f, s, opts).value;
        const double dev = std::fabs(v - oracle);
        std::printf("  n=%4d rho=%.5f  kappa=%.6e  dev=%.6e\n", n, rho, v, dev);
        if (dev >= prev) decreasing = false;
        prev = dev;
        final_dev = dev;
        rho /= 2.0;
    }
    return decreasing && final_dev <= 1e-2;
}

bool criterion7() {
    // Classical-limit trend: | |(1-sigma) kappa_sigma| - 1 | decreasing in
    // magnitude along sigma in {0.5, 0.9, 0.99} for on-curve z.
    const Frame f{{1, 0}, UnitVec(1.0, 0.0)};
    const std::vector<ParametricCurve> circle = {catalog("circle", {0, 0, 1})};
    PipelineOptions opts;
    opts.spline_n = 1024;
    opts.rho = 0.005; // below the chord length: Step 1 removes only the two zero segments
    double prev = 1e300;
    bool decreasing = true;
    for (double sv : {0.5, 0.9, 0.99}) {
        const double v = kappa_parametric(circle, f, Sigma(sv), opts).value;
        const double trend = std::fabs(std::fabs((1.0 - sv) * v) - 1.0);
        std::printf("  sigma=%.2f  kappa=%.6e  |(1-sigma)|kappa|| - 1| = %.6e\n", sv, v, trend);
        if (trend >= prev) decreasing = false;
        prev = trend;
    }
    return decreasing;
}

bool criterion8() {
    // Fig. 4 six-piece topology: signs (+,+,-,+,+,+) and per-piece equality.
    const Frame f{{0, 0}, UnitVec(0.0, 1.0)};
    const Sigma s(0.5);
    const double deg = kPi / 180.0;
    std::vector<Polyline> q = {
        arc_polyline({0, 0}, 2.0, 10 * deg, 40 * deg, 24),   // Q1: P+, layer 1
        arc_polyline({0, 0}, 1.0, 105 * deg, 137 * deg, 24), // Q2: layer 1
        arc_polyline({0, 0}, 2.0, 110 * deg, 130 * deg, 24), // Q3: behind Q2, layer 2
        arc_polyline({0, 0}, 3.0, 115 * deg, 125 * deg, 24), // Q4: layer 3
        arc_polyline({0, 0}, 1.5, 150 * deg, 170 * deg, 24), // Q5: layer 1
        arc_polyline({0, 0}, 1.2, -80 * deg, -40 * deg, 24), // Q6: P-, layer 1
    };
    CurveSet curve;
    for (const auto& pl : q) curve.components.push_back(pl);

    const auto pieces = decompose_full(curve, f);
    if (pieces.size() != 6) {
        std::printf("  expected 6 pieces, got %zu\n", pieces.size());
        return false;
    }
    const int expected_signs[6] = {+1, +1, -1, +1, +1, +1};
    // Identify each piece by its midpoint radius/angle.
    bool signs_ok = true;
    int found[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& piece : pieces) {
        const Point m = piece.piece.vertices[piece.piece.vertices.size() / 2];
        int which = -1;
        double best = 1e300;
        for (int i = 0; i < 6; ++i) {
            const Point qm = q[i].vertices[q[i].vertices.size() / 2];
            if (dist(m, qm) < best) {
                best = dist(m, qm);
                which = i;
            }
        }
        ++found[which];
        std::printf("  piece ~ Q%d: sign %+d (expected %+d)\n", which + 1, piece.sign,
                    expected_signs[which]);
        signs_ok = signs_ok && piece.sign == expected_signs[which];
    }
    for (int i = 0; i < 6; ++i) signs_ok = signs_ok && found[i] == 1;

    // Pipeline total equals the signed sum of per-piece runs to 1e-12.
    const double total = kappa_polyline(curve, f, s).value;
    double signed_sum = 0.0;
    for (int i = 0; i < 6; ++i) {
        CurveSet alone;
        alone.components.push_back(q[i]);
        signed_sum += expected_signs[i] * kappa_polyline(alone, f, s).value;
    }
    std::printf("  total=%.15g  signed per-piece sum=%.15g  diff=%.3e\n", total, signed_sum,
                std::fabs(total - signed_sum));
    return signs_ok && std::fabs(total - signed_sum) <= 1e-12 * std::max(1.0, std::fabs(total));
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        bool (*run)();
    };
    const Criterion all[] = {
        {1, "special-function identities (Lemma 1 grid, 1e-10)", criterion1},
        {2, "segment closed form vs oracle (500 instances, 1e-6)", criterion2},
        {3, "decomposition identities (Props 2/3/4)", criterion3},
        {4, "sign and symmetry (antisymmetry, isometry, exact zeros)", criterion4},
        {5, "Theorem 1 convergence, circle center", criterion5},
        {6, "on-curve convergence (joint n/rho sweep)", criterion6},
        {7, "classical-limit trend (sigma -> 1)", criterion7},
        {8, "Fig. 4 six-piece structural test", criterion8},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        std::printf("criterion %d: %s\n", c.id, c.name);
        const bool ok = c.run();
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
        if (!ok) ++failures;
    }
    return failures;
}
