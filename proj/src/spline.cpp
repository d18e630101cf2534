#include <nlcurve/spline.hpp>

#include <cmath>

namespace nlcurve {

namespace {
const double kPi = std::acos(-1.0);

void require_params(const std::string& name, const std::vector<double>& params, std::size_t want) {
    if (params.size() != want)
        throw ValidationError("catalog curve '" + name + "' expects " + std::to_string(want) +
                              " parameters, got " + std::to_string(params.size()));
}
} // namespace

SplineResult interpolate(const ParametricCurve& curve, int n) {
    if (n < 1) throw ValidationError("interpolate: n must be >= 1");
    if (!(curve.beta > curve.alpha)) throw ValidationError("interpolate: empty parameter domain");
    SplineResult out;
    out.n = n;
    for (int k = 0; k <= n; ++k) {
        const double t = curve.alpha + (curve.beta - curve.alpha) * k / n;
        out.partition.push_back(t);
        const Point p = curve.eval(t);
        if (out.polyline.vertices.empty() || dist(out.polyline.vertices.back(), p) > 0.0)
            out.polyline.vertices.push_back(p);
    }
    if (out.polyline.vertices.size() < 2)
        throw ValidationError("interpolate: degenerate curve (all samples coincide)");
    return out;
}

ParametricCurve catalog(const std::string& name, const std::vector<double>& params) {
    ParametricCurve c;
    c.name = name;
    if (name == "circle") {
        require_params(name, params, 3);
        const double cx = params[0], cy = params[1], r = params[2];
        if (!(r > 0.0)) throw ValidationError("circle: radius must be positive");
        c.alpha = 0.0;
        c.beta = 2 * kPi;
        c.eval = [=](double t) { return Point{cx + r * std::cos(t), cy + r * std::sin(t)}; };
    } else if (name == "arc") {
        require_params(name, params, 5);
        const double cx = params[0], cy = params[1], r = params[2];
        if (!(r > 0.0)) throw ValidationError("arc: radius must be positive");
        if (!(params[4] > params[3])) throw ValidationError("arc: need t1 > t0");
        c.alpha = params[3];
        c.beta = params[4];
        c.eval = [=](double t) { return Point{cx + r * std::cos(t), cy + r * std::sin(t)}; };
    } else if (name == "ellipse") {
        require_params(name, params, 4);
        const double cx = params[0], cy = params[1], ea = params[2], eb = params[3];
        if (!(ea > 0.0) || !(eb > 0.0)) throw ValidationError("ellipse: semi-axes must be positive");
        c.alpha = 0.0;
        c.beta = 2 * kPi;
        c.eval = [=](double t) { return Point{cx + ea * std::cos(t), cy + eb * std::sin(t)}; };
    } else if (name == "graph_poly") {
        if (params.size() < 3)
            throw ValidationError("graph_poly: need [x0, x1, c0, c1, ...]");
        if (!(params[1] > params[0])) throw ValidationError("graph_poly: need x1 > x0");
        const std::vector<double> coef(params.begin() + 2, params.end());
        c.alpha = params[0];
        c.beta = params[1];
        c.eval = [coef](double t) {
            double y = 0.0;
            for (std::size_t i = coef.size(); i-- > 0;) y = y * t + coef[i];
            return Point{t, y};
        };
    } else if (name == "graph_sin") {
        require_params(name, params, 4);
        if (!(params[1] > params[0])) throw ValidationError("graph_sin: need x1 > x0");
        const double amp = params[2], freq = params[3];
        c.alpha = params[0];
        c.beta = params[1];
        c.eval = [=](double t) { return Point{t, amp * std::sin(freq * t)}; };
    } else if (name == "spiral") {
        require_params(name, params, 3);
        const double cc = params[0];
        if (cc == 0.0) throw ValidationError("spiral: coefficient must be nonzero");
        if (!(params[2] > params[1])) throw ValidationError("spiral: need t1 > t0");
        c.alpha = params[1];
        c.beta = params[2];
        c.eval = [=](double t) { return Point{cc * t * std::cos(t), cc * t * std::sin(t)}; };
    } else {
        throw ValidationError("unknown catalog curve '" + name + "'");
    }
    return c;
}

} // namespace nlcurve
