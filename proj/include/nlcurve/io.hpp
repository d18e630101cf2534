#pragma once

#include <nlcurve/pipeline.hpp>
#include <nlcurve/spline.hpp>

#include <string>
#include <variant>
#include <vector>

namespace nlcurve {

struct CatalogComponent {
    std::string name;
    std::vector<double> params;
};

struct CurveSpec {
    std::vector<std::variant<Polyline, CatalogComponent>> components;
    std::optional<double> holder_exponent;
};

// Parses the JSON curve-spec document.  Throws ValidationError with the JSON
// parser's line/column on malformed input.
CurveSpec parse_curve_spec(const std::string& json_text);
CurveSpec load_curve_spec(const std::string& path);

// Serialization round-trip for polyline curve sets (bit-exact coordinates).
std::string curveset_to_json(const CurveSet& curve);

// Realizes a spec: polylines pass through, catalog entries are splined at n.
CurveSet build_curveset(const CurveSpec& spec, int spline_n);

// Shortest decimal representation that round-trips a double.
std::string format_double(double v);

} // namespace nlcurve
