#include <nlcurve/io.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlcurve {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        // Try shorter forms that still round-trip.
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[40];
            std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
            std::sscanf(shorter, "%lf", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

CurveSpec parse_curve_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("malformed JSON: ") + err.what());
    }
    CurveSpec spec;
    try {
        if (!doc.contains("components") || !doc["components"].is_array() ||
            doc["components"].empty())
            throw ValidationError("curve spec needs a non-empty 'components' array");
        for (const auto& comp : doc["components"]) {
            const std::string type = comp.at("type").get<std::string>();
            if (type == "polyline") {
                Polyline pl;
                for (const auto& pt : comp.at("points")) {
                    if (!pt.is_array() || pt.size() != 2)
                        throw ValidationError("polyline points must be [x,y] pairs");
                    pl.vertices.push_back({pt[0].get<double>(), pt[1].get<double>()});
                }
                if (pl.vertices.size() < 2)
                    throw ValidationError("polyline needs at least 2 points");
                spec.components.push_back(pl);
            } else if (type == "catalog") {
                CatalogComponent cc;
                cc.name = comp.at("name").get<std::string>();
                for (const auto& p : comp.at("params")) cc.params.push_back(p.get<double>());
                spec.components.push_back(cc);
            } else {
                throw ValidationError("unknown component type '" + type + "'");
            }
        }
        if (doc.contains("holder_exponent"))
            spec.holder_exponent = doc["holder_exponent"].get<double>();
    } catch (const json::exception& err) {
        throw ValidationError(std::string("invalid curve spec: ") + err.what());
    }
    return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open curve spec '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_curve_spec(ss.str());
}

std::string curveset_to_json(const CurveSet& curve) {
    std::string out = "{\"components\":[";
    for (std::size_t c = 0; c < curve.components.size(); ++c) {
        if (c) out += ",";
        out += "{\"type\":\"polyline\",\"points\":[";
        const auto& vs = curve.components[c].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ",";
            out += "[" + format_double(vs[i].x) + "," + format_double(vs[i].y) + "]";
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

CurveSet build_curveset(const CurveSpec& spec, int spline_n) {
    CurveSet out;
    for (const auto& comp : spec.components) {
        if (std::holds_alternative<Polyline>(comp)) {
            out.components.push_back(std::get<Polyline>(comp));
        } else {
            const auto& cc = std::get<CatalogComponent>(comp);
            ParametricCurve pc = catalog(cc.name, cc.params);
            if (spec.holder_exponent) pc.holder_exponent = *spec.holder_exponent;
            out.components.push_back(interpolate(pc, spline_n).polyline);
        }
    }
    return out;
}

} // namespace nlcurve
