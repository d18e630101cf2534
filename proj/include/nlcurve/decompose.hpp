#pragma once

#include <nlcurve/geom.hpp>

namespace nlcurve {

struct LayerPiece {
    int layer_index; // n >= 1: points p with exactly n crossings on (z,p]
    Polyline piece;
    int sign;        // (-1)^(n+1)
};

struct LayerDecomposition {
    Frame frame;
    std::vector<LayerPiece> pieces;
    int max_layer = 0;
    // Segments collinear with a ray from z: zero angular measure, excluded
    // from the layer pieces, kept for diagnostics.
    std::vector<Segment> radial_segments;
};

// Angular sweep around z assigning each curve point its radial layer index
// (Proposition 4 decomposition).  Throws ZOnCurveError when z lies on the
// curve within tolerance.
LayerDecomposition radial_layers(const CurveSet& curve, Point z);

// Connected components, each returned as a singleton CurveSet.
std::vector<CurveSet> split_components(const CurveSet& curve);

struct SignedPiece {
    int sign;
    int layer_index;
    bool upper; // true if the piece lies in P+ of the frame
    Polyline piece;
};

// Steps 2-4 of the pipeline: radial layers, then half-plane clip per layer,
// then connected components.  Every piece is radial w.r.t. z, lies in one
// closed half-plane, and is connected.
std::vector<SignedPiece> decompose_full(const CurveSet& curve, const Frame& frame);

} // namespace nlcurve
