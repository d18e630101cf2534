#pragma once

#include <nlcurve/decompose.hpp>
#include <nlcurve/special.hpp>
#include <nlcurve/spline.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace nlcurve {

struct PipelineOptions {
    std::optional<double> rho; // Step 1 disk radius; default 0.05 x max dist(z, curve)
    int spline_n = 256;
    bool diagnostics = false;
    std::uint64_t seed = 12345;
};

struct PieceContribution {
    int sign;
    std::string piece_id; // e.g. "n=2/P+/0"
    double contribution;  // unsigned kappa of the piece
};

struct KappaReport {
    double value = 0.0;
    std::vector<PieceContribution> per_piece;
    std::optional<double> removed_rho;
    std::vector<std::string> warnings;
};

// Steps 1-6 for a polyline curve: disk removal when z is on the curve
// (u must be an admissible normal there), full decomposition, closed-form
// segment sums.  Retries once with a 1e-10 frame rotation on geometric
// degeneracy; rethrows if the retry also fails.
KappaReport kappa_polyline(const CurveSet& curve, const Frame& frame, Sigma sigma,
                           const PipelineOptions& opts = {});

// Spline each parametric curve at opts.spline_n, union, delegate to
// kappa_polyline.  Warns (does not fail) when sigma >= claimed Holder exponent.
KappaReport kappa_parametric(const std::vector<ParametricCurve>& curves, const Frame& frame,
                             Sigma sigma, const PipelineOptions& opts = {});

// Maximum parallelism for per-piece work: NLCURVE_THREADS if set, else
// hardware concurrency.
int max_threads();

} // namespace nlcurve
