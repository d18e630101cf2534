#pragma once

#include <nlcurve/errors.hpp>

#include <cmath>
#include <utility>
#include <vector>

namespace nlcurve {

inline constexpr double kOrientEps = 1e-12;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point p, Point q) { return norm(p - q); }

// Direction on the unit circle; constructor enforces |x^2+y^2-1| <= 1e-12.
class UnitVec {
  public:
    UnitVec(double x, double y);
    static UnitVec normalized(double x, double y); // rejects the zero vector
    double x() const { return x_; }
    double y() const { return y_; }
    Point as_point() const { return {x_, y_}; }
    UnitVec negated() const { return UnitVec(-x_, -y_); }
    // Clockwise quarter turn, the paper's u_perp.
    UnitVec perp_cw() const { return UnitVec(y_, -x_); }
    UnitVec rotated(double angle) const;

  private:
    double x_, y_;
};

struct Segment {
    Point a, b;
    double length() const { return dist(a, b); }
};

struct Polyline {
    std::vector<Point> vertices;
    int segment_count() const { return static_cast<int>(vertices.size()) - 1; }
    Segment segment(int i) const { return {vertices[i], vertices[i + 1]}; }
    double length() const;
};

struct CurveSet {
    std::vector<Polyline> components;
    double length() const;
    bool empty() const;
    std::vector<Segment> all_segments() const;
};

// Validates the Polyline invariants (>= 2 vertices, distinct consecutive
// vertices, simple) and throws ValidationError on violation.
void validate_polyline(const Polyline& pl);

// Validates every component and pairwise disjointness between components.
void validate_curveset(const CurveSet& curve);

struct Frame {
    Point z;
    UnitVec u{0.0, 1.0};
};

// Translate by -z, rotate so u lands on (0,1); u_perp (clockwise) lands on (1,0).
Point to_frame_coords(Point p, const Frame& frame);
Point from_frame_coords(Point p, const Frame& frame);

// Split the curve at the line {p : (p - z) . u = 0}; returns (C+, C-).
// Segments lying on the line (both endpoints within eps) are discarded.
std::pair<CurveSet, CurveSet> halfplane_clip(const CurveSet& curve, const Frame& frame);

struct RayHit {
    double r;          // distance from the origin along the ray, r > 0
    int component;     // component index within the CurveSet
    int segment;       // segment index within the component
    double s;          // parameter along the segment, in [0,1]
    bool near_vertex;  // hit within eps of a segment endpoint
};

// Intersections of the open ray {origin + r e_theta : r > 0} with the curve,
// sorted ascending by r.  Throws DegenerateRayError when the ray is collinear
// with a positive-length portion of some segment.
std::vector<RayHit> ray_hits(Point origin, double theta, const CurveSet& curve);

enum class Parity { odd, even, degenerate };

// Parity of transversal crossings of the open segment (x,y) with the curve;
// degenerate when the segment touches a vertex or runs along a curve segment.
Parity crossing_parity(Point x, Point y, const CurveSet& curve);

} // namespace nlcurve
