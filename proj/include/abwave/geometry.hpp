#ifndef ABWAVE_GEOMETRY_HPP
#define ABWAVE_GEOMETRY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abwave/vec2.hpp"

namespace abwave {

struct Disk {
    Vec2 center;
    double radius = 1.0;
};

// vertices in counterclockwise order, strictly convex
struct ConvexPolygon {
    std::vector<Vec2> vertices;
};

// thickness 0 realizes an ideal two-sided mirror
struct Segment {
    Vec2 a, b;
    double thickness = 0.0;
};

struct Obstacle {
    std::variant<Disk, ConvexPolygon, Segment> shape;
    std::string id;

    void validate() const;
};

// distance from point to the obstacle boundary, negative inside
double signed_distance(const Obstacle& obs, const Vec2& p);

struct RayHit {
    Vec2 point;
    Vec2 normal;  // outward unit normal at the hit point
    double s = 0.0;
};

// nearest intersection of the ray p + s*dir (s > s_min) with the obstacle boundary
std::optional<RayHit> ray_intersect(const Obstacle& obs, const Vec2& p, const Vec2& dir,
                                    double s_min = 1e-9);

struct Domain {
    std::vector<Obstacle> obstacles;
    std::pair<Vec2, Vec2> bounding_box;  // (lower-left, upper-right)

    void validate() const;
    bool inside_box(const Vec2& p) const;
};

// distance to the nearest obstacle boundary, negative inside an obstacle
double signed_distance(const Domain& dom, const Vec2& p);

// closed polyline; the last point connects back to the first
struct Contour {
    std::vector<Vec2> points;

    void validate() const;
    double diameter() const;
};

// regular n-gon approximation of a circle, counterclockwise
Contour circle_contour(const Vec2& center, double radius, int n = 64);

// signed number of times the contour encircles the point, counterclockwise positive.
// Throws PointOnContour if the point lies on the polyline within tolerance.
int winding_number(const Contour& contour, const Vec2& point);

}  // namespace abwave

#endif
