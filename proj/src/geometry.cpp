#include "abwave/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abwave/errors.hpp"

namespace abwave {

namespace {

double dist_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = norm_sq(ab);
    double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + t * ab));
}

bool polygon_contains(const ConvexPolygon& poly, const Vec2& p) {
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        if (cross(b - a, p - a) < 0.0) return false;
    }
    return true;
}

std::optional<RayHit> ray_hit_circle(const Vec2& c, double r, const Vec2& p, const Vec2& dir,
                                     double s_min) {
    Vec2 d = p - c;
    double b = dot(d, dir);
    double disc = b * b - (norm_sq(d) - r * r);
    if (disc < 0.0) return std::nullopt;
    double sq = std::sqrt(disc);
    for (double s : {-b - sq, -b + sq}) {
        if (s > s_min) {
            Vec2 hit = p + s * dir;
            return RayHit{hit, normalized(hit - c), s};
        }
    }
    return std::nullopt;
}

// intersection with the open segment a-b; normal points against the incoming ray
std::optional<RayHit> ray_hit_segment(const Vec2& a, const Vec2& b, const Vec2& p,
                                      const Vec2& dir, double s_min) {
    Vec2 ab = b - a;
    double den = cross(dir, ab);
    if (std::fabs(den) < 1e-15) return std::nullopt;
    Vec2 ap = a - p;
    double s = cross(ap, ab) / den;
    double u = cross(ap, dir) / den;
    if (s <= s_min || u < 0.0 || u > 1.0) return std::nullopt;
    Vec2 n = normalized(perp(ab));
    if (dot(n, dir) > 0.0) n = -n;
    return RayHit{p + s * dir, n, s};
}

}  // namespace

void Obstacle::validate() const {
    if (const auto* d = std::get_if<Disk>(&shape)) {
        if (!(d->radius > 0.0)) throw std::invalid_argument("Disk radius must be > 0");
    } else if (const auto* poly = std::get_if<ConvexPolygon>(&shape)) {
        size_t n = poly->vertices.size();
        if (n < 3) throw std::invalid_argument("ConvexPolygon needs >= 3 vertices");
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = poly->vertices[i];
            const Vec2& b = poly->vertices[(i + 1) % n];
            const Vec2& c = poly->vertices[(i + 2) % n];
            if (cross(b - a, c - b) <= 0.0)
                throw std::invalid_argument("ConvexPolygon vertices must be strictly convex, counterclockwise");
        }
    } else if (const auto* seg = std::get_if<Segment>(&shape)) {
        if (seg->thickness < 0.0) throw std::invalid_argument("Segment thickness must be >= 0");
        if (norm(seg->b - seg->a) <= 0.0) throw std::invalid_argument("Segment endpoints coincide");
    }
}

double signed_distance(const Obstacle& obs, const Vec2& p) {
    if (const auto* d = std::get_if<Disk>(&obs.shape)) {
        return norm(p - d->center) - d->radius;
    }
    if (const auto* poly = std::get_if<ConvexPolygon>(&obs.shape)) {
        size_t n = poly->vertices.size();
        double dmin = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i)
            dmin = std::min(dmin, dist_to_segment(p, poly->vertices[i], poly->vertices[(i + 1) % n]));
        return polygon_contains(*poly, p) ? -dmin : dmin;
    }
    const auto& seg = std::get<Segment>(obs.shape);
    return dist_to_segment(p, seg.a, seg.b) - 0.5 * seg.thickness;
}

std::optional<RayHit> ray_intersect(const Obstacle& obs, const Vec2& p, const Vec2& dir,
                                    double s_min) {
    if (const auto* d = std::get_if<Disk>(&obs.shape)) {
        return ray_hit_circle(d->center, d->radius, p, dir, s_min);
    }
    if (const auto* poly = std::get_if<ConvexPolygon>(&obs.shape)) {
        std::optional<RayHit> best;
        size_t n = poly->vertices.size();
        for (size_t i = 0; i < n; ++i) {
            auto h = ray_hit_segment(poly->vertices[i], poly->vertices[(i + 1) % n], p, dir, s_min);
            if (h && (!best || h->s < best->s)) best = h;
        }
        if (best) {
            // outward normal of the convex hull edge
            if (polygon_contains(*poly, best->point + 1e-9 * best->normal)) best->normal = -best->normal;
        }
        return best;
    }
    const auto& seg = std::get<Segment>(obs.shape);
    if (seg.thickness <= 0.0) return ray_hit_segment(seg.a, seg.b, p, dir, s_min);
    // thick segment: capsule-free rectangle approximation via the two long faces and end caps
    Vec2 t = normalized(seg.b - seg.a);
    Vec2 n = perp(t) * (0.5 * seg.thickness);
    std::optional<RayHit> best;
    const Vec2 corners[4] = {seg.a + n, seg.b + n, seg.b - n, seg.a - n};
    for (int i = 0; i < 4; ++i) {
        auto h = ray_hit_segment(corners[i], corners[(i + 1) % 4], p, dir, s_min);
        if (h && (!best || h->s < best->s)) best = h;
    }
    return best;
}

void Domain::validate() const {
    const Vec2& lo = bounding_box.first;
    const Vec2& hi = bounding_box.second;
    if (!(lo.x1 < hi.x1 && lo.x2 < hi.x2))
        throw std::invalid_argument("Domain bounding box is degenerate");
    for (const auto& o : obstacles) o.validate();
    for (size_t i = 0; i < obstacles.size(); ++i) {
        for (size_t j = i + 1; j < obstacles.size(); ++j) {
            // disjoint closures: every obstacle is strictly outside every other
            Vec2 probe;
            if (const auto* d = std::get_if<Disk>(&obstacles[i].shape)) probe = d->center;
            else if (const auto* poly = std::get_if<ConvexPolygon>(&obstacles[i].shape)) probe = poly->vertices[0];
            else probe = std::get<Segment>(obstacles[i].shape).a;
            double sep = signed_distance(obstacles[j], probe);
            if (sep <= 0.0)
                throw std::invalid_argument("Domain obstacles " + obstacles[i].id + " and " +
                                            obstacles[j].id + " overlap");
            (void)sep;
        }
    }
    for (const auto& o : obstacles) {
        Vec2 ref;
        double extent = 0.0;
        if (const auto* d = std::get_if<Disk>(&o.shape)) { ref = d->center; extent = d->radius; }
        else if (const auto* poly = std::get_if<ConvexPolygon>(&o.shape)) {
            for (const auto& v : poly->vertices) {
                if (!(v.x1 > lo.x1 && v.x1 < hi.x1 && v.x2 > lo.x2 && v.x2 < hi.x2))
                    throw std::invalid_argument("obstacle " + o.id + " not strictly inside bounding box");
            }
            continue;
        } else {
            const auto& s = std::get<Segment>(o.shape);
            for (const Vec2& v : {s.a, s.b}) {
                if (!(v.x1 > lo.x1 && v.x1 < hi.x1 && v.x2 > lo.x2 && v.x2 < hi.x2))
                    throw std::invalid_argument("obstacle " + o.id + " not strictly inside bounding box");
            }
            continue;
        }
        if (!(ref.x1 - extent > lo.x1 && ref.x1 + extent < hi.x1 &&
              ref.x2 - extent > lo.x2 && ref.x2 + extent < hi.x2))
            throw std::invalid_argument("obstacle " + o.id + " not strictly inside bounding box");
    }
}

bool Domain::inside_box(const Vec2& p) const {
    return p.x1 >= bounding_box.first.x1 && p.x1 <= bounding_box.second.x1 &&
           p.x2 >= bounding_box.first.x2 && p.x2 <= bounding_box.second.x2;
}

double signed_distance(const Domain& dom, const Vec2& p) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& o : dom.obstacles) d = std::min(d, signed_distance(o, p));
    return d;
}

void Contour::validate() const {
    if (points.size() < 3) throw std::invalid_argument("Contour needs >= 3 points");
}

double Contour::diameter() const {
    Vec2 lo = points[0], hi = points[0];
    for (const auto& p : points) {
        lo.x1 = std::min(lo.x1, p.x1); lo.x2 = std::min(lo.x2, p.x2);
        hi.x1 = std::max(hi.x1, p.x1); hi.x2 = std::max(hi.x2, p.x2);
    }
    return norm(hi - lo);
}

Contour circle_contour(const Vec2& center, double radius, int n) {
    Contour c;
    c.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * M_PI * i / n;
        c.points.push_back(center + Vec2{radius * std::cos(a), radius * std::sin(a)});
    }
    return c;
}

int winding_number(const Contour& contour, const Vec2& point) {
    contour.validate();
    double tol = 1e-12 * contour.diameter();
    size_t n = contour.points.size();
    for (size_t i = 0; i < n; ++i) {
        if (dist_to_segment(point, contour.points[i], contour.points[(i + 1) % n]) < tol)
            throw PointOnContour("point lies on the contour polyline");
    }
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = contour.points[i] - point;
        Vec2 b = contour.points[(i + 1) % n] - point;
        total += std::atan2(cross(a, b), dot(a, b));
    }
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

}  // namespace abwave
