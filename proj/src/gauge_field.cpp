#include "abwave/gauge_field.hpp"

#include <cmath>

#include "abwave/errors.hpp"
#include "abwave/quadrature.hpp"

namespace abwave {

namespace {

constexpr double kCenterTol = 1e-12;

Vec2 numeric_grad(const std::function<double(const Vec2&)>& f, const Vec2& x, double h = 1e-6) {
    return {(f({x.x1 + h, x.x2}) - f({x.x1 - h, x.x2})) / (2.0 * h),
            (f({x.x1, x.x2 + h}) - f({x.x1, x.x2 - h})) / (2.0 * h)};
}

// centers of all flux terms, for winding reports
Vec2 obstacle_ref_point(const Obstacle& o) {
    if (const auto* d = std::get_if<Disk>(&o.shape)) return d->center;
    if (const auto* poly = std::get_if<ConvexPolygon>(&o.shape)) {
        Vec2 c{0, 0};
        for (const auto& v : poly->vertices) c += v;
        return c * (1.0 / poly->vertices.size());
    }
    const auto& s = std::get<Segment>(o.shape);
    return (s.a + s.b) * 0.5;
}

}  // namespace

Vec2 canonical_flux_potential(const FluxTerm& term, const PhysicalConstants& constants,
                              const Vec2& x) {
    Vec2 d = x - term.center;
    double r2 = norm_sq(d);
    if (r2 < kCenterTol * kCenterTol)
        throw EvaluationAtCenter("vector potential evaluated at a flux-term center");
    double scale = term.flux / constants.flux_coupling() / (2.0 * M_PI) / r2;
    return {-d.x2 * scale, d.x1 * scale};
}

Vec2 GaugeField::A(const Vec2& x) const {
    Vec2 a{0.0, 0.0};
    for (const auto& t : flux_terms) {
        if (t.flux != 0.0) a += canonical_flux_potential(t, constants, x);
    }
    if (smooth_term) a += smooth_term(x);
    if (gauge_phase) {
        Vec2 g = gauge_phase_grad ? gauge_phase_grad(x) : numeric_grad(gauge_phase, x);
        a += g * (1.0 / constants.flux_coupling());
    }
    return a;
}

double GaugeField::V(const Vec2& x, double t) const {
    return scalar_potential ? scalar_potential(x, t) : 0.0;
}

FluxReport line_integral_flux(const GaugeField& field, const Contour& contour,
                              const Domain* domain) {
    contour.validate();
    if (domain) {
        size_t n = contour.points.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = contour.points[i];
            const Vec2& b = contour.points[(i + 1) % n];
            int steps = std::max(2, static_cast<int>(norm(b - a) / 0.01));
            for (int s = 0; s <= steps; ++s) {
                Vec2 p = a + (b - a) * (static_cast<double>(s) / steps);
                if (signed_distance(*domain, p) <= 0.0)
                    throw ContourIntersectsObstacle("contour meets an obstacle");
            }
        }
    }
    for (const auto& t : field.flux_terms) {
        size_t n = contour.points.size();
        for (size_t i = 0; i < n; ++i) {
            Vec2 a = contour.points[i], b = contour.points[(i + 1) % n];
            Vec2 ab = b - a;
            double len2 = norm_sq(ab);
            double u = len2 > 0 ? std::clamp(dot(t.center - a, ab) / len2, 0.0, 1.0) : 0.0;
            if (norm(t.center - (a + u * ab)) < 1e-9)
                throw ContourIntersectsObstacle("contour passes through a flux-term center");
        }
    }

    FluxReport rep;
    rep.contour = contour;
    size_t n = contour.points.size();
    double total = 0.0;
    double seg_tol = 1e-11 / n;
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = contour.points[i], b = contour.points[(i + 1) % n];
        Vec2 d = b - a;
        total += adaptive_integrate(
            [&](double u) { return dot(field.A(a + u * d), d); }, 0.0, 1.0, seg_tol);
    }
    rep.flux = field.constants.flux_coupling() * total;
    for (const auto& t : field.flux_terms)
        rep.per_obstacle[t.obstacle_id] = winding_number(contour, t.center);
    return rep;
}

double segment_flux(const GaugeField& field, const Vec2& a, const Vec2& b) {
    Vec2 d = b - a;
    double v = adaptive_integrate([&](double u) { return dot(field.A(a + u * d), d); }, 0.0,
                                  1.0, 1e-12);
    return field.constants.flux_coupling() * v;
}

double half_line_flux(const GaugeField& field, const Vec2& x, const Vec2& omega, double s_max) {
    // quadrature horizon: past every flux center's closest approach and the smooth support
    double horizon = 10.0;
    for (const auto& t : field.flux_terms) {
        double along = dot(x - t.center, omega);
        double d_perp = std::fabs(cross(x - t.center, omega));
        horizon = std::max(horizon, along + 10.0 * std::max(1.0, d_perp));
    }
    if (field.smooth_term) horizon = std::max(horizon, norm(x) + field.smooth_support_radius + 1.0);
    if (s_max > 0.0) horizon = s_max;

    double body = adaptive_integrate(
        [&](double s) { return dot(field.A(x - s * omega), omega); }, 0.0, horizon, 1e-12);
    double total = field.constants.flux_coupling() * body;

    if (s_max <= 0.0) {
        // closed-form tails: the canonical term integral along a straight path equals
        // (flux/2pi) times the swept angle about the center, so the [horizon, inf)
        // piece is the sweep from the backward asymptote direction -omega up to the
        // direction of the horizon point
        Vec2 far = x - horizon * omega;
        Vec2 back = -omega;
        for (const auto& t : field.flux_terms) {
            if (t.flux == 0.0) continue;
            Vec2 r = far - t.center;
            total += (t.flux / (2.0 * M_PI)) * std::atan2(cross(back, r), dot(back, r));
        }
    }
    return total;
}

GaugeField apply_gauge(const GaugeField& field, const GaugeTransform& g) {
    GaugeField out = field;
    for (const auto& [obs_id, p] : g.windings) {
        if (p == 0) continue;
        bool found = false;
        for (auto& t : out.flux_terms) {
            if (t.obstacle_id == obs_id) {
                t.flux += 2.0 * M_PI * p;
                found = true;
                break;
            }
        }
        if (!found)
            throw BadBasis("gauge winding names obstacle '" + obs_id + "' without a flux term");
    }
    if (g.smooth_phase) {
        auto prev_phase = field.gauge_phase;
        auto add_phase = g.smooth_phase;
        out.gauge_phase = [prev_phase, add_phase](const Vec2& x) {
            return (prev_phase ? prev_phase(x) : 0.0) + add_phase(x);
        };
        auto prev_grad = field.gauge_phase_grad;
        auto add_grad = g.smooth_phase_grad;
        if ((prev_grad || !prev_phase) && add_grad) {
            out.gauge_phase_grad = [prev_grad, add_grad](const Vec2& x) {
                Vec2 v = add_grad(x);
                if (prev_grad) v += prev_grad(x);
                return v;
            };
        } else {
            out.gauge_phase_grad = nullptr;  // fall back to numeric differentiation
        }
    }
    return out;
}

bool is_gauge_equivalent(const GaugeField& f1, const GaugeField& f2,
                         const std::vector<Contour>& basis, const Domain& domain, double tol) {
    for (const auto& c : basis) {
        int hits = 0;
        for (const auto& o : domain.obstacles) {
            int w = winding_number(c, obstacle_ref_point(o));
            if (w != 0) {
                if (w != 1) throw BadBasis("basis contour winding is not a unit vector");
                ++hits;
            }
        }
        if (hits != 1) throw BadBasis("basis contour must encircle exactly one obstacle");
    }
    for (const auto& c : basis) {
        double d1 = line_integral_flux(f1, c, &domain).flux;
        double d2 = line_integral_flux(f2, c, &domain).flux;
        double diff = std::remainder(d1 - d2, 2.0 * M_PI);
        if (std::fabs(diff) > tol) return false;
    }
    return true;
}

double curl_residual(const GaugeField& field, const Domain& domain, int samples,
                     double fd_step) {
    if (samples <= 0) throw std::invalid_argument("curl_residual needs samples > 0");
    const Vec2& lo = domain.bounding_box.first;
    const Vec2& hi = domain.bounding_box.second;
    int nside = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(samples)))));
    double worst = 0.0;
    for (int j = 0; j < nside; ++j) {
        for (int i = 0; i < nside; ++i) {
            Vec2 p{lo.x1 + (hi.x1 - lo.x1) * (i + 0.5) / nside,
                   lo.x2 + (hi.x2 - lo.x2) * (j + 0.5) / nside};
            if (signed_distance(domain, p) < 4.0 * fd_step) continue;
            double h = fd_step;
            double dA2_dx1 = (field.A({p.x1 + h, p.x2}).x2 - field.A({p.x1 - h, p.x2}).x2) / (2 * h);
            double dA1_dx2 = (field.A({p.x1, p.x2 + h}).x1 - field.A({p.x1, p.x2 - h}).x1) / (2 * h);
            worst = std::max(worst, std::fabs(dA2_dx1 - dA1_dx2));
        }
    }
    return worst;
}

}  // namespace abwave
