#ifndef ABWAVE_GAUGE_FIELD_HPP
#define ABWAVE_GAUGE_FIELD_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abwave/constants.hpp"
#include "abwave/geometry.hpp"
#include "abwave/vec2.hpp"

namespace abwave {

// one canonical flux-carrying term: A(x) = (flux hbar c / e) (1/2pi) (-(x2-c2), (x1-c1)) / |x-c|^2
struct FluxTerm {
    Vec2 center;
    double flux = 0.0;          // dimensionless phase (e/hbar c) * loop integral
    std::string obstacle_id;    // obstacle shielding this term's center
};

Vec2 canonical_flux_potential(const FluxTerm& term, const PhysicalConstants& constants,
                              const Vec2& x);

// magnetic vector potential with curl A = 0 outside the obstacles plus the scalar potential
struct GaugeField {
    PhysicalConstants constants;
    std::vector<FluxTerm> flux_terms;
    // optional smooth compactly supported vector term (curl-free outside obstacles)
    std::function<Vec2(const Vec2&)> smooth_term;
    double smooth_support_radius = 0.0;  // bound on |x| outside which smooth_term vanishes
    // accumulated smooth gauge phase chi; contributes (hbar c / e) grad chi to A
    std::function<double(const Vec2&)> gauge_phase;
    std::function<Vec2(const Vec2&)> gauge_phase_grad;  // optional analytic gradient
    std::function<double(const Vec2&, double)> scalar_potential;  // V(x, t)

    Vec2 A(const Vec2& x) const;
    double V(const Vec2& x, double t) const;
    double gauge_chi(const Vec2& x) const { return gauge_phase ? gauge_phase(x) : 0.0; }
};

struct GaugeTransform {
    std::map<std::string, int> windings;  // integer winding per obstacle id
    std::function<double(const Vec2&)> smooth_phase;       // compactly supported phase chi
    std::function<Vec2(const Vec2&)> smooth_phase_grad;    // optional analytic gradient
};

struct FluxReport {
    Contour contour;
    double flux = 0.0;  // dimensionless (e/hbar c) loop integral
    std::map<std::string, int> per_obstacle;
    std::optional<std::array<double, 3>> partial_integrals;  // (I1, I2, I3)
};

// flux = (e/hbar c) closed line integral of A over the contour, adaptive quadrature per
// segment to 1e-10; windings of the contour around each flux-term center are reported.
// When a domain is given, throws ContourIntersectsObstacle if the polyline meets an obstacle.
FluxReport line_integral_flux(const GaugeField& field, const Contour& contour,
                              const Domain* domain = nullptr);

// (e/hbar c) integral of A . dl along the straight segment from a to b
double segment_flux(const GaugeField& field, const Vec2& a, const Vec2& b);

// I(x, omega) = (e/hbar c) int_0^inf omega . A(x - s omega) ds. The canonical terms'
// tails are the residual angle sweep to the backward asymptote and are added in closed
// form; the quadrature covers [0, S_max] with S_max from the 1/|x| decay.
double half_line_flux(const GaugeField& field, const Vec2& x, const Vec2& omega,
                      double s_max = -1.0);

// gauge shift: windings add 2 pi p_j to the flux of obstacle j, the smooth phase adds
// (hbar c / e) grad chi to A
GaugeField apply_gauge(const GaugeField& field, const GaugeTransform& g);

// flux criterion: true iff every basis-contour flux difference is within tolerance of
// an integer multiple of 2 pi. Each basis contour must have winding 1 around exactly
// one obstacle (BadBasis otherwise).
bool is_gauge_equivalent(const GaugeField& f1, const GaugeField& f2,
                         const std::vector<Contour>& basis, const Domain& domain,
                         double tol = 1e-6);

// max |d1 A2 - d2 A1| over sample points outside obstacles, central differences
double curl_residual(const GaugeField& field, const Domain& domain, int samples,
                     double fd_step = 1e-4);

}  // namespace abwave

#endif
