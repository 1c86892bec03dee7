#ifndef ABWAVE_GRID_HPP
#define ABWAVE_GRID_HPP

#include <complex>
#include <vector>

#include "abwave/geometry.hpp"
#include "abwave/vec2.hpp"

namespace abwave {

using Complex = std::complex<double>;

struct GridSpec {
    Vec2 origin;        // position of node (0,0)
    double spacing = 1.0;
    int nx = 2;
    int ny = 2;

    void validate() const;
    Vec2 point(int i, int j) const { return origin + Vec2{i * spacing, j * spacing}; }
    size_t size() const { return static_cast<size_t>(nx) * ny; }
    size_t index(int i, int j) const { return static_cast<size_t>(j) * nx + i; }
};

// complex field samples on a masked rectangular grid; mask true = interior degree of freedom,
// values at masked-out cells are kept exactly zero (Dirichlet)
struct GridField {
    GridSpec spec;
    std::vector<Complex> values;
    std::vector<char> mask;

    GridField() = default;
    explicit GridField(const GridSpec& s)
        : spec(s), values(s.size(), Complex{0.0, 0.0}), mask(s.size(), 1) {}

    Complex& at(int i, int j) { return values[spec.index(i, j)]; }
    const Complex& at(int i, int j) const { return values[spec.index(i, j)]; }
    bool interior(int i, int j) const { return mask[spec.index(i, j)] != 0; }

    // zero out everything the mask excludes
    void enforce_mask();
    double norm_l2() const;            // discrete L2 norm: sqrt(sum |u|^2 * h^2)
    double norm_sq_region(int i0, int i1, int j0, int j1) const;
};

// staircase mask: node masked out when its location is inside an obstacle
// (signed distance <= 0) or outside the domain bounding box
GridField make_masked_field(const GridSpec& spec, const Domain& dom);

}  // namespace abwave

#endif
