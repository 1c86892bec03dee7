#include "abwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace abwave {

void GridSpec::validate() const {
    if (!(spacing > 0.0)) throw std::invalid_argument("GridSpec spacing must be > 0");
    if (nx < 2 || ny < 2) throw std::invalid_argument("GridSpec needs nx, ny >= 2");
}

void GridField::enforce_mask() {
    for (size_t n = 0; n < values.size(); ++n)
        if (!mask[n]) values[n] = Complex{0.0, 0.0};
}

double GridField::norm_l2() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s) * spec.spacing;
}

double GridField::norm_sq_region(int i0, int i1, int j0, int j1) const {
    double s = 0.0;
    for (int j = j0; j < j1; ++j)
        for (int i = i0; i < i1; ++i) s += std::norm(at(i, j));
    return s * spec.spacing * spec.spacing;
}

GridField make_masked_field(const GridSpec& spec, const Domain& dom) {
    spec.validate();
    GridField f(spec);
    for (int j = 0; j < spec.ny; ++j) {
        for (int i = 0; i < spec.nx; ++i) {
            Vec2 p = spec.point(i, j);
            bool in = dom.inside_box(p) && signed_distance(dom, p) > 0.0;
            f.mask[spec.index(i, j)] = in ? 1 : 0;
        }
    }
    return f;
}

}  // namespace abwave
