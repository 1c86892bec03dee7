#ifndef ABWAVE_CONSTANTS_HPP
#define ABWAVE_CONSTANTS_HPP

#include <stdexcept>

namespace abwave {

// Physical scaling constants. Default is the dimensionless mode hbar = m = e = c = 1;
// all formulas carry the constants explicitly so physical units can be restored.
struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;
    double charge = 1.0;
    double light_speed = 1.0;

    void validate() const {
        if (!(hbar > 0.0 && mass > 0.0 && charge > 0.0 && light_speed > 0.0))
            throw std::invalid_argument("PhysicalConstants: all constants must be strictly positive");
    }

    // coupling e/(hbar c) multiplying line integrals of A into dimensionless phases
    double flux_coupling() const { return charge / (hbar * light_speed); }
};

}  // namespace abwave

#endif
