#include "abwave/mollifier.hpp"

#include <cmath>

namespace abwave {

namespace {

double phi(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

double phi_prime(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

double smooth_step(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double a = phi(s), b = phi(1.0 - s);
    return a / (a + b);
}

double smooth_step_prime(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    double a = phi(s), b = phi(1.0 - s);
    double den = a + b;
    return (phi_prime(s) * b + a * phi_prime(1.0 - s)) / (den * den);
}

}  // namespace

double mollifier_eval(double t) {
    double a = std::fabs(t);
    if (a <= 0.5) return 1.0;
    if (a >= 1.0) return 0.0;
    return 1.0 - smooth_step(2.0 * a - 1.0);
}

double mollifier_deriv(double t) {
    double a = std::fabs(t);
    if (a <= 0.5 || a >= 1.0) return 0.0;
    double d = -2.0 * smooth_step_prime(2.0 * a - 1.0);
    return t >= 0.0 ? d : -d;
}

}  // namespace abwave
