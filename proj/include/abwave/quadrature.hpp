#ifndef ABWAVE_QUADRATURE_HPP
#define ABWAVE_QUADRATURE_HPP

#include <complex>
#include <functional>

namespace abwave {

// adaptive Gauss-Kronrod (G7/K15) with recursive bisection to the given absolute tolerance
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, int max_depth = 48);

std::complex<double> adaptive_integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol = 1e-10, int max_depth = 48);

// fixed 4-point Gauss-Legendre rule on [a, b]
double gauss4(const std::function<double(double)>& f, double a, double b);

}  // namespace abwave

#endif
