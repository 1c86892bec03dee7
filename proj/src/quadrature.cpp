#include "abwave/quadrature.hpp"

#include <cmath>

namespace abwave {

namespace {

// Kronrod 15-point nodes on [-1, 1] and weights; Gauss 7 weights on the odd-index subset.
const double kx[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
const double kw[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gw[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                      0.417959183673469, 0.381830050505119, 0.279705391489277,
                      0.129484966168870};

template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& kronrod, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T resk{}, resg{};
    for (int i = 0; i < 15; ++i) {
        T v = f(c + h * kx[i]);
        resk += kw[i] * v;
        if (i % 2 == 1) resg += gw[i / 2] * v;
    }
    kronrod = resk * h;
    err = std::abs(resk - resg) * std::fabs(h);
}

template <typename T>
T adapt(const std::function<T(double)>& f, double a, double b, double tol, int depth) {
    T whole;
    double err;
    gk15(f, a, b, whole, err);
    if (err <= tol || depth <= 0) return whole;
    double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth - 1) + adapt(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    return adapt<double>(f, a, b, abs_tol, max_depth);
}

std::complex<double> adaptive_integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b, double abs_tol,
    int max_depth) {
    return adapt<std::complex<double>>(f, a, b, abs_tol, max_depth);
}

double gauss4(const std::function<double(double)>& f, double a, double b) {
    static const double x[4] = {-0.861136311594053, -0.339981043584856, 0.339981043584856,
                                0.861136311594053};
    static const double w[4] = {0.347854845137454, 0.652145154862546, 0.652145154862546,
                                0.347854845137454};
    double c = 0.5 * (a + b), h = 0.5 * (b - a), s = 0.0;
    for (int i = 0; i < 4; ++i) s += w[i] * f(c + h * x[i]);
    return s * h;
}

}  // namespace abwave
