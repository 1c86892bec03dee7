#ifndef ABWAVE_MOLLIFIER_HPP
#define ABWAVE_MOLLIFIER_HPP

namespace abwave {

// Canonical even C^inf cutoff: chi0(t) = 1 for |t| <= 1/2, chi0(t) = 0 for |t| >= 1,
// 0 <= chi0 <= 1 everywhere. Built from the smooth step
//   S(s) = phi(s) / (phi(s) + phi(1-s)),  phi(s) = exp(-1/s) for s > 0 else 0,
// as chi0(t) = 1 - S(2|t| - 1). Reproducible bit for bit.
double mollifier_eval(double t);

// d/dt of mollifier_eval, closed form.
double mollifier_deriv(double t);

}  // namespace abwave

#endif
