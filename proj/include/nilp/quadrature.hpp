#pragma once

#include <functional>

namespace nilp {

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 15-point quadrature on [a, b].
double integrate(const RealFn& f, double a, double b, double rtol = 1e-12);

/// Integral of f over [a, b] when f behaves like (u-a)^(-ea) near a and
/// (b-u)^(-eb) near b with exponents in [0, 1).  Power substitutions
/// regularize each singular endpoint before the adaptive pass.
double integrate_singular(const RealFn& f, double a, double b, double ea, double eb,
                          double rtol = 1e-12);

}  // namespace nilp
