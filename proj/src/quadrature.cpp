#include "nilp/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace nilp {

namespace {

// Gauss-Kronrod 15-point nodes/weights on [-1, 1] (7-point Gauss embedded).
const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                        0.741531185599394, 0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.0};
const double kWk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                       0.140653259715525, 0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct Panel {
    double value;
    double error;
};

Panel gk15(const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0, resg = 0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgk[i];
        const double fv = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
        resk += kWk[i] * fv;
        if (i % 2 == 1)
            resg += kWg[i / 2] * fv;
    }
    const double value = resk * h;
    return {value, std::abs((resk - resg) * h)};
}

double adapt(const RealFn& f, double a, double b, double tol, int depth) {
    Panel p = gk15(f, a, b);
    if (p.error <= tol || depth > 48)
        return p.value;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1) + adapt(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const RealFn& f, double a, double b, double rtol) {
    if (a == b)
        return 0.0;
    Panel first = gk15(f, a, b);
    double scale = std::abs(first.value);
    if (scale < 1.0)
        scale = 1.0;
    return adapt(f, a, b, rtol * scale, 0);
}

double integrate_singular(const RealFn& f, double a, double b, double ea, double eb,
                          double rtol) {
    if (ea < 0 || ea >= 1 || eb < 0 || eb >= 1)
        throw std::invalid_argument("endpoint exponents must lie in [0, 1)");
    if (ea == 0 && eb == 0)
        return integrate(f, a, b, rtol);
    const double mid = 0.5 * (a + b);
    double left = 0, right = 0;
    if (ea > 0) {
        // u = a + w^q maps the (u-a)^(-ea) singularity to w^(q(1-ea)-1), regular
        // for q >= 2/(1-ea).
        const double q = std::ceil(2.0 / (1.0 - ea));
        const double wmax = std::pow(mid - a, 1.0 / q);
        left = integrate([&](double w) { return f(a + std::pow(w, q)) * q * std::pow(w, q - 1); },
                         0.0, wmax, rtol);
    } else {
        left = integrate(f, a, mid, rtol);
    }
    if (eb > 0) {
        const double q = std::ceil(2.0 / (1.0 - eb));
        const double wmax = std::pow(b - mid, 1.0 / q);
        right = integrate([&](double w) { return f(b - std::pow(w, q)) * q * std::pow(w, q - 1); },
                          0.0, wmax, rtol);
    } else {
        right = integrate(f, mid, b, rtol);
    }
    return left + right;
}

}  // namespace nilp
