#include "nilp/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nilp/onepoint.hpp"
#include "nilp/quadrature.hpp"

namespace nilp {

namespace {

double xlogx(double v) { return v <= 0 ? 0.0 : v * std::log(v); }

// int du log|t - alpha(u)| with closed-form antiderivative on linear pieces
double log_integral(const BoundaryShape& shape, double t) {
    auto F = [t](double v) {
        const double d = std::abs(t - v);
        return d == 0 ? 0.0 : -(t - v) * (std::log(d) - 1.0);
    };
    double s = 0;
    for (const Element& e : shape.elements()) {
        switch (e.kind) {
            case Element::Kind::Gap:
                break;
            case Element::Kind::Linear:
                s += (F(e.v1) - F(e.v0)) / e.slope;
                break;
            case Element::Kind::Curved:
                s += integrate([&](double u) { return std::log(std::abs(t - e.alpha(u))); },
                               e.u0, e.u1, 1e-12);
                break;
        }
    }
    return s;
}

double dS0_I(const Resolvent& res, double t, double xi) {
    return std::log((t + 1 - xi) / (t - xi)) + res.log_abs_x(t);
}

double dS0_II(const Resolvent& res, double t, double xi) {
    return std::log((xi - t - 1) / (xi - t)) + res.log_abs_x(t);
}

}  // namespace

double S0(const BoundaryShape& shape, double t, double xi) {
    return -1 + xlogx(t + 1 - xi) - xlogx(t - xi) - log_integral(shape, t);
}

double S1(double xi, double z) { return xlogx(xi + z) - xlogx(xi) - xlogx(z); }

double S0_II(const BoundaryShape& shape, double t, double xi) {
    return -1 - xlogx(xi - t - 1) + xlogx(xi - t) - log_integral(shape, t);
}

double S1_II(const BoundaryShape& shape, double xi, double z) {
    const double a1 = shape.alpha1();
    return xlogx(a1 - xi) - xlogx(z) - xlogx(a1 - xi - z);
}

SaddleResult saddle_t(const BoundaryShape& shape, double xi, Family family) {
    Resolvent res(shape);
    const double a1 = shape.alpha1();
    if (family == Family::Hat)
        throw std::invalid_argument("saddle_t supports families I and II");
    // both families lose their saddle at the X1 edge: t* -> +inf (I) or -inf
    // (II) as xi approaches 1/2 + int alpha
    const double X1 = 0.5 + shape.moment(1);
    if (family == Family::I) {
        if (xi >= a1)
            throw std::invalid_argument("xi must lie below alpha(1)");
        if (xi <= X1 + 1e-9)
            return {std::numeric_limits<double>::infinity(), true};
        // dS0 < 0 near alpha(1), ~ (xi - X1)/t^2 at infinity
        double lo = a1 + 1e-9 * (1 + a1);
        for (int it = 0; dS0_I(res, lo, xi) > 0; ++it) {
            if (it > 2000)
                throw std::invalid_argument("no saddle bracket for this xi");
            lo = a1 + (lo - a1) * 0.25;
        }
        double hi = a1 + 1;
        bool bracketed = false;
        while (hi < 1e12) {
            if (dS0_I(res, hi, xi) > 0) {
                bracketed = true;
                break;
            }
            hi *= 2;
        }
        if (!bracketed)
            return {hi, true};
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double g = dS0_I(res, mid, xi);
            if (std::abs(g) < 1e-12)
                return {mid, false};
            (g < 0 ? lo : hi) = mid;
        }
        return {0.5 * (lo + hi), false};
    }
    // family II: t in (-inf, 0); the intercept xi(t) = t + x/(x-1) increases
    // toward X1 as t -> -inf
    if (xi >= X1 - 1e-9)
        return {-std::numeric_limits<double>::infinity(), true};
    double hi = -1e-9 * (1 + a1);
    for (int it = 0; dS0_II(res, hi, xi) < 0; ++it) {
        if (it > 2000)
            throw std::invalid_argument("no saddle bracket for this xi");
        hi *= 0.25;
    }
    double lo = -1;
    bool bracketed = false;
    while (lo > -1e12) {
        if (dS0_II(res, lo, xi) < 0) {
            bracketed = true;
            break;
        }
        lo *= 2;
    }
    if (!bracketed)
        return {lo, true};
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g = dS0_II(res, mid, xi);
        if (std::abs(g) < 1e-12)
            return {mid, false};
        (g < 0 ? lo : hi) = mid;
    }
    return {0.5 * (lo + hi), false};
}

ExitSolution exit_solution_I(const Resolvent& res, double t) {
    const double a1 = res.shape().alpha1();
    if (t < a1)
        throw std::invalid_argument("family I needs t >= alpha(1)");
    const double x = res.x(t);
    return {t - x / (1 - x), t * (1 - x) / x - 1};
}

ExitSolution exit_solution_II(const Resolvent& res, double t) {
    if (t > 0)
        throw std::invalid_argument("family II needs t <= 0");
    const double x = res.x(t);
    return {t + x / (x - 1), (res.shape().alpha1() - t) * (x - 1) / x - 1};
}

ExitSolution exit_solution_hat(const Resolvent& res, double t) {
    const double a1 = res.shape().alpha1();
    const double mu = a1 - 1;
    const double x = res.x(t);
    if (x >= 0)
        throw std::invalid_argument("family hat needs t inside the right frozen interval");
    // y from the defy identity x = -(1 + mu - t)/(t y)
    const double y = -(1 + mu - t) / (t * x);
    const double xi_hat = t - mu - t * y;
    const double w = (t * (1 - y) - mu) / (1 + mu - t * (1 - y)) * (1 + mu - t);
    return {xi_hat, w};
}

RateFunction rate_function(const BoundaryShape& shape, int grid_points) {
    Resolvent res(shape);
    const double a1 = shape.alpha1();
    RateFunction rf;
    const double eps = 1e-7 * (1 + a1);
    const double x_min = res.x(a1 + eps);
    double t_hi = a1 + 1;
    while (res.x(t_hi) < 1 - 1e-5)
        t_hi *= 2;
    for (int i = 0; i < grid_points; ++i) {
        const double xv = x_min + (1 - 1e-5 - x_min) * (i + 0.5) / grid_points;
        double lo = a1 + eps, hi = t_hi;
        for (int it = 0; it < 200 && hi - lo > 1e-13 * (1 + lo); ++it) {
            const double mid = 0.5 * (lo + hi);
            (res.x(mid) < xv ? lo : hi) = mid;
        }
        const double t = 0.5 * (lo + hi);
        const double xi = t - xv / (1 - xv);
        rf.samples.emplace_back(xi, S0(shape, t, xi));
    }
    return rf;
}

std::vector<ConvergenceRow> convergence_study(const BoundaryShape& shape,
                                              const std::vector<long>& n_list, Family family,
                                              double xi_lo, double xi_hi, int xi_points) {
    if (family == Family::Hat)
        throw std::invalid_argument("convergence_study supports families I and II");
    std::vector<ConvergenceRow> rows;
    for (long n : n_list) {
        const StartSequence seq = shape.realize(n);
        for (int i = 0; i < xi_points; ++i) {
            const double xi_req = xi_lo + (xi_hi - xi_lo) * i / (xi_points - 1.0);
            const long ell = std::lround(xi_req * n);
            const double xi = static_cast<double>(ell) / n;
            const Rational h = family == Family::I ? H(seq, ell) : Htilde(seq, ell);
            const double exact = log_rational(h) / n;
            const SaddleResult sr = saddle_t(shape, xi, family);
            const double pred = sr.diverged
                                    ? 0.0
                                    : (family == Family::I ? S0(shape, sr.t, xi)
                                                           : S0_II(shape, sr.t, xi));
            rows.push_back({family, n, xi, exact, pred, std::abs(exact - pred)});
        }
    }
    return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out.precision(15);
    out << "family,n,xi,exact_log_over_n,predicted_S0,deviation\n";
    for (const ConvergenceRow& r : rows)
        out << (r.family == Family::I ? "I" : "II") << ',' << r.n << ',' << r.xi << ','
            << r.exact_log_over_n << ',' << r.predicted_S0 << ',' << r.deviation << '\n';
    return out.str();
}

}  // namespace nilp
