#include "nilp/resolvent.hpp"

#include <cmath>
#include <stdexcept>

namespace nilp {

Resolvent::Resolvent(BoundaryShape shape) : shape_(std::move(shape)) {}

bool Resolvent::defined(double t) const {
    for (const Element& e : shape_.elements()) {
        if (t <= e.v0 || t >= e.v1)
            continue;
        if (e.kind == Element::Kind::Curved)
            return false;
        if (e.kind == Element::Kind::Linear && e.slope > 1.0)
            return false;
    }
    return true;
}

int Resolvent::sign(double t) const {
    int s = 1;
    for (const Element& e : shape_.elements())
        if (e.kind == Element::Kind::Linear && e.slope == 1.0 && t > e.v0 && t < e.v1)
            s = -s;
    return s;
}

double Resolvent::curved_integral(const Element& e, double t, int power) const {
    // int du / (t - alpha(u))^power over the element, with power substitutions
    // when alpha has a power-law endpoint
    double ea = 0, eb = 0;
    if (shape_.exponent0() < 1.0 && e.u0 == 0.0 && std::abs(t) < 1e-3)
        ea = std::min(0.95, power * shape_.exponent0());
    if (shape_.exponent1() < 1.0 && e.u1 == 1.0 && std::abs(t - shape_.alpha1()) < 1e-3)
        eb = std::min(0.95, power * shape_.exponent1());
    const RealFn f = [&e, t, power](double u) {
        return 1.0 / std::pow(t - e.alpha(u), power);
    };
    return integrate_singular(f, e.u0, e.u1, ea, eb);
}

double Resolvent::log_abs_x(double t) const {
    if (!defined(t))
        throw std::domain_error("x(t) undefined inside a branch cut");
    double s = 0;
    for (const Element& e : shape_.elements()) {
        switch (e.kind) {
            case Element::Kind::Gap:
                break;  // a jump contributes no factor
            case Element::Kind::Linear:
                s += (std::log(std::abs(t - e.v1)) - std::log(std::abs(t - e.v0))) / e.slope;
                break;
            case Element::Kind::Curved:
                s -= curved_integral(e, t, 1);
                break;
        }
    }
    return s;
}

double Resolvent::dlog(double t) const {
    if (!defined(t))
        throw std::domain_error("x(t) undefined inside a branch cut");
    double s = 0;
    for (const Element& e : shape_.elements()) {
        switch (e.kind) {
            case Element::Kind::Gap:
                break;
            case Element::Kind::Linear:
                s += (1.0 / (t - e.v1) - 1.0 / (t - e.v0)) / e.slope;
                break;
            case Element::Kind::Curved:
                s += curved_integral(e, t, 2);
                break;
        }
    }
    return s;
}

double Resolvent::d2log(double t) const {
    if (!defined(t))
        throw std::domain_error("x(t) undefined inside a branch cut");
    double s = 0;
    for (const Element& e : shape_.elements()) {
        switch (e.kind) {
            case Element::Kind::Gap:
                break;
            case Element::Kind::Linear:
                s += (1.0 / ((t - e.v0) * (t - e.v0)) - 1.0 / ((t - e.v1) * (t - e.v1))) / e.slope;
                break;
            case Element::Kind::Curved:
                s -= 2.0 * curved_integral(e, t, 3);
                break;
        }
    }
    return s;
}

double Resolvent::x(double t) const { return sign(t) * std::exp(log_abs_x(t)); }

double Resolvent::xprime(double t) const { return x(t) * dlog(t); }

double Resolvent::xsecond(double t) const {
    const double d = dlog(t);
    return x(t) * (d * d + d2log(t));
}

}  // namespace nilp
