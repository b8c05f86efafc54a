#pragma once

#include "nilp/shape.hpp"

namespace nilp {

/// x(t) = exp(-int_0^1 du/(t - alpha(u))) and its derivatives, including the
/// sign-carrying real continuation across frozen (slope-1) intervals and
/// gaps.  Linear elements contribute closed-form logarithms; curved elements
/// go through adaptive quadrature.
class Resolvent {
  public:
    explicit Resolvent(BoundaryShape shape);

    const BoundaryShape& shape() const { return shape_; }

    /// True when x(t) is real: t outside [0, alpha(1)], or strictly inside a
    /// frozen or gap interval.
    bool defined(double t) const;

    /// -1 inside a frozen interval (the interval's own factor is negative),
    /// +1 everywhere else x is defined.
    int sign(double t) const;

    double log_abs_x(double t) const;
    double dlog(double t) const;   // d/dt log|x|
    double d2log(double t) const;  // second derivative of log|x|

    double x(double t) const;
    double xprime(double t) const;
    double xsecond(double t) const;

  private:
    double curved_integral(const Element& e, double t, int power) const;

    BoundaryShape shape_;
};

}  // namespace nilp
