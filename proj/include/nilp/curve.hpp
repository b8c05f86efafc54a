#pragma once

#include <string>
#include <vector>

#include "nilp/resolvent.hpp"

namespace nilp {

struct CurveSample {
    double t, x, X, Y, slope;
};

struct ArcticPortion {
    enum class Kind { GenericI, GenericII, FrozenR, Gap, EdgeFreezeLeft, EdgeFreezeRight };
    Kind kind;
    bool conjectured;  // interior frozen/gap continuations; edge cases are proven
    double t0, t1;     // parameter domain, possibly infinite
    std::vector<CurveSample> samples;
    std::vector<double> cusps;
};

struct TangentLine {
    double t;  // X-axis intercept
    double slope;
    ArcticPortion::Kind source;
};

struct SpecialPoints {
    double X1, Y1;
    double X0, Y0, slope0;        // slope0 = -inf marks a vertical tangent
    double Xinf, Yinf, slopeinf;  // endpoint of the t -> 0^- portion
    std::string case0, caseinf;   // which trichotomy branch applied
};

std::string portion_kind_name(ArcticPortion::Kind kind);

/// Parametric curve point X = t - x(1-x)/x', Y = (1-x)^2/x'.
std::pair<double, double> curve_point(const Resolvent& res, double t);

/// All curve portions: generic I on (alpha(1), inf), generic II on (-inf, 0),
/// one frozen-R portion per maximal slope-1 interval, one gap portion per
/// jump.  Each portion carries grid_points samples and refined cusps.
std::vector<ArcticPortion> portions(const Resolvent& res, int grid_points = 400);

SpecialPoints special_points(const BoundaryShape& shape);

TangentLine tangent_at(const Resolvent& res, double t);

/// t-values inside the portion where dX/dt (and dY/dt) change sign, refined
/// by bisection to 1e-10.
std::vector<double> find_cusps(const Resolvent& res, double t0, double t1, int grid_points = 600);

/// Max over a fine internal resample of |s(t) + dX/dY| with s = x/(1-x).
double legendre_check(const Resolvent& res, const ArcticPortion& portion,
                      int resample = 20001);

/// Fits -log x(t) against sum mu_k / t^{k+1} on a large-t grid and returns
/// the max coefficient deviation from the exact moments.
double moments_check(const BoundaryShape& shape, int kmax);

/// (X, Y) -> (X - Y/2, sqrt(3) Y/2).
std::vector<std::pair<double, double>> to_triangular(const ArcticPortion& portion);

/// Max |x_defy - x_newdefx| over the right-edge frozen interval, comparing
/// the complementary-sequence form of x(t) with the continuation of the
/// direct form.  Requires a shape whose last piece has slope 1.
double edge_freeze_consistency(const BoundaryShape& shape, int grid_points = 200);

std::string portions_to_csv(const std::vector<ArcticPortion>& portions);
std::string portions_to_svg(const std::vector<ArcticPortion>& portions, double alpha1,
                            const std::vector<TangentLine>& tangents = {},
                            bool triangular = false);

}  // namespace nilp
