#include "nilp/curve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nilp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dXdt(const Resolvent& res, double t) {
    const double x = res.x(t), xp = res.xprime(t), xpp = res.xsecond(t);
    return x * (2 * xp * xp + (1 - x) * xpp) / (xp * xp);
}

CurveSample sample_at(const Resolvent& res, double t) {
    const double x = res.x(t), xp = res.xprime(t);
    CurveSample s;
    s.t = t;
    s.x = x;
    s.X = t - x * (1 - x) / xp;
    s.Y = (1 - x) * (1 - x) / xp;
    s.slope = -(1 - x) / x;
    return s;
}

// invert the monotone increasing t |-> x(t) on (lo, hi) for a target value
double invert_x(const Resolvent& res, double target, double lo, double hi) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * (1 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (res.x(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string portion_kind_name(ArcticPortion::Kind kind) {
    switch (kind) {
        case ArcticPortion::Kind::GenericI: return "generic-I";
        case ArcticPortion::Kind::GenericII: return "generic-II";
        case ArcticPortion::Kind::FrozenR: return "frozen-R";
        case ArcticPortion::Kind::Gap: return "gap";
        case ArcticPortion::Kind::EdgeFreezeLeft: return "edge-freeze-left";
        case ArcticPortion::Kind::EdgeFreezeRight: return "edge-freeze-right";
    }
    return "?";
}

std::pair<double, double> curve_point(const Resolvent& res, double t) {
    const CurveSample s = sample_at(res, t);
    return {s.X, s.Y};
}

TangentLine tangent_at(const Resolvent& res, double t) {
    const double x = res.x(t);
    return {t, -(1 - x) / x, ArcticPortion::Kind::GenericI};
}

std::vector<double> find_cusps(const Resolvent& res, double t0, double t1, int grid_points) {
    std::vector<double> out;
    double prev_t = 0, prev_g = 0;
    bool have_prev = false;
    for (int i = 1; i < grid_points; ++i) {
        const double t = t0 + (t1 - t0) * i / grid_points;
        double g;
        try {
            g = dXdt(res, t);
        } catch (const std::domain_error&) {
            have_prev = false;
            continue;
        }
        if (!std::isfinite(g)) {
            have_prev = false;
            continue;
        }
        if (have_prev && prev_g * g < 0) {
            double lo = prev_t, hi = t, glo = prev_g;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double gm = dXdt(res, mid);
                if (glo * gm <= 0)
                    hi = mid;
                else {
                    lo = mid;
                    glo = gm;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_g = g;
        have_prev = true;
    }
    return out;
}

std::vector<ArcticPortion> portions(const Resolvent& res, int grid_points) {
    const BoundaryShape& shape = res.shape();
    const double a1 = shape.alpha1();
    std::vector<ArcticPortion> out;

    // generic I: t in (alpha(1), inf), x increasing from x_min to 1; sampled
    // on a uniform x-grid inverted by bisection for even coverage near the
    // apex
    {
        ArcticPortion p;
        p.kind = ArcticPortion::Kind::GenericI;
        p.conjectured = false;
        p.t0 = a1;
        p.t1 = kInf;
        const double eps = 1e-9 * (1 + a1);
        const double x_min = res.x(a1 + eps);
        double t_hi = a1 + 1;
        const double x_top = 1.0 - 0.25 / grid_points;
        while (res.x(t_hi) < x_top)
            t_hi *= 2;
        for (int i = 0; i < grid_points; ++i) {
            const double xv = x_min + (x_top - x_min) * (i + 0.5) / grid_points;
            const double t = invert_x(res, xv, a1 + eps, t_hi);
            p.samples.push_back(sample_at(res, t));
        }
        p.cusps = {};
        out.push_back(std::move(p));
    }

    // generic II: t in (-inf, 0), x increasing from 1; uniform grid in
    // w = (x-1)/x
    {
        ArcticPortion p;
        p.kind = ArcticPortion::Kind::GenericII;
        p.conjectured = false;
        p.t0 = -kInf;
        p.t1 = 0;
        const double eps = 1e-9 * (1 + a1);
        double x_cap = res.x(-eps);
        if (!(x_cap < 1e6))
            x_cap = 1e6;
        const double w_max = (x_cap - 1) / x_cap;
        double t_lo = -1;
        const double x_bot = 1 + (x_cap - 1) * 0.25 / grid_points;
        while (res.x(t_lo) > x_bot)
            t_lo *= 2;
        for (int i = 0; i < grid_points; ++i) {
            const double w = w_max * (i + 0.5) / grid_points;
            const double xv = 1.0 / (1.0 - w);
            const double t = invert_x(res, xv, t_lo, -eps);
            p.samples.push_back(sample_at(res, t));
        }
        p.cusps = {};
        out.push_back(std::move(p));
    }

    auto bounded_portion = [&](double v0, double v1, ArcticPortion::Kind kind, bool conjectured) {
        ArcticPortion p;
        p.kind = kind;
        p.conjectured = conjectured;
        p.t0 = v0;
        p.t1 = v1;
        for (int i = 0; i < grid_points; ++i) {
            const double t = v0 + (v1 - v0) * (i + 0.5) / grid_points;
            p.samples.push_back(sample_at(res, t));
        }
        p.cusps = find_cusps(res, v0 + (v1 - v0) * 1e-4, v1 - (v1 - v0) * 1e-4);
        return p;
    };

    for (const auto& [v0, v1] : shape.frozen_intervals()) {
        ArcticPortion::Kind kind = ArcticPortion::Kind::FrozenR;
        bool conjectured = true;
        if (v1 == a1) {
            kind = ArcticPortion::Kind::EdgeFreezeRight;
            conjectured = false;
        } else if (v0 == 0.0) {
            kind = ArcticPortion::Kind::EdgeFreezeLeft;
            conjectured = false;
        }
        out.push_back(bounded_portion(v0, v1, kind, conjectured));
    }
    for (const auto& [v0, v1] : shape.gap_intervals())
        out.push_back(bounded_portion(v0, v1, ArcticPortion::Kind::Gap, true));
    return out;
}

SpecialPoints special_points(const BoundaryShape& shape) {
    SpecialPoints sp;
    const double a1 = shape.alpha1();
    sp.X1 = 0.5 + shape.moment(1);
    sp.Y1 = 1.0;

    const double d1 = shape.dalpha1();
    if (std::isinf(d1)) {
        const double e1 = shape.exponent1();
        const double I1 = integrate_singular(
            [&](double u) { return 1.0 / (a1 - shape.alpha(u)); }, 0, 1, 0,
            std::min(e1, 0.95));
        if (e1 < 0.5) {
            const double I2 = integrate_singular(
                [&](double u) { return 1.0 / std::pow(a1 - shape.alpha(u), 2); }, 0, 1, 0,
                std::min(2 * e1, 0.95));
            sp.X0 = a1 - (1 - std::exp(-I1)) / I2;
            sp.Y0 = std::pow(1 - std::exp(-I1), 2) / (I2 * std::exp(-I1));
            sp.slope0 = 1 - std::exp(I1);
            sp.case0 = "alpha'(1)=inf, I1,I2 finite";
        } else {
            sp.X0 = a1;
            sp.Y0 = 0;
            sp.slope0 = 1 - std::exp(I1);
            sp.case0 = "alpha'(1)=inf, I2 divergent";
        }
    } else if (d1 == 1.0) {
        // Y0 = exp(int [1/(alpha(1)-alpha) - 1/(1-u)]); on a trailing slope-1
        // stretch the two terms cancel exactly
        double L = 0;
        for (const Element& e : shape.elements()) {
            if (e.kind == Element::Kind::Gap)
                continue;
            if (e.kind == Element::Kind::Linear) {
                if (e.slope == 1.0 && e.v1 == a1)
                    continue;
                L += std::log((a1 - e.v0) / (a1 - e.v1)) / e.slope;
                L -= std::log((1 - e.u0) / (1 - e.u1));
            } else {
                L += integrate(
                    [&](double u) {
                        return 1.0 / (a1 - e.alpha(u)) - 1.0 / (1.0 - u);
                    },
                    e.u0, e.u1, 1e-10);
            }
        }
        sp.X0 = a1;
        sp.Y0 = std::exp(L);
        sp.slope0 = -kInf;
        sp.case0 = "alpha'(1)=1";
    } else {
        sp.X0 = a1;
        sp.Y0 = 0;
        sp.slope0 = -kInf;
        sp.case0 = "alpha'(1)>1";
    }

    const double d0 = shape.dalpha0();
    if (std::isinf(d0)) {
        const double e0 = shape.exponent0();
        const double J1 = integrate_singular(
            [&](double u) { return 1.0 / shape.alpha(u); }, 0, 1, std::min(e0, 0.95), 0);
        if (e0 < 0.5) {
            const double J2 = integrate_singular(
                [&](double u) { return 1.0 / std::pow(shape.alpha(u), 2); }, 0, 1,
                std::min(2 * e0, 0.95), 0);
            sp.Xinf = (std::exp(J1) - 1) / J2;
            sp.Yinf = std::pow(std::exp(J1) - 1, 2) / (J2 * std::exp(J1));
            sp.slopeinf = 1 - std::exp(-J1);
            sp.caseinf = "alpha'(0)=inf, J1,J2 finite";
        } else {
            sp.Xinf = sp.Yinf = 0;
            sp.slopeinf = 1 - std::exp(-J1);
            sp.caseinf = "alpha'(0)=inf, J2 divergent";
        }
    } else if (d0 == 1.0) {
        double L = 0;
        for (const Element& e : shape.elements()) {
            if (e.kind == Element::Kind::Gap)
                continue;
            if (e.kind == Element::Kind::Linear) {
                if (e.slope == 1.0 && e.v0 == 0.0)
                    continue;
                L += std::log(e.u1 / e.u0);
                L -= std::log(e.v1 / e.v0) / e.slope;
            } else {
                L += integrate(
                    [&](double u) { return 1.0 / u - 1.0 / e.alpha(u); }, e.u0, e.u1,
                    1e-10);
            }
        }
        sp.Xinf = sp.Yinf = std::exp(-L);
        sp.slopeinf = 1.0;
        sp.caseinf = "alpha'(0)=1";
    } else {
        sp.Xinf = sp.Yinf = 0;
        sp.slopeinf = 1.0;
        sp.caseinf = "alpha'(0)>1";
    }
    return sp;
}

double legendre_check(const Resolvent& res, const ArcticPortion& portion, int resample) {
    // resample the portion finely so the centered differences resolve dX/dY
    std::vector<CurveSample> s;
    s.reserve(resample);
    if (portion.kind == ArcticPortion::Kind::GenericI ||
        portion.kind == ArcticPortion::Kind::GenericII) {
        const double a1 = res.shape().alpha1();
        const double eps = 1e-9 * (1 + a1);
        const bool fam1 = portion.kind == ArcticPortion::Kind::GenericI;
        double x_lo, x_hi, t_lo, t_hi;
        if (fam1) {
            t_lo = a1 + eps;
            const double xm = res.x(t_lo);
            x_lo = xm + 0.05 * (1 - xm);
            x_hi = xm + 0.95 * (1 - xm);
            t_hi = a1 + 1;
            while (res.x(t_hi) < x_hi)
                t_hi *= 2;
        } else {
            t_hi = -eps;
            double x_cap = res.x(t_hi);
            if (!(x_cap < 1e4))
                x_cap = 1e4;
            x_lo = 1 + 0.05 * (x_cap - 1);
            x_hi = 1 + 0.95 * (x_cap - 1);
            t_lo = -1;
            while (res.x(t_lo) > x_lo)
                t_lo *= 2;
        }
        for (int i = 0; i < resample; ++i) {
            const double xv = x_lo + (x_hi - x_lo) * i / (resample - 1.0);
            const double t = invert_x(res, xv, t_lo, t_hi);
            s.push_back(sample_at(res, t));
        }
    } else {
        const double m = (portion.t1 - portion.t0) * 0.05;
        for (int i = 0; i < resample; ++i) {
            const double t = portion.t0 + m + (portion.t1 - portion.t0 - 2 * m) * i / (resample - 1.0);
            s.push_back(sample_at(res, t));
        }
    }
    double dev = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        const double dY = s[i + 1].Y - s[i - 1].Y;
        const double dX = s[i + 1].X - s[i - 1].X;
        if (std::abs(dY) < 1e-12)
            continue;
        const double slope_duality = s[i].x / (1 - s[i].x);  // s(t) = -dX/dY
        dev = std::max(dev, std::abs(slope_duality + dX / dY));
    }
    return dev;
}

double moments_check(const BoundaryShape& shape, int kmax) {
    Resolvent res(shape);
    // fit several terms beyond the checked ones so their truncation error
    // does not bias the low moments
    const int kfit = kmax + 6;
    const int npts = 120;
    Eigen::MatrixXd M(npts, kfit + 1);
    Eigen::VectorXd rhs(npts);
    const double s_hi = 1e-2, s_lo = 1e-3;
    for (int i = 0; i < npts; ++i) {
        // s = 1/t log-spaced in [1e-3, 1e-2]; columns are (s/s_hi)^{k+1}
        const double s = s_lo * std::pow(s_hi / s_lo, i / (npts - 1.0));
        rhs(i) = -std::log(res.x(1.0 / s));
        double col = s / s_hi;
        for (int k = 0; k <= kfit; ++k) {
            M(i, k) = col;
            col *= s / s_hi;
        }
    }
    Eigen::VectorXd c = M.colPivHouseholderQr().solve(rhs);
    double dev = 0;
    for (int k = 0; k <= kmax; ++k) {
        const double mu_k = c(k) / std::pow(s_hi, k + 1);
        dev = std::max(dev, std::abs(mu_k - shape.moment(k)));
    }
    return dev;
}

std::vector<std::pair<double, double>> to_triangular(const ArcticPortion& portion) {
    std::vector<std::pair<double, double>> out;
    out.reserve(portion.samples.size());
    for (const CurveSample& s : portion.samples)
        out.emplace_back(s.X - 0.5 * s.Y, 0.5 * std::sqrt(3.0) * s.Y);
    return out;
}

double edge_freeze_consistency(const BoundaryShape& shape, int grid_points) {
    if (!shape.is_piecewise())
        throw std::invalid_argument("edge-freeze check needs a piecewise shape");
    const auto& els = shape.elements();
    const Element& last = els.back();
    if (last.kind != Element::Kind::Linear || last.slope != 1.0)
        throw std::invalid_argument("edge-freeze check needs a trailing slope-1 piece");
    const double a1 = shape.alpha1();
    const double mu = a1 - 1.0;
    double rho = 0;  // width of the maximal trailing slope-1 run
    for (auto it = els.rbegin(); it != els.rend(); ++it) {
        if (it->kind == Element::Kind::Linear && it->slope == 1.0)
            rho += it->v1 - it->v0;
        else
            break;
    }
    // beta elements as (v0, v1, slope) triples; slope 0 marks a beta-jump.
    // an alpha-segment of slope p thins to beta-slope p/(p-1); an alpha
    // slope-1 stretch becomes a beta-jump; an alpha-jump becomes a slope-1
    // beta stretch.
    struct BetaPiece {
        double v0, v1, slope;
    };
    std::vector<BetaPiece> beta;
    for (const Element& e : els) {
        if (e.kind == Element::Kind::Gap)
            beta.push_back({e.v0, e.v1, 1.0});
        else if (e.slope == 1.0)
            beta.push_back({e.v0, e.v1, 0.0});
        else
            beta.push_back({e.v0, e.v1, e.slope / (e.slope - 1.0)});
    }
    Resolvent res(shape);
    double dev = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = (1 + mu - rho) + rho * (i + 0.5) / grid_points;
        double logy = 0;
        for (const BetaPiece& b : beta)
            if (b.slope > 0)
                logy += (std::log(std::abs(t - b.v1)) - std::log(std::abs(t - b.v0))) / b.slope;
        const double x_defy = -(1 + mu - t) / (t * std::exp(logy));
        dev = std::max(dev, std::abs(x_defy - res.x(t)));
    }
    return dev;
}

std::string portions_to_csv(const std::vector<ArcticPortion>& list) {
    std::ostringstream out;
    out.precision(15);
    out << "kind,conjectured,t,x,X,Y,slope\n";
    for (const ArcticPortion& p : list)
        for (const CurveSample& s : p.samples)
            out << portion_kind_name(p.kind) << ',' << (p.conjectured ? 1 : 0) << ',' << s.t
                << ',' << s.x << ',' << s.X << ',' << s.Y << ',' << s.slope << '\n';
    return out.str();
}

std::string portions_to_svg(const std::vector<ArcticPortion>& list, double alpha1,
                            const std::vector<TangentLine>& tangents, bool triangular) {
    const double W = 800.0, H = 800.0 / alpha1;
    const double px = W / alpha1;  // same scale on both axes
    auto mapx = [&](double X, double Y) {
        return triangular ? (X - 0.5 * Y) * px : X * px;
    };
    auto mapy = [&](double Y) {
        return H - (triangular ? 0.5 * std::sqrt(3.0) * Y : Y) * px;
    };
    std::ostringstream out;
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    // Y = X guard line
    out << "<line x1=\"" << mapx(0, 0) << "\" y1=\"" << mapy(0) << "\" x2=\"" << mapx(1, 1)
        << "\" y2=\"" << mapy(1) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    int ci = 0;
    for (const ArcticPortion& p : list) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci++ % 6] << "\" stroke-width=\"1.5\""
            << (p.conjectured ? " stroke-dasharray=\"6 3\"" : "") << " points=\"";
        for (const CurveSample& s : p.samples)
            out << mapx(s.X, s.Y) << ',' << mapy(s.Y) << ' ';
        out << "\"/>\n";
    }
    for (const TangentLine& tl : tangents) {
        // segment from the X-intercept (t,0) to the Y=1 level
        const double x1 = tl.t, y1 = 0;
        if (std::abs(tl.slope) < 1e-12)
            continue;
        const double x2 = tl.t + 1.0 / tl.slope, y2 = 1.0;
        out << "<line x1=\"" << mapx(x1, y1) << "\" y1=\"" << mapy(y1) << "\" x2=\""
            << mapx(x2, y2) << "\" y2=\"" << mapy(y2)
            << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace nilp
